"""Command-line front door.

Subcommands: analyze (per-graph invariant and bound tables), verify (run the
inequality suites over a corpus), scan (stream staircase-gap records as JSON
lines), fuzz-lemma (rational simplex-inequality search), gen (write generated
graphs to files).

Exit codes: 0 success, 1 usage or parse error, 2 size-limit refusal,
3 re-verified finding (an inequality that should always hold was violated).
All output is deterministic for a fixed command line and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import bounds as bounds_mod
from .errors import DeltaSetsError, ParseError, SizeLimitError
from .graphs import (
    Graph,
    emit_dimacs,
    emit_edge_list,
    enumerate_graphs,
    gen_gnp,
    gen_regular,
    parse_dimacs,
    parse_edge_list,
)
from .partition import CHROMATIC_LIMIT, CLIQUE_LIMIT, DEFAULT_EXACT_LIMIT

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SIZE_LIMIT = 2
EXIT_FINDING = 3

ENV_EXACT_LIMIT = "DELTASETS_EXACT_LIMIT"


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on usage errors; this tool reserves 2 for
    size-limit refusals, so remap usage problems to exit 1."""

    def error(self, message: str):  # noqa: D401 - argparse hook
        self.print_usage(sys.stderr)
        raise SystemExit(_fail(message))


def _fail(message: str, code: int = EXIT_USAGE) -> int:
    print(f"deltasets: error: {message}", file=sys.stderr)
    return code


@dataclass
class RunConfig:
    command: str
    source: str  # "input" | "gnp" | "regular" | "exhaustive"
    source_spec: str
    graphs: list[tuple[str, Graph]]
    k_max: int
    exact_limit: int
    clique_limit: int
    chromatic_limit: int
    stabilization_limit: int
    jobs: int
    emit: str
    out: str | None


def _parse_kv_spec(spec: str, fields: dict[str, type], where: str) -> dict:
    out: dict = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"{where}: expected key=value, got {item!r}")
        key, _, raw = item.partition("=")
        key = key.strip()
        if key not in fields:
            raise ValueError(f"{where}: unknown key {key!r}")
        try:
            out[key] = fields[key](raw.strip())
        except ValueError:
            raise ValueError(f"{where}: bad value for {key}: {raw!r}") from None
    return out


def _read_graph_file(path: str, fmt: str) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    if fmt == "auto":
        fmt = "dimacs" if path.endswith((".col", ".dimacs", ".clq")) else "edgelist"
    if fmt == "dimacs":
        return parse_dimacs(text)
    return parse_edge_list(text)


def _build_corpus(args: argparse.Namespace) -> tuple[str, str, list[tuple[str, Graph]]]:
    """Resolve the single input source into an id-tagged graph list."""
    sources = [
        s for s in ("input", "gnp", "regular", "exhaustive") if getattr(args, s, None) is not None
    ]
    if len(sources) != 1:
        raise ValueError("exactly one of --input/--gnp/--regular/--exhaustive is required")
    source = sources[0]
    default_seed = args.seed

    if source == "input":
        g = _read_graph_file(args.input, args.format)
        name = Path(args.input).stem
        return source, args.input, [(name, g)]

    if source == "exhaustive":
        n = args.exhaustive
        graphs = [(f"all-n{n}-{i}", g) for i, g in enumerate(enumerate_graphs(n))]
        return source, str(n), graphs

    if source == "gnp":
        spec = _parse_kv_spec(
            args.gnp, {"n": int, "p": float, "count": int, "seed": int}, "--gnp"
        )
        if "n" not in spec or "p" not in spec:
            raise ValueError("--gnp needs at least n=<int>,p=<float>")
        count = spec.get("count", 1)
        seed = spec.get("seed", default_seed)
        n, p = spec["n"], spec["p"]
        graphs = [
            (f"gnp-n{n}-p{p}-s{seed}-{i:04d}", gen_gnp(n, p, seed + i)) for i in range(count)
        ]
        return source, args.gnp, graphs

    spec = _parse_kv_spec(
        args.regular, {"n": int, "r": int, "count": int, "seed": int}, "--regular"
    )
    if "n" not in spec or "r" not in spec:
        raise ValueError("--regular needs at least n=<int>,r=<int>")
    count = spec.get("count", 1)
    seed = spec.get("seed", default_seed)
    n, r = spec["n"], spec["r"]
    graphs = [
        (f"reg-n{n}-r{r}-s{seed}-{i:04d}", gen_regular(n, r, seed + i)) for i in range(count)
    ]
    return source, args.regular, graphs


def _add_corpus_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="read one graph from PATH")
    p.add_argument(
        "--format",
        choices=("auto", "dimacs", "edgelist"),
        default="auto",
        help="file format for --input and gen output (default: by extension)",
    )
    p.add_argument("--gnp", metavar="SPEC", help="n=..,p=..[,count=..][,seed=..]")
    p.add_argument("--regular", metavar="SPEC", help="n=..,r=..[,count=..][,seed=..]")
    p.add_argument("--exhaustive", metavar="N", type=int, help="every labeled graph on N vertices")
    p.add_argument("--seed", type=int, default=0, help="default seed for generator specs")


def _add_limit_options(p: argparse.ArgumentParser) -> None:
    env_limit = os.environ.get(ENV_EXACT_LIMIT)
    p.add_argument(
        "--kmax", type=int, default=8, help="largest exponent in curves and bound tables"
    )
    p.add_argument(
        "--exact-limit",
        type=int,
        default=int(env_limit) if env_limit else DEFAULT_EXACT_LIMIT,
        help=f"largest n solved exactly (env {ENV_EXACT_LIMIT} overrides the default)",
    )
    p.add_argument("--clique-limit", type=int, default=CLIQUE_LIMIT)
    p.add_argument("--chromatic-limit", type=int, default=CHROMATIC_LIMIT)
    p.add_argument("--stabilization-limit", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for per-graph work")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def _emit_text(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json_line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# analyze


def _report_worker(payload):
    (gid, adj), kwargs = payload
    report = bounds_mod.build_report(Graph(adj), gid, **kwargs)
    return bounds_mod.report_to_dict(report)


def _analyze_reports(cfg: RunConfig) -> list[dict]:
    kwargs = dict(
        k_max=cfg.k_max,
        exact_limit=cfg.exact_limit,
        clique_limit=cfg.clique_limit,
        chromatic_limit=cfg.chromatic_limit,
        stabilization_limit=cfg.stabilization_limit,
    )
    if cfg.jobs > 1 and len(cfg.graphs) > 1:
        payloads = [((gid, g.adj), kwargs) for gid, g in cfg.graphs]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_report_worker, payloads, chunksize=16))
    return [_report_worker(((gid, g.adj), kwargs)) for gid, g in cfg.graphs]


def _human_report(d: dict) -> str:
    lines = [f"graph {d['graph']}  n={d['n']} edges={d['edges']}"]
    lines.append("  degrees: " + ",".join(str(x) for x in d["degrees"]))
    for key in sorted(d["exact"]):
        lines.append(f"  {key}: {d['exact'][key]}")
    for key in sorted(d["skipped"]):
        lines.append(f"  {key}: skipped ({d['skipped'][key]})")
    lines.append("  bounds:")
    for row in d["bounds"]:
        if not row["applicable"]:
            mark = "n/a"
        elif row["satisfied"] is None:
            mark = " ? "
        elif row["satisfied"]:
            mark = " ✓ "
        else:
            mark = " ✗ "
        value = "" if row["value"] is None else f" value={row['value']}"
        lines.append(
            f"    [{mark}] {row['name']} -> {row['target']}{value}  ({row['justification']})"
        )
    if d["findings"]:
        lines.append("  FINDINGS: " + ", ".join(d["findings"]))
    return "\n".join(lines) + "\n"


def _cmd_analyze(args: argparse.Namespace) -> int:
    cfg = _make_config("analyze", args)
    reports = _analyze_reports(cfg)
    if cfg.emit == "json":
        text = "".join(_json_line(d) + "\n" for d in reports)
    elif cfg.emit == "csv":
        rows = [bounds_mod.CSV_HEADER]
        for d in reports:
            for row in d["bounds"]:
                sat = "" if row["satisfied"] is None else str(row["satisfied"]).lower()
                just = str(row["justification"]).replace('"', "'")
                rows.append(
                    f"{d['graph']},{d['n']},{row['name']},{row['target']},"
                    f"{row['value']},{str(row['applicable']).lower()},{sat},\"{just}\""
                )
        text = "\n".join(rows) + "\n"
    else:
        text = "".join(_human_report(d) for d in reports)
    _emit_text(text, cfg.out)
    if any(d["findings"] for d in reports):
        # a finding only sets the exit code after a from-scratch recomputation
        from .partition import _min_parts_by_degrees

        _min_parts_by_degrees.cache_clear()
        if any(d["findings"] for d in _analyze_reports(cfg)):
            return EXIT_FINDING
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _make_config("verify", args)
    summary = bounds_mod.verify_corpus(
        cfg.graphs,
        k_max=cfg.k_max,
        exact_limit=cfg.exact_limit,
        clique_limit=cfg.clique_limit,
        chromatic_limit=cfg.chromatic_limit,
        stabilization_limit=cfg.stabilization_limit,
        jobs=cfg.jobs,
    )
    payload = {
        "command": "verify",
        "source": {"kind": cfg.source, "spec": cfg.source_spec},
        "graphs": summary.graphs,
        "checks": summary.checks,
        "passed": summary.passed,
        "suites": {name: {"run": run, "passed": ok} for name, (run, ok) in sorted(summary.suites.items())},
        "findings": [
            {
                "graph": f.graph_id,
                "suite": f.suite,
                "detail": f.detail,
                "edges": [list(e) for e in f.edges],
            }
            for f in summary.findings
        ],
    }
    if cfg.emit == "json":
        text = _json_line(payload) + "\n"
    else:
        lines = [f"graphs checked: {summary.graphs}"]
        for name in sorted(summary.suites):
            run, ok = summary.suites[name]
            lines.append(f"suite {name}: {ok}/{run}")
        if summary.findings:
            lines.append("FINDINGS:")
            for f in summary.findings:
                lines.append(f"  {f.graph_id} [{f.suite}] {f.detail}")
                lines.append(f"    edges: {f.edges}")
        else:
            lines.append(f"all {summary.checks} checks passed")
        text = "\n".join(lines) + "\n"
    _emit_text(text, cfg.out)
    return EXIT_FINDING if summary.findings else EXIT_OK


# ---------------------------------------------------------------------------
# scan


def _cmd_scan(args: argparse.Namespace) -> int:
    cfg = _make_config("scan", args)
    graphs = cfg.graphs
    if args.resume_from:
        graphs = graphs[args.resume_from :]
    lines = []
    gaps = 0
    skipped = 0
    for rec in bounds_mod.scan_records(graphs, exact_limit=cfg.exact_limit, jobs=cfg.jobs):
        lines.append(_json_line(bounds_mod.scan_record_to_dict(rec)))
        if rec.skipped:
            skipped += 1
        elif rec.matched_k is None:
            gaps += 1
    text = "\n".join(lines) + ("\n" if lines else "")
    _emit_text(text, cfg.out)
    print(
        f"scan: {len(graphs)} graphs, {gaps} gap candidate(s), {skipped} skipped",
        file=sys.stderr,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# fuzz-lemma


def _cmd_fuzz_lemma(args: argparse.Namespace) -> int:
    if args.r_min < 2:
        return _fail("--r-min must be at least 2")
    if args.r_max < args.r_min:
        return _fail("--r-max must be at least --r-min")
    results = []
    violations = 0
    for r in range(args.r_min, args.r_max + 1):
        ks: Sequence[int]
        if args.k is not None:
            if args.k > r:
                return _fail(f"exponent k={args.k} exceeds r={r}")
            ks = [args.k]
        else:
            ks = range(1, r + 1)
        for k in ks:
            res = bounds_mod.simplex_fuzz(
                r, k, args.trials, seed=args.seed, denominator=args.denominator
            )
            start = None
            if res.max_point is not None:
                start = [float(b) for b in res.max_point.betas]
            climbed = bounds_mod.simplex_hill_climb(r, k, start=start, seed=args.seed)
            bound_f = float(res.bound)
            results.append(
                {
                    "r": r,
                    "k": k,
                    "trials": res.trials,
                    "bound": f"{res.bound.numerator}/{res.bound.denominator}",
                    "max_lhs": None
                    if res.max_lhs is None
                    else f"{res.max_lhs.numerator}/{res.max_lhs.denominator}",
                    "hill_climb": round(climbed, 12),
                    "hill_climb_gap": round(bound_f - climbed, 12),
                    "violations": len(res.violations),
                }
            )
            violations += len(res.violations)
    if args.emit == "json":
        text = "".join(_json_line(r) + "\n" for r in results)
    else:
        lines = []
        for r in results:
            lines.append(
                f"r={r['r']} k={r['k']} trials={r['trials']} max={r['max_lhs']} "
                f"bound={r['bound']} climb_gap={r['hill_climb_gap']} "
                f"violations={r['violations']}"
            )
        lines.append(f"total violations: {violations}")
        text = "\n".join(lines) + "\n"
    _emit_text(text, args.out)
    return EXIT_FINDING if violations else EXIT_OK


# ---------------------------------------------------------------------------
# gen


def _cmd_gen(args: argparse.Namespace) -> int:
    source, spec, graphs = _build_corpus(args)
    fmt = args.format
    if fmt == "auto":
        fmt = "edgelist"
    render = emit_dimacs if fmt == "dimacs" else emit_edge_list
    ext = "col" if fmt == "dimacs" else "txt"
    if args.out is None:
        if len(graphs) != 1:
            return _fail("--out DIR is required when generating more than one graph")
        sys.stdout.write(render(graphs[0][1]))
        return EXIT_OK
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for gid, g in graphs:
        (outdir / f"{gid}.{ext}").write_text(render(g), encoding="utf-8")
    print(f"gen: wrote {len(graphs)} file(s) to {outdir}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------


def _make_config(command: str, args: argparse.Namespace) -> RunConfig:
    source, spec, graphs = _build_corpus(args)
    return RunConfig(
        command=command,
        source=source,
        source_spec=spec,
        graphs=graphs,
        k_max=args.kmax,
        exact_limit=args.exact_limit,
        clique_limit=args.clique_limit,
        chromatic_limit=args.chromatic_limit,
        stabilization_limit=args.stabilization_limit,
        jobs=args.jobs,
        emit=getattr(args, "emit", "human"),
        out=args.out,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="deltasets", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="invariant and bound table per graph")
    _add_corpus_options(p_analyze)
    _add_limit_options(p_analyze)
    p_analyze.add_argument("--emit", choices=("json", "csv", "human"), default="human")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_verify = sub.add_parser("verify", help="run the inequality suites over a corpus")
    _add_corpus_options(p_verify)
    _add_limit_options(p_verify)
    p_verify.add_argument("--emit", choices=("json", "human"), default="human")
    p_verify.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser("scan", help="stream staircase-gap records as JSON lines")
    _add_corpus_options(p_scan)
    _add_limit_options(p_scan)
    p_scan.add_argument("--resume-from", type=int, default=0, metavar="N",
                        help="skip the first N graphs (JSON lines already emitted)")
    p_scan.set_defaults(func=_cmd_scan)

    p_fuzz = sub.add_parser("fuzz-lemma", help="rational simplex-inequality search")
    p_fuzz.add_argument("--r-min", type=int, default=2)
    p_fuzz.add_argument("--r-max", type=int, default=8)
    p_fuzz.add_argument("--k", type=int, default=None, help="single exponent (default: all k <= r)")
    p_fuzz.add_argument("--trials", type=int, default=10000)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--denominator", type=int, default=bounds_mod.DEFAULT_DENOMINATOR)
    p_fuzz.add_argument("--emit", choices=("json", "human"), default="human")
    p_fuzz.add_argument("--out", metavar="PATH")
    p_fuzz.set_defaults(func=_cmd_fuzz_lemma)

    p_gen = sub.add_parser("gen", help="generate graphs and write them to files")
    _add_corpus_options(p_gen)
    p_gen.add_argument("--out", metavar="DIR")
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(str(exc))
    except SizeLimitError as exc:
        return _fail(str(exc), EXIT_SIZE_LIMIT)
    except (ValueError, OSError) as exc:
        return _fail(str(exc))
    except DeltaSetsError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
