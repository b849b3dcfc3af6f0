import json
import subprocess
import sys


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "deltasets", *args],
        capture_output=True,
        text=True,
        timeout=300,
        **kwargs,
    )


def test_analyze_c5_human(tmp_path):
    path = tmp_path / "c5.col"
    path.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
    result = run_cli("analyze", "--input", str(path), "--kmax", "3")
    assert result.returncode == 0
    assert "min_parts_small: 2" in result.stdout
    assert "chromatic: 3" in result.stdout
    assert "✗" not in result.stdout  # no violated bound


def test_analyze_malformed_file_exit_1(tmp_path):
    path = tmp_path / "bad.col"
    path.write_text("p edge 3 1\ne 1 9\n")
    result = run_cli("analyze", "--input", str(path))
    assert result.returncode == 1
    assert "line 2" in result.stderr


def test_analyze_size_limit_marks_skipped():
    result = run_cli(
        "analyze", "--gnp", "n=10,p=0.3,seed=1", "--chromatic-limit", "8", "--emit", "json"
    )
    assert result.returncode == 0
    payload = json.loads(result.stdout.splitlines()[0])
    assert "chromatic" in payload["skipped"]
    assert payload["findings"] == []


def test_analyze_csv_shape():
    result = run_cli("analyze", "--gnp", "n=6,p=0.5,seed=2", "--emit", "csv", "--kmax", "2")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("graph,n,name,target")
    assert len(lines) > 5


def test_verify_exhaustive_small():
    result = run_cli("verify", "--exhaustive", "4", "--kmax", "4", "--emit", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["graphs"] == 64
    assert payload["passed"] == payload["checks"]
    assert payload["findings"] == []


def test_verify_empty_corpus_exit_0():
    result = run_cli("verify", "--gnp", "n=6,p=0.5,count=0,seed=1", "--emit", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["graphs"] == 0 and payload["checks"] == 0


def test_verify_rejects_two_sources():
    result = run_cli("verify", "--exhaustive", "3", "--gnp", "n=4,p=0.5")
    assert result.returncode == 1


def test_scan_single_graph(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("# n=5\n1 2\n2 3\n3 4\n4 5\n5 1\n")
    result = run_cli("scan", "--input", str(path), "--format", "edgelist")
    assert result.returncode == 0
    rec = json.loads(result.stdout.splitlines()[0])
    assert rec["matched_k"] == 1
    assert rec["alpha_parts"] == 2


def test_scan_oversize_graph_skipped():
    result = run_cli("scan", "--gnp", "n=25,p=0.2,seed=1", "--exact-limit", "18")
    assert result.returncode == 0
    rec = json.loads(result.stdout.splitlines()[0])
    assert rec["skipped"] is not None


def test_scan_resume_from():
    full = run_cli("scan", "--exhaustive", "3")
    tail = run_cli("scan", "--exhaustive", "3", "--resume-from", "5")
    assert len(full.stdout.splitlines()) == 8
    assert full.stdout.splitlines()[5:] == tail.stdout.splitlines()


def test_fuzz_lemma_rejects_k_above_r():
    result = run_cli("fuzz-lemma", "--r-min", "3", "--r-max", "3", "--k", "5", "--trials", "5")
    assert result.returncode == 1


def test_fuzz_lemma_zero_trials_ok():
    result = run_cli("fuzz-lemma", "--r-min", "2", "--r-max", "3", "--trials", "0", "--emit", "json")
    assert result.returncode == 0
    for line in result.stdout.splitlines():
        assert json.loads(line)["violations"] == 0


def test_fuzz_lemma_small_campaign():
    result = run_cli(
        "fuzz-lemma", "--r-min", "2", "--r-max", "4", "--trials", "300", "--emit", "json"
    )
    assert result.returncode == 0
    rows = [json.loads(line) for line in result.stdout.splitlines()]
    assert len(rows) == 2 + 3 + 4
    assert all(r["violations"] == 0 for r in rows)
    assert all(abs(r["hill_climb_gap"]) <= 1e-6 for r in rows)


def test_gen_writes_files(tmp_path):
    outdir = tmp_path / "graphs"
    result = run_cli(
        "gen", "--gnp", "n=6,p=0.5,count=3,seed=5", "--out", str(outdir), "--format", "dimacs"
    )
    assert result.returncode == 0
    files = sorted(outdir.glob("*.col"))
    assert len(files) == 3
    check = run_cli("analyze", "--input", str(files[0]), "--emit", "json")
    assert check.returncode == 0


def test_gen_single_to_stdout():
    result = run_cli("gen", "--regular", "n=6,r=2,seed=1", "--format", "edgelist")
    assert result.returncode == 0
    assert result.stdout.startswith("# n=6")


def test_jobs_flag_gives_identical_output():
    args = ("analyze", "--gnp", "n=6,p=0.5,count=6,seed=9", "--emit", "json", "--kmax", "3")
    seq = run_cli(*args, "--jobs", "1")
    par = run_cli(*args, "--jobs", "2")
    assert seq.returncode == par.returncode == 0
    assert seq.stdout == par.stdout


def test_jobs_flag_verify_and_scan_identical():
    vargs = ("verify", "--gnp", "n=7,p=0.5,count=6,seed=3", "--emit", "json", "--kmax", "3")
    assert run_cli(*vargs, "--jobs", "1").stdout == run_cli(*vargs, "--jobs", "2").stdout
    sargs = ("scan", "--exhaustive", "4")
    assert run_cli(*sargs, "--jobs", "1").stdout == run_cli(*sargs, "--jobs", "2").stdout


def test_exact_limit_env_override(tmp_path):
    import os

    env = dict(os.environ)
    env["DELTASETS_EXACT_LIMIT"] = "4"
    result = run_cli("analyze", "--gnp", "n=6,p=0.5,seed=1", "--emit", "json", env=env)
    assert result.returncode == 0
    payload = json.loads(result.stdout.splitlines()[0])
    assert "min_parts" in payload["skipped"]
