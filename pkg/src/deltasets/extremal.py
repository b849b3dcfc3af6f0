"""Largest smallness-feasible set sizes and stabilization indices.

The largest delta-k-small set is found by a sorted-prefix rule: order the
vertices by ascending degree and take the longest prefix that passes the
predicate. Replacing any member of a feasible set by an unused lower-degree
vertex can only lower the power mean, so some maximum-size set is always a
prefix; the same exchange argument covers the pointwise 'small' kind.

As the exponent grows the power mean climbs toward the maximum member degree,
so the delta-k family of feasible sets shrinks with k and the maximum size is
non-increasing, reaching the plain-small maximum at a finite exponent. The
index where the two predicates coincide for *every* subset is computed
exhaustively in ``stabilization_index``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SizeLimitError, StabilizationError
from .graphs import Graph

STABILIZATION_LIMIT = 18


@dataclass(frozen=True)
class SizeCurve:
    """Maximum delta-k-small set sizes for exponents 1..len(values).

    values[i] is the size at exponent i+1; the sequence is non-increasing and
    equals ``plateau`` (the maximum small-set size) for every exponent at or
    beyond ``stable_k``.
    """

    values: tuple[int, ...]
    plateau: int
    stable_k: int

    def at(self, k: int) -> int:
        if k < 1:
            raise ValueError("exponent must be >= 1")
        return self.values[k - 1] if k <= len(self.values) else self.plateau


def degree_order(g: Graph) -> tuple[int, ...]:
    """Vertex ids sorted by ascending degree, ties broken by ascending id."""
    return tuple(sorted(range(g.n), key=lambda v: (g.degrees[v], v)))


def max_small_size(g: Graph) -> int:
    """Largest size of a small set: the longest prefix with d(v_s) <= n - s."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    degs = sorted(g.degrees)
    n = g.n
    best = 0
    for s in range(1, n + 1):
        if degs[s - 1] <= n - s:
            best = s
    return best


def max_delta_small_size(g: Graph, k: int) -> int:
    """Largest size of a delta-k-small set, by the sorted-prefix rule.

    Always at least 1: a singleton has degree at most n - 1.
    """
    if k < 1:
        raise ValueError("exponent must be >= 1")
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    degs = sorted(g.degrees)
    n = g.n
    best = 0
    running = 0
    for s in range(1, n + 1):
        running += degs[s - 1] ** k
        if running <= s * (n - s) ** k:
            best = s
    return best


def _prefix_cap(g: Graph) -> int:
    """Certified exponent beyond which every non-small degree prefix fails the
    power-mean test: past it the prefix rule returns the plain-small maximum."""
    degs = sorted(g.degrees)
    n = g.n
    cap = 1
    for s in range(1, n + 1):
        top = degs[s - 1]
        if top <= n - s or top == 0:
            continue
        # the prefix mean is at least top * s**(-1/k); solve for the k forcing
        # it above top - 1/2, which integer rounding turns into a refutation
        need = 1 + math.ceil(math.log(s) / math.log(top / (top - 0.5)))
        cap = max(cap, need + 1)
    return cap


def size_curve(g: Graph, k_max: int, hard_cap: int | None = None) -> SizeCurve:
    """Maximum delta-k-small sizes for k = 1..max(k_max, stabilization).

    Every entry is evaluated directly from the prefix rule. The search for the
    stabilization exponent always terminates; the hard cap exists only to turn
    a would-be infinite loop into a loud error.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    plateau = max_small_size(g)
    if hard_cap is None:
        hard_cap = max(64, 2 * _prefix_cap(g), k_max)
    values: list[int] = []
    stable: int | None = None
    k = 1
    while stable is None or k <= k_max:
        v = max_delta_small_size(g, k)
        values.append(v)
        if stable is None and v == plateau:
            stable = k
        if stable is None and k >= hard_cap:
            raise StabilizationError(
                f"size curve still above {plateau} at exponent {k}: tail {values[-5:]}"
            )
        k += 1
    return SizeCurve(tuple(values), plateau, stable)


def stabilization_index(g: Graph, limit: int = STABILIZATION_LIMIT) -> int:
    """Least exponent k* such that for all k >= k*, every delta-k-small set is small.

    Checks all 2**n subsets: for each non-small subset the exponents at which
    it still passes the power-mean test form a prefix 1..K (the power mean is
    non-decreasing in k), so k* is one past the largest such K. The inner loop
    is guaranteed to stop because the power mean converges to the maximum
    member degree, which exceeds the fixed threshold n - |W|; an explicit
    per-subset cap asserts that.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.n > limit:
        raise SizeLimitError(f"stabilization search capped at n={limit} (got {g.n})")
    n = g.n
    degrees = g.degrees
    best = 1
    for mask in range(1, 1 << n):
        degs = []
        m = mask
        top = 0
        while m:
            bit = m & -m
            d = degrees[bit.bit_length() - 1]
            degs.append(d)
            if d > top:
                top = d
            m ^= bit
        size = len(degs)
        t = n - size
        if top <= t:
            continue  # small sets are never violators
        if t == 0:
            continue  # positive power sum can never fit a zero threshold
        cap = 2 + math.ceil(math.log(size) / math.log(top / (top - 0.5))) if size > 1 else 1
        powers = list(degs)
        k = 1
        last_ok = 0
        while sum(powers) <= size * t**k:
            last_ok = k
            k += 1
            if k > cap + 2:
                raise StabilizationError(
                    f"subset {mask:#x} still passes the power-mean test at k={k}"
                )
            powers = [p * d for p, d in zip(powers, degs)]
        if last_ok + 1 > best:
            best = last_ok + 1
    return best
