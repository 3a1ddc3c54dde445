"""Brute-force references for cross-checking the pipeline at desk scale.

Nothing here calls the separation oracles, the max-flow code, the Gomory-Hu
construction or the T-join module; agreement with the pipeline is evidence,
not tautology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linprog

from . import _kernels, rational_lp
from .graph import Graph, metric_completion

HELD_KARP_MAX_N = 18
ENUMERATE_LP_MAX_N = 10
NARROW_CUT_MAX_N = 12
TJOIN_MAX_EDGES = 18
MATCHING_MAX_POINTS = 10


class OracleLimitError(ValueError):
    """Instance exceeds an oracle's enumeration budget."""


@dataclass(frozen=True)
class OptResult:
    cost: int
    order: tuple[int, ...]


def held_karp_opt(g: Graph, *, max_n: int = HELD_KARP_MAX_N) -> OptResult:
    """Exact OPT(G): DP over (visited set, last vertex) in the metric completion."""
    if g.n > max_n:
        raise OracleLimitError(f"held_karp_opt: n={g.n} > {max_n}")
    cost, order = _kernels.held_karp(metric_completion(g), g.s, g.t)
    return OptResult(int(cost), tuple(order))


def permutation_opt(g: Graph) -> int:
    """OPT(G) by trying every order of the inner vertices."""
    d = metric_completion(g)
    inner = [v for v in range(g.n) if v not in (g.s, g.t)]
    best = None
    for perm in itertools.permutations(inner):
        path = (g.s, *perm, g.t)
        c = sum(d[a][b] for a, b in zip(path, path[1:]))
        best = c if best is None else min(best, c)
    return best


# -- set systems ------------------------------------------------------------


def set_partition_labels(n: int) -> np.ndarray:
    """All set partitions of ``range(n)`` as restricted-growth label rows."""
    labels = np.zeros((1, 1), dtype=np.int8)
    top = np.zeros(1, dtype=np.int8)
    for i in range(1, n):
        parts, tops = [], []
        for c in range(i + 1):
            ok = top >= c - 1
            if not ok.any():
                continue
            rows = labels[ok]
            parts.append(np.hstack([rows, np.full((len(rows), 1), c, dtype=np.int8)]))
            tops.append(np.maximum(top[ok], c))
        labels = np.vstack(parts)
        top = np.concatenate(tops)
    return labels


def iter_partitions(n: int) -> Iterable[list[list[int]]]:
    for row in set_partition_labels(n):
        blocks: dict[int, list[int]] = {}
        for v, lab in enumerate(row):
            blocks.setdefault(int(lab), []).append(v)
        yield [blocks[k] for k in sorted(blocks)]


def subset_membership(n: int) -> np.ndarray:
    """Row ``mask`` holds the bits of ``mask`` over ``range(n)``."""
    masks = np.arange(1 << n, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n)) & 1).astype(bool)


def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    us = np.array([u for u, _ in g.edges], dtype=np.int64)
    vs = np.array([v for _, v in g.edges], dtype=np.int64)
    return us, vs


def relaxation_rows(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Every partition row and every even-cut row, duplicates merged.

    Returns a 0/1 matrix over edges and the right-hand sides; among rows with
    identical coefficients only the largest right-hand side is kept.
    """
    us, vs = _edge_arrays(g)
    labels = set_partition_labels(g.n)
    A_part = labels[:, us] != labels[:, vs]
    b_part = labels.max(axis=1).astype(np.int64)  # blocks - 1

    mem = subset_membership(g.n)[1:-1]
    even = mem[:, g.s] == mem[:, g.t]
    mem = mem[even]
    A_even = mem[:, us] != mem[:, vs]
    b_even = np.full(len(mem), 2, dtype=np.int64)

    A = np.vstack([A_part, A_even])
    b = np.concatenate([b_part, b_even])
    return _merge_rows(A, b)


def _merge_rows(A: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    packed = np.packbits(A, axis=1)
    keys = np.ascontiguousarray(packed).view(np.dtype((np.void, packed.shape[1]))).ravel()
    order = np.lexsort((-b, keys))
    keys_sorted = keys[order]
    first = np.ones(len(order), dtype=bool)
    first[1:] = keys_sorted[1:] != keys_sorted[:-1]
    keep = np.sort(order[first])
    return A[keep], b[keep]


def exact_lp_over_rows(
    A: np.ndarray, b: np.ndarray, upper: int | None, *, batch: int = 40
) -> tuple[tuple[Fraction, ...], Fraction]:
    """Exact optimum of ``min sum(x)  s.t.  A x >= b,  0 <= x <= upper``.

    Every row of ``A`` is checked on every round; only the LPs are kept small.
    HiGHS solves the LP over an active row set, the ``batch`` most violated
    rows of the full matrix join it, and this repeats until no row is violated
    in floating point.  The exact simplex then solves the LP over the active
    rows that are tight or carry dual weight, and its solution is checked
    exactly against all rows (violated ones are added and the exact solve
    repeated).  An optimum of a row subset that satisfies every row is an
    optimum of the full LP.  The final objective must also match HiGHS on the
    same rows.
    """
    m = A.shape[1]
    Af = A.astype(np.float64)
    active: list[int] = []
    x = np.zeros(m)
    duals = np.zeros(0)
    while True:
        gap = b - Af @ x
        violated = np.flatnonzero(gap > 1e-9)
        if len(violated) == 0:
            break
        worst = violated[np.lexsort((violated, -gap[violated]))][:batch]
        active.extend(worst.tolist())
        res = linprog(
            np.ones(m),
            A_ub=-Af[active],
            b_ub=-b[active].astype(np.float64),
            bounds=(0, upper),
            method="highs",
        )
        if res.status != 0:  # pragma: no cover
            raise RuntimeError(f"HiGHS failed: {res.message}")
        x = res.x
        duals = np.abs(res.ineqlin.marginals)

    tight = Af[active] @ x - b[active] < 1e-9
    rows = sorted(i for i, y, tt in zip(active, duals, tight) if y > 1e-9 or tt)
    in_rows = set(rows)
    while True:
        lp = rational_lp.LinearProgram(
            m, [1] * m, [(A[i].astype(int).tolist(), int(b[i])) for i in rows], [0] * m, [upper] * m
        )
        sol = rational_lp.solve(lp)
        if sol.status is not rational_lp.Status.OPTIMAL:  # pragma: no cover
            raise RuntimeError(f"restricted LP is {sol.status.value}")
        exact = tuple(sol.values)
        D = 1
        for v in exact:
            D = lcm(D, v.denominator)
        xi = [int(v * D) for v in exact]
        if D * 2 * m < 1 << 62:
            lhs = A.astype(np.int64) @ np.array(xi, dtype=np.int64)
        else:
            lhs = A.astype(object) @ np.array(xi, dtype=object)
        short = b * D - lhs
        violated = [i for i in np.flatnonzero(short > 0).tolist() if i not in in_rows]
        if not violated:
            # optimality comes from a second solver, not only the shared simplex
            res = linprog(
                np.ones(m), A_ub=-Af[rows], b_ub=-b[rows].astype(np.float64), bounds=(0, upper), method="highs"
            )
            if res.status != 0 or abs(res.fun - float(sol.objective)) > 1e-6:
                raise RuntimeError(f"exact optimum {sol.objective} disagrees with HiGHS {res.fun}")
            return exact, sol.objective
        violated.sort(key=lambda i: (-short[i], i))
        rows = sorted(in_rows.union(violated[:batch]))
        in_rows = set(rows)


def enumerate_lp(g: Graph, *, max_n: int = ENUMERATE_LP_MAX_N) -> tuple[tuple[Fraction, ...], Fraction]:
    """The path-TSP relaxation with all of its rows written out."""
    if g.n > max_n:
        raise OracleLimitError(f"enumerate_lp: n={g.n} > {max_n}")
    A, b = relaxation_rows(g)
    return exact_lp_over_rows(A, b, 2)


def tjoin_lp_value(g: Graph, T: Iterable[int], *, max_n: int = ENUMERATE_LP_MAX_N) -> Fraction:
    """Optimum of ``min sum(x)  s.t.  x(delta(S)) >= 1`` for all T-odd S, ``x >= 0``."""
    if g.n > max_n:
        raise OracleLimitError(f"tjoin_lp_value: n={g.n} > {max_n}")
    T = sorted(set(T))
    if not T:
        return Fraction(0)
    us, vs = _edge_arrays(g)
    mem = subset_membership(g.n)[1:-1]
    odd = mem[:, T].sum(axis=1) % 2 == 1
    mem = mem[odd]
    A, b = _merge_rows(mem[:, us] != mem[:, vs], np.ones(len(mem), dtype=np.int64))
    return exact_lp_over_rows(A, b, None)[1]


# -- cuts, joins, matchings -------------------------------------------------


def _cut_value(g: Graph, x: Sequence[Fraction], S: frozenset[int]) -> Fraction:
    total = Fraction(0)
    for (u, v), c in zip(g.edges, x):
        if (u in S) != (v in S):
            total += c
    return total


def brute_narrow_cuts(g: Graph, x: Sequence[Fraction], *, max_n: int = NARROW_CUT_MAX_N) -> list[frozenset[int]]:
    """Every S with s in S, t not in S and x(delta(S)) < 2, by enumeration."""
    if g.n > max_n:
        raise OracleLimitError(f"brute_narrow_cuts: n={g.n} > {max_n}")
    inner = [v for v in range(g.n) if v not in (g.s, g.t)]
    out = []
    for r in range(len(inner) + 1):
        for extra in itertools.combinations(inner, r):
            S = frozenset((g.s, *extra))
            if _cut_value(g, x, S) < 2:
                out.append(S)
    return sorted(out, key=lambda S: (len(S), sorted(S)))


def brute_tjoin(g: Graph, T: Iterable[int], *, max_edges: int = TJOIN_MAX_EDGES) -> int:
    """Minimum |F| over all edge subsets whose odd-degree set is exactly T."""
    if g.m > max_edges:
        raise OracleLimitError(f"brute_tjoin: m={g.m} > {max_edges}")
    target = sum(1 << v for v in set(T))
    odd = np.zeros(1, dtype=np.int64)
    size = np.zeros(1, dtype=np.int64)
    for u, v in g.edges:
        odd = np.concatenate([odd, odd ^ ((1 << u) | (1 << v))])
        size = np.concatenate([size, size + 1])
    hits = size[odd == target]
    if len(hits) == 0:  # pragma: no cover - connected graphs always have a T-join
        raise ValueError("no T-join exists")
    return int(hits.min())


def brute_matching(points: Iterable[int], dist: Sequence[Sequence[int]], *, max_points: int = MATCHING_MAX_POINTS) -> int:
    """Minimum perfect-matching weight by enumerating all pairings."""
    pts = sorted(set(points))
    if len(pts) > max_points:
        raise OracleLimitError(f"brute_matching: {len(pts)} points > {max_points}")
    if len(pts) % 2:
        raise ValueError("odd number of points")

    def best(rest: tuple[int, ...]) -> int:
        if not rest:
            return 0
        a = rest[0]
        return min(
            dist[a][b] + best(rest[1:i] + rest[i + 1 :]) for i, b in enumerate(rest[1:], 1)
        )

    return best(tuple(pts))


def odd_st_cuts_with_odd_crossing(
    g: Graph, T: Iterable[int], edge_set: Iterable[int], *, max_n: int = ENUMERATE_LP_MAX_N
) -> list[frozenset[int]]:
    """T-odd s-t cuts S where ``|delta(S) & edge_set|`` is odd (should be none)."""
    if g.n > max_n:
        raise OracleLimitError(f"parity check: n={g.n} > {max_n}")
    T = set(T)
    chosen = [g.edges[i] for i in edge_set]
    inner = [v for v in range(g.n) if v not in (g.s, g.t)]
    bad = []
    for r in range(len(inner) + 1):
        for extra in itertools.combinations(inner, r):
            S = frozenset((g.s, *extra))
            if len(S & T) % 2 == 0:
                continue
            crossing = sum(1 for u, v in chosen if (u in S) != (v in S))
            if crossing % 2:
                bad.append(S)
    return bad


def relaxation_violations(g: Graph, x: Sequence[Fraction]) -> int:
    """Number of relaxation rows violated by ``x``, checked row by row."""
    A, b = relaxation_rows(g)
    D = 1
    for v in x:
        D = lcm(D, Fraction(v).denominator)
    xi = [int(Fraction(v) * D) for v in x]
    if D * 2 * max(g.m, 1) < 1 << 62:
        lhs = A.astype(np.int64) @ np.array(xi, dtype=np.int64)
    else:
        lhs = A.astype(object) @ np.array(xi, dtype=object)
    return int((lhs < b * D).sum())
