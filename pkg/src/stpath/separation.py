"""Separation oracles for the path-TSP relaxation and the cutting-plane loop.

The relaxation, over edge variables ``x`` of a graph with terminals s, t::

    min  sum(x)
    s.t. x(delta(W)) >= |W| - 1   for every partition W of V
         x(delta(S)) >= 2         for every S with |S & {s,t}| even, {} < S < V
         0 <= x <= 2
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _kernels, rational_lp
from .flow import min_cut, scale_to_int
from .graph import Graph

log = logging.getLogger(__name__)

# set partitions are searched exhaustively (subset DP, 3^n work)
PARTITION_MAX_N = 12

FractionalSolution = tuple[Fraction, ...]


class SeparationLimitError(ValueError):
    """Instance is larger than the exhaustive partition-separation threshold."""


@dataclass(frozen=True)
class ViolatedConstraint:
    kind: str  # "partition" or "even-cut"
    payload: tuple  # partition: tuple of blocks; even-cut: the vertex set
    lhs: Fraction
    rhs: Fraction

    def __post_init__(self) -> None:
        if not self.lhs < self.rhs:
            raise ValueError("a violated constraint needs lhs < rhs")

    def row(self, g: Graph) -> list[int]:
        """0/1 edge coefficients of the constraint."""
        if self.kind == "even-cut":
            S = set(self.payload)
            return [int((u in S) != (v in S)) for u, v in g.edges]
        label = {v: i for i, block in enumerate(self.payload) for v in block}
        return [int(label[u] != label[v]) for u, v in g.edges]


def check_solution(g: Graph, x: Sequence[Fraction]) -> None:
    if len(x) != g.m:
        raise ValueError(f"solution has {len(x)} entries for {g.m} edges")
    if any(not 0 <= v <= 2 for v in x):
        raise ValueError("solution entries must lie in [0, 2]")


def separate_even_cuts(g: Graph, x: Sequence[Fraction]) -> ViolatedConstraint | None:
    """Most violated ``x(delta(S)) >= 2`` with ``|S & {s,t}|`` even, or None.

    s and t are merged into one node z; a min v-z cut for every other vertex v
    covers every even cut (orient it to the side without z).
    """
    check_solution(g, x)
    caps, D = scale_to_int(x)
    others = [v for v in range(g.n) if v not in (g.s, g.t)]
    node = {v: i for i, v in enumerate(others)}
    z = len(others)
    node[g.s] = node[g.t] = z
    arcs = [(node[u], node[v], c) for (u, v), c in zip(g.edges, caps) if c]
    best = None
    for v in others:
        value, side = min_cut(z + 1, arcs, node[v], z)
        if value >= 2 * D:
            continue
        S = tuple(sorted(others[i] for i in side))
        key = (value, S)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    value, S = best
    return ViolatedConstraint("even-cut", S, Fraction(value, D), Fraction(2))


def separate_partitions(
    g: Graph, x: Sequence[Fraction], *, max_n: int = PARTITION_MAX_N
) -> ViolatedConstraint | None:
    """Partition minimising ``x(delta(W)) - (|W| - 1)`` when that is negative.

    ``x(delta(W)) - |W| = sum over blocks of (x(delta(B)) / 2 - 1)``, so the
    minimum over all set partitions is a DP over vertex subsets.
    """
    check_solution(g, x)
    if g.n > max_n:
        raise SeparationLimitError(
            f"n={g.n} exceeds the exhaustive partition-separation limit {max_n}"
        )
    caps, D = scale_to_int(x)
    cut = _kernels.subset_cut_values(g.n, g.edges, caps)
    # scaled by 2D: block cost D*x(delta(B)) - 2D, slack*2D = total + 2D
    block_cost = [c - 2 * D for c in cut]
    total, masks = _kernels.min_partition(g.n, block_cost)
    if total + 2 * D >= 0:
        return None
    blocks = sorted(tuple(v for v in range(g.n) if mask >> v & 1) for mask in masks)
    lhs = sum((Fraction(cut[mask], D) for mask in masks), Fraction(0)) / 2
    return ViolatedConstraint("partition", tuple(blocks), lhs, Fraction(len(blocks) - 1))


@dataclass
class Relaxation:
    x: FractionalSolution
    value: Fraction
    iterations: int
    rows: list[tuple[tuple[int, ...], int]] = field(repr=False)


def initial_rows(g: Graph) -> list[tuple[tuple[int, ...], int]]:
    """``x(E) >= n-1`` plus the degree rows ``x(delta(v)) >= 2`` for inner v."""
    rows = [((1,) * g.m, g.n - 1)]
    for v in range(g.n):
        if v in (g.s, g.t):
            continue
        rows.append((tuple(int(v in e) for e in g.edges), 2))
    return rows


def solve_relaxation(g: Graph, *, max_partition_n: int = PARTITION_MAX_N) -> Relaxation:
    """Cutting-plane loop: exact LP solve, separate both families, repeat."""
    if g.n > max_partition_n:
        raise SeparationLimitError(
            f"n={g.n} exceeds the exhaustive partition-separation limit {max_partition_n}"
        )
    rows = initial_rows(g)
    seen = set(rows)
    iterations = 0
    while True:
        iterations += 1
        lp = rational_lp.LinearProgram(
            g.m, [1] * g.m, [(list(a), b) for a, b in rows], [0] * g.m, [2] * g.m
        )
        sol = rational_lp.solve(lp)
        if sol.status is not rational_lp.Status.OPTIMAL:  # pragma: no cover
            raise RuntimeError(f"relaxation LP is {sol.status.value}")
        x = tuple(sol.values)
        found = [
            c
            for c in (separate_even_cuts(g, x), separate_partitions(g, x, max_n=max_partition_n))
            if c is not None
        ]
        if not found:
            log.debug("relaxation converged after %d LP solves", iterations)
            return Relaxation(x, sol.objective, iterations, rows)
        fresh = []
        for c in found:
            row = (tuple(c.row(g)), int(c.rhs))
            if row in seen:  # pragma: no cover - x satisfies every row already added
                raise RuntimeError(f"separation returned an existing row: {c}")
            if row not in fresh:  # both families can yield the same row
                fresh.append(row)
        seen.update(fresh)
        rows.extend(fresh)
