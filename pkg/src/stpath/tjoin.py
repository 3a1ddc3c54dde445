"""Minimum-size T-joins: BFS shortest paths + exact min-weight perfect matching."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .graph import Graph, bfs_parents, metric_completion, odd_vertices


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    weight: int


def blossom_matching(points: Iterable[int], dist: Sequence[Sequence[int]]) -> Matching:
    """Minimum-weight perfect matching of ``points`` under integer ``dist``.

    Delegates to networkx's blossom implementation, which stays in integer
    arithmetic for integer weights and is therefore exact.
    """
    pts = sorted(set(points))
    if len(pts) % 2:
        raise ValueError(f"cannot perfectly match {len(pts)} points")
    if not pts:
        return Matching((), 0)
    K = nx.Graph()
    K.add_nodes_from(pts)
    for i, a in enumerate(pts):
        for b in pts[i + 1 :]:
            K.add_edge(a, b, weight=int(dist[a][b]))
    mate = nx.min_weight_matching(K)
    pairs = tuple(sorted((min(a, b), max(a, b)) for a, b in mate))
    if len(pairs) * 2 != len(pts):  # pragma: no cover - complete graph on even set
        raise RuntimeError("matching is not perfect")
    return Matching(pairs, sum(int(dist[a][b]) for a, b in pairs))


def shortest_path_edges(g: Graph, a: int, b: int, parents=None) -> list[int]:
    parents = bfs_parents(g, a) if parents is None else parents
    path = []
    v = b
    while v != a:
        u, i = parents[v]
        path.append(i)
        v = u
    return path


def min_tjoin(g: Graph, T: Iterable[int], dist: Sequence[Sequence[int]] | None = None) -> tuple[int, ...]:
    """Edge indices of a minimum-cardinality T-join of ``g``.

    Matched pairs are joined by BFS paths; the join is the symmetric difference
    of those paths, so edges shared by two paths cancel.
    """
    T = sorted(set(T))
    if len(T) % 2:
        raise ValueError(f"|T| = {len(T)} is odd")
    if not T:
        return ()
    if dist is None:
        dist = metric_completion(g)
    matching = blossom_matching(T, dist)
    parity = [0] * g.m
    for a, b in matching.pairs:
        for i in shortest_path_edges(g, a, b):
            parity[i] ^= 1
    F = tuple(i for i, bit in enumerate(parity) if bit)
    if len(F) > matching.weight:  # pragma: no cover
        raise RuntimeError("T-join larger than the matching weight")
    if odd_vertices(g.n, [g.edges[i] for i in F], [1] * len(F)) != set(T):  # pragma: no cover
        raise RuntimeError("T-join has the wrong odd-degree set")
    return F
