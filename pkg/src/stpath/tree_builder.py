"""Layered spanning tree J over the narrow-cut levels, and its wrong-degree set."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph, bfs_parents, is_connected_on
from .narrow_cuts import NarrowCutChain


class TreeBuildError(RuntimeError):
    """A level is disconnected in H, or no H-edge joins consecutive levels."""


@dataclass(frozen=True)
class SpanningTree:
    """Edge indices of J in the original graph, with their provenance."""

    edges: tuple[int, ...]
    level_trees: tuple[tuple[int, ...], ...]
    connectors: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


def support_edges(g: Graph, x: Sequence[Fraction]) -> list[int]:
    return [i for i, v in enumerate(x) if v > 0]


def support_graph(g: Graph, x: Sequence[Fraction]) -> Graph:
    """The spanning subgraph H of edges with positive x.

    Edge ``j`` of H is edge ``support_edges(g, x)[j]`` of ``g``.
    """
    return g.subgraph_edges(support_edges(g, x))


def _level_tree(g: Graph, edge_ids: Iterable[int], level: frozenset[int]) -> list[int]:
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in level}
    for i in edge_ids:
        u, v = g.edges[i]
        if u in level and v in level:
            adj[u].append((v, i))
            adj[v].append((u, i))
    root = min(level)
    seen = {root}
    queue = deque([root])
    picked = []
    while queue:
        u = queue.popleft()
        for v, i in sorted(adj[u]):
            if v not in seen:
                seen.add(v)
                picked.append(i)
                queue.append(v)
    if len(seen) != len(level):
        raise TreeBuildError(f"support graph restricted to level {sorted(level)} is disconnected")
    return sorted(picked)


def build_tree(g: Graph, x: Sequence[Fraction], chain: NarrowCutChain) -> SpanningTree:
    """Spanning tree J from per-level BFS trees plus one connector per cut.

    With no narrow cuts, J is a BFS tree of ``g`` itself rooted at s.
    """
    if chain.k == 0:
        parent = bfs_parents(g, g.s)
        tree = tuple(sorted(p[1] for p in parent if p is not None))
        return SpanningTree(tree, (tree,), ())
    h_edges = support_edges(g, x)
    levels = chain.levels
    level_trees = tuple(tuple(_level_tree(g, h_edges, L)) for L in levels)
    connectors = []
    for left, right in zip(levels, levels[1:]):
        candidates = []
        for i in h_edges:
            u, v = g.edges[i]
            if (u in left and v in right) or (v in left and u in right):
                candidates.append(((min(u, v), max(u, v)), i))
        if not candidates:
            raise TreeBuildError(
                f"no support edge joins levels {sorted(left)} and {sorted(right)}"
            )
        connectors.append(min(candidates)[1])
    edges = tuple(sorted({i for lt in level_trees for i in lt} | set(connectors)))
    if len(edges) != g.n - 1:  # pragma: no cover - follows from the construction
        raise TreeBuildError(f"J has {len(edges)} edges, expected {g.n - 1}")
    return SpanningTree(edges, level_trees, tuple(connectors))


def wrong_degree_set(g: Graph, tree_edges: Iterable[int], s: int | None = None, t: int | None = None) -> frozenset[int]:
    """Vertices whose J-degree parity is wrong: even at s or t, odd elsewhere."""
    s = g.s if s is None else s
    t = g.t if t is None else t
    deg = [0] * g.n
    for i in tree_edges:
        u, v = g.edges[i]
        deg[u] += 1
        deg[v] += 1
    return frozenset(
        v for v in range(g.n) if (deg[v] % 2 == 0) == (v in (s, t))
    )


def union_connectivity(g: Graph, x: Sequence[Fraction], chain: NarrowCutChain) -> list[tuple[int, int]]:
    """All ``(p, q)`` (1-based, p <= q) whose level union is disconnected in H."""
    h = [g.edges[i] for i in support_edges(g, x)]
    levels = chain.levels
    bad = []
    for p in range(len(levels)):
        union: set[int] = set()
        for q in range(p, len(levels)):
            union |= levels[q]
            if not is_connected_on(union, h):
                bad.append((p + 1, q + 1))
    return bad
