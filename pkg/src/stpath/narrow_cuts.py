"""Gomory-Hu cut tree of (G, x*) and the chain of narrow s-t cuts it exposes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .flow import min_cut, scale_to_int
from .graph import Graph, components


class NarrowCutError(RuntimeError):
    """Raised when a structural guarantee on x* or the cut chain fails."""


@dataclass(frozen=True)
class TreeEdge:
    u: int
    v: int
    weight: Fraction
    side: frozenset[int]  # component of tree - edge containing u


@dataclass(frozen=True)
class GomoryHuTree:
    n: int
    edges: tuple[TreeEdge, ...]

    def path(self, a: int, b: int) -> list[TreeEdge]:
        """Tree edges on the path from ``a`` to ``b``."""
        adj: dict[int, list[tuple[int, TreeEdge]]] = {v: [] for v in range(self.n)}
        for e in self.edges:
            adj[e.u].append((e.v, e))
            adj[e.v].append((e.u, e))
        prev: dict[int, tuple[int, TreeEdge] | None] = {a: None}
        stack = [a]
        while stack:
            u = stack.pop()
            for w, e in adj[u]:
                if w not in prev:
                    prev[w] = (u, e)
                    stack.append(w)
        out = []
        v = b
        while prev[v] is not None:
            u, e = prev[v]
            out.append(e)
            v = u
        out.reverse()
        return out

    def min_cut_value(self, a: int, b: int) -> Fraction:
        return min(e.weight for e in self.path(a, b))


def gomory_hu_tree(g: Graph, x: Sequence[Fraction]) -> GomoryHuTree:
    """Contraction-based Gomory-Hu construction with capacities ``x``."""
    support = [e for e, c in zip(g.edges, x) if c > 0]
    if len(components(g.n, support)) != 1:
        raise NarrowCutError("support of x is disconnected")
    caps, D = scale_to_int(x)
    # supernodes of the partial tree and weighted tree edges between them
    nodes: list[frozenset[int]] = [frozenset(range(g.n))]
    tree: dict[tuple[int, int], int] = {}

    while True:
        split = next((i for i, X in enumerate(nodes) if len(X) > 1), None)
        if split is None:
            break
        X = nodes[split]
        a, b = sorted(X)[:2]
        # contract each component of (tree - X) into one node
        nbrs = {}
        for (p, q), w in tree.items():
            if p == split:
                nbrs[q] = w
            elif q == split:
                nbrs[p] = w
        rest_edges = [(p, q) for (p, q) in tree if split not in (p, q)]
        comp_of: dict[int, int] = {}
        for comp_id, comp in enumerate(components(len(nodes), rest_edges)):
            for node_id in comp:
                comp_of[node_id] = comp_id
        label = {}
        local = {v: i for i, v in enumerate(sorted(X))}
        label.update(local)
        base = len(local)
        for node_id, verts in enumerate(nodes):
            if node_id == split:
                continue
            for v in verts:
                label[v] = base + comp_of[node_id]
        num = base + max(comp_of.values(), default=-1) + 1
        arcs = [(label[u], label[v], c) for (u, v), c in zip(g.edges, caps) if c]
        value, side = min_cut(num, arcs, local[a], local[b])

        Xa = frozenset(v for v in X if local[v] in side)
        Xb = X - Xa
        nodes[split] = Xa
        nodes.append(Xb)
        new_id = len(nodes) - 1
        for q, w in nbrs.items():
            if base + comp_of[q] not in side:
                del tree[_key(split, q)]
                tree[_key(new_id, q)] = w
        tree[_key(split, new_id)] = value

    vertex_of = [next(iter(X)) for X in nodes]
    tree_edges = [(vertex_of[p], vertex_of[q], w) for (p, q), w in tree.items()]
    out = []
    for u, v, w in sorted((min(u, v), max(u, v), w) for u, v, w in tree_edges):
        rest = [(p, q) for p, q, _ in tree_edges if {p, q} != {u, v}]
        side = next(frozenset(c) for c in components(g.n, rest) if u in c)
        out.append(TreeEdge(u, v, Fraction(w, D), side))
    return GomoryHuTree(g.n, tuple(out))


def _key(p: int, q: int) -> tuple[int, int]:
    return (p, q) if p < q else (q, p)


def cut_value(g: Graph, x: Sequence[Fraction], S) -> Fraction:
    S = set(S)
    return sum((c for (u, v), c in zip(g.edges, x) if (u in S) != (v in S)), Fraction(0))


@dataclass(frozen=True)
class NarrowCutChain:
    n: int
    cuts: tuple[frozenset[int], ...]  # S_1 < S_2 < ... < S_k, all contain s
    values: tuple[Fraction, ...]

    @property
    def k(self) -> int:
        return len(self.cuts)

    @property
    def levels(self) -> tuple[frozenset[int], ...]:
        """``L_i = S_i - S_{i-1}`` for ``i = 1..k+1`` (``S_0 = {}``, ``S_{k+1} = V``)."""
        bounds = [frozenset()] + list(self.cuts) + [frozenset(range(self.n))]
        return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def extract_narrow_cuts(
    tree: GomoryHuTree, x: Sequence[Fraction], s: int, t: int, g: Graph | None = None
) -> NarrowCutChain:
    """Narrow cuts (s-side cut value < 2) read off the s-t path of the tree.

    When ``g`` is given, each cut value is recomputed from ``x`` directly and
    must agree with the tree weight.
    """
    found = []
    for e in tree.path(s, t):
        if e.weight >= 2:
            continue
        S = e.side if s in e.side else frozenset(range(tree.n)) - e.side
        if g is not None and cut_value(g, x, S) != e.weight:
            raise NarrowCutError(f"tree weight {e.weight} disagrees with x(delta(S)) for {sorted(S)}")
        found.append((len(S), sorted(S), S, e.weight))
    found.sort(key=lambda item: (item[0], item[1]))
    cuts = tuple(item[2] for item in found)
    for small, big in zip(cuts, cuts[1:]):
        if not small < big:
            raise NarrowCutError(f"narrow cuts {sorted(small)} and {sorted(big)} are not nested")
    for S in cuts:
        if s not in S or t in S:
            raise NarrowCutError(f"cut {sorted(S)} is not an s-t cut")
    return NarrowCutChain(tree.n, cuts, tuple(item[3] for item in found))


def narrow_cut_chain(g: Graph, x: Sequence[Fraction]) -> tuple[GomoryHuTree, NarrowCutChain]:
    tree = gomory_hu_tree(g, x)
    return tree, extract_narrow_cuts(tree, x, g.s, g.t, g)
