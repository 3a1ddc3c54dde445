"""Graph representation, cuts, metric completion, Eulerian trails and shortcutting.

Vertices are the integers ``0..n-1``. Edges keep the index they were given at
construction, so edge-indexed vectors (LP solutions, multiplicities) are plain
sequences parallel to ``Graph.edges``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed or invalid graph input."""


class TrailError(ValueError):
    """Raised when a multigraph cannot be traversed as an s-t trail."""


@dataclass(frozen=True)
class Graph:
    """Simple connected unit-cost graph with terminals ``s`` and ``t``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    s: int
    t: int
    _adj: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        n = self.n
        if n < 2:
            raise GraphError(f"need at least 2 vertices, got n={n}")
        for name, v in (("s", self.s), ("t", self.t)):
            if not 0 <= v < n:
                raise GraphError(f"terminal {name}={v} out of range 0..{n - 1}")
        if self.s == self.t:
            raise GraphError("terminals must be distinct (s = t)")
        seen: set[tuple[int, int]] = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {i} ({u}, {v}) has a vertex out of range")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append((v, i))
            adj[v].append((u, i))
        object.__setattr__(
            self, "_adj", tuple(tuple(sorted(nbrs)) for nbrs in adj)
        )
        if len(components(n, edges)) != 1:
            raise GraphError("graph is not connected")

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, edge index)`` pairs, sorted by neighbor."""
        return self._adj[v]

    def edge_index(self, u: int, v: int) -> int:
        for w, i in self._adj[u]:
            if w == v:
                return i
        raise KeyError((u, v))

    def subgraph_edges(self, keep: Iterable[int]) -> "Graph":
        """Spanning subgraph on the given edge indices (must stay connected)."""
        return Graph(self.n, tuple(self.edges[i] for i in keep), self.s, self.t)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m} {self.s} {self.t}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def components(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Connected components of ``(range(n), edges)``, each sorted, ordered by min vertex."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_connected_on(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    """Whether the subgraph induced on ``vertices`` by ``edges`` is connected."""
    verts = sorted(set(vertices))
    if not verts:
        return False
    index = {v: i for i, v in enumerate(verts)}
    inner = [(index[u], index[v]) for u, v in edges if u in index and v in index]
    return len(components(len(verts), inner)) == 1


def parse_graph(text: str) -> Graph:
    """Parse the ``n m s t`` header + ``u v`` edge-list format."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer token in {raw!r}") from None
    if not rows:
        raise GraphError("empty input: missing 'n m s t' header")
    lineno, header = rows[0]
    if len(header) != 4:
        raise GraphError(f"line {lineno}: header must be 'n m s t', got {header}")
    n, m, s, t = header
    if n < 0 or m < 0:
        raise GraphError(f"line {lineno}: negative n or m")
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, vals in body:
        if len(vals) != 2:
            raise GraphError(f"line {lineno}: edge line must be 'u v'")
        edges.append((vals[0], vals[1]))
    return Graph(n, tuple(edges), s, t)


def _check_cut(g: Graph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    if not S or len(S) >= g.n:
        raise GraphError("cut set must satisfy 0 < |S| < n")
    if any(not 0 <= v < g.n for v in S):
        raise GraphError("cut set has a vertex out of range")
    return S


def cut_edges(g: Graph, S: Iterable[int]) -> list[int]:
    """Indices of edges with exactly one endpoint in ``S``."""
    S = _check_cut(g, S)
    return [i for i, (u, v) in enumerate(g.edges) if (u in S) != (v in S)]


def check_partition(g: Graph, W: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    blocks = [frozenset(b) for b in W]
    if any(not b for b in blocks):
        raise GraphError("partition has an empty block")
    total = sum(len(b) for b in blocks)
    union = frozenset().union(*blocks) if blocks else frozenset()
    if total != g.n or union != frozenset(range(g.n)):
        raise GraphError("blocks must be disjoint and cover all vertices")
    return blocks


def partition_cut(g: Graph, W: Sequence[Iterable[int]]) -> list[int]:
    """Indices of edges whose endpoints lie in different blocks of ``W``."""
    blocks = check_partition(g, W)
    label = {}
    for bi, block in enumerate(blocks):
        for v in block:
            label[v] = bi
    return [i for i, (u, v) in enumerate(g.edges) if label[u] != label[v]]


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v, _ in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_parents(g: Graph, source: int) -> list[tuple[int, int] | None]:
    """BFS tree from ``source``: ``parent[v] = (predecessor, edge index)``.

    Neighbors are explored in increasing order, so the tree is deterministic.
    """
    parent: list[tuple[int, int] | None] = [None] * g.n
    seen = [False] * g.n
    seen[source] = True
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v, ei in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                parent[v] = (u, ei)
                queue.append(v)
    return parent


def metric_completion(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs unit-cost shortest-path distances (the metric completion)."""
    return tuple(tuple(bfs_distances(g, v)) for v in range(g.n))


@dataclass(frozen=True)
class Trail:
    """Walk ``vertices[0] -e0- vertices[1] -e1- ...`` through a multigraph."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


def odd_vertices(n: int, edges: Sequence[tuple[int, int]], mult: Sequence[int]) -> set[int]:
    deg = [0] * n
    for (u, v), k in zip(edges, mult):
        deg[u] += k
        deg[v] += k
    return {v for v in range(n) if deg[v] % 2}


def eulerian_trail(g: Graph, mult: Sequence[int], s: int | None = None, t: int | None = None) -> Trail:
    """Hierholzer trail from ``s`` to ``t`` using edge ``i`` exactly ``mult[i]`` times.

    ``mult`` is parallel to ``g.edges`` with entries in {0, 1, 2}.
    """
    s = g.s if s is None else s
    t = g.t if t is None else t
    if s == t:
        raise TrailError("trail endpoints must be distinct")
    if len(mult) != g.m or any(k not in (0, 1, 2) for k in mult):
        raise TrailError("multiplicities must be 0, 1 or 2 per edge")
    used = [(g.edges[i], k) for i, k in enumerate(mult) if k]
    if odd_vertices(g.n, [e for e, _ in used], [k for _, k in used]) != {s, t}:
        raise TrailError("odd-degree vertex set is not exactly {s, t}")
    if len(components(g.n, [e for e, _ in used])) != 1:
        raise TrailError("multigraph is not connected and spanning")

    # adjacency of edge copies: (neighbor, edge index, copy id)
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(g.n)]
    for i, k in enumerate(mult):
        u, v = g.edges[i]
        for c in range(k):
            adj[u].append((v, i, c))
            adj[v].append((u, i, c))
    for lst in adj:
        lst.sort(reverse=True)  # pop() yields smallest neighbor first
    done: set[tuple[int, int]] = set()

    stack: list[tuple[int, int]] = [(s, -1)]
    out_v: list[int] = []
    out_e: list[int] = []
    while stack:
        u, via = stack[-1]
        lst = adj[u]
        while lst and (lst[-1][1], lst[-1][2]) in done:
            lst.pop()
        if lst:
            v, i, c = lst.pop()
            done.add((i, c))
            stack.append((v, i))
        else:
            stack.pop()
            out_v.append(u)
            if via >= 0:
                out_e.append(via)
    out_v.reverse()
    out_e.reverse()
    return Trail(tuple(out_v), tuple(out_e))


def shortcut(trail: Trail, cost: Sequence[Sequence[int]], t: int | None = None) -> tuple[list[int], int]:
    """Hamiltonian path from a spanning trail, keeping first visits; ``t`` forced last.

    Returns ``(path, cost)`` with cost measured in the metric completion.
    """
    verts = trail.vertices
    n = len(cost)
    t = verts[-1] if t is None else t
    if verts[-1] != t:
        raise TrailError("trail must end at t")
    if set(verts) != set(range(n)):
        raise TrailError("trail does not visit every vertex")
    path: list[int] = []
    seen: set[int] = set()
    for v in verts[:-1]:
        if v == t or v in seen:
            continue
        seen.add(v)
        path.append(v)
    path.append(t)
    total = sum(cost[a][b] for a, b in zip(path, path[1:]))
    return path, total
