"""Instance generators: seeded random graphs and the theta-graph gap family."""

from __future__ import annotations

import random

from .graph import Graph


def gen_random(n: int, m: int, seed: int) -> Graph:
    """Uniform random spanning tree plus ``m - (n-1)`` random extra edges.

    The tree comes from a random walk (Aldous-Broder), so it is uniform over
    labelled spanning trees of K_n.  Terminals are a uniform distinct pair.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise ValueError(f"m={m} outside [{n - 1}, {n * (n - 1) // 2}] for n={n}")
    rng = random.Random(seed)
    visited = {rng.randrange(n)}
    current = next(iter(visited))
    tree = set()
    while len(visited) < n:
        nxt = rng.randrange(n - 1)
        nxt += nxt >= current
        if nxt not in visited:
            visited.add(nxt)
            tree.add((min(current, nxt), max(current, nxt)))
        current = nxt
    rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in tree]
    extra = rng.sample(rest, m - (n - 1))
    s, t = rng.sample(range(n), 2)
    return Graph(n, tuple(sorted(tree) + sorted(extra)), s, t)


def gen_gap(k: int) -> Graph:
    """Three internally disjoint s-t paths of ``k`` edges each (s=0, t=1).

    k=1 would triple the s-t edge, so k >= 2 is required.
    """
    if k < 2:
        raise ValueError("gap family needs k >= 2 (k = 1 is a multigraph)")
    n = 2 + 3 * (k - 1)
    edges = []
    nxt = 2
    for _ in range(3):
        prev = 0
        for _ in range(k - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(n, tuple(edges), 0, 1)
