"""Exact max-flow / min-cut on small undirected networks.

Capacities handed to this module are rationals; they are scaled to integers by
their common denominator so augmenting paths run on plain ints.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


def common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d


def scale_to_int(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Return ``(ints, D)`` with ``ints[i] == values[i] * D`` exactly."""
    D = common_denominator(values)
    return [int(Fraction(v) * D) for v in values], D


def min_cut(
    num_nodes: int,
    arcs: Sequence[tuple[int, int, int]],
    source: int,
    sink: int,
) -> tuple[int, frozenset[int]]:
    """Minimum ``source``-``sink`` cut of an undirected network.

    ``arcs`` holds ``(a, b, capacity)`` with integer capacities; parallel arcs
    are allowed.  Returns the cut value and the source side, taken as the set
    of nodes reachable from ``source`` in the final residual network.
    """
    if source == sink:
        raise ValueError("source and sink must differ")
    cap: list[dict[int, int]] = [dict() for _ in range(num_nodes)]
    for a, b, c in arcs:
        if a == b or c == 0:
            continue
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b][a] = cap[b].get(a, 0) + c
    order = [sorted(nbrs) for nbrs in cap]
    flow_value = 0
    while True:
        parent = [-1] * num_nodes
        parent[source] = source
        queue = deque([source])
        while queue and parent[sink] < 0:
            u = queue.popleft()
            for v in order[u]:
                if parent[v] < 0 and cap[u][v] > 0:
                    parent[v] = u
                    queue.append(v)
        if parent[sink] < 0:
            break
        push = None
        v = sink
        while v != source:
            u = parent[v]
            push = cap[u][v] if push is None else min(push, cap[u][v])
            v = u
        v = sink
        while v != source:
            u = parent[v]
            cap[u][v] -= push
            cap[v][u] += push
            v = u
        flow_value += push
    side = frozenset(v for v in range(num_nodes) if parent[v] >= 0)
    return flow_value, side
