"""Pure-Python kernels. Arbitrary-precision ints, so no overflow guard needed."""

from __future__ import annotations


def subset_cut_values(n, edges, weights):
    size = 1 << n
    out = [0] * size
    # out[mask] from out[mask without its top bit] by toggling that vertex
    inc = [[] for _ in range(n)]
    for (u, v), w in zip(edges, weights):
        if w:
            inc[u].append((v, w))
            inc[v].append((u, w))
    for mask in range(1, size):
        top = mask.bit_length() - 1
        prev = mask ^ (1 << top)
        val = out[prev]
        for other, w in inc[top]:
            if prev >> other & 1:
                val -= w
            else:
                val += w
        out[mask] = val
    return out


def min_partition(n, block_cost):
    size = 1 << n
    best = [0] * size
    choice = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        rest = mask ^ low
        sub = rest
        cur = None
        pick = 0
        while True:
            block = sub | low
            cand = block_cost[block] + best[mask ^ block]
            if cur is None or cand < cur:
                cur = cand
                pick = block
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[mask] = cur
        choice[mask] = pick
    blocks = []
    mask = size - 1
    while mask:
        blocks.append(choice[mask])
        mask ^= choice[mask]
    return best[size - 1], blocks


def held_karp(dist, s, t):
    n = len(dist)
    full = (1 << n) - 1
    INF = None
    dp = [[INF] * n for _ in range(1 << n)]
    par = [[-1] * n for _ in range(1 << n)]
    dp[1 << s][s] = 0
    for mask in range(1 << n):
        if not mask >> s & 1:
            continue
        row = dp[mask]
        for v in range(n):
            cv = row[v]
            if cv is None or (v == t and mask != full):
                continue
            dv = dist[v]
            for w in range(n):
                if mask >> w & 1:
                    continue
                nm = mask | (1 << w)
                cand = cv + dv[w]
                cur = dp[nm][w]
                if cur is None or cand < cur:
                    dp[nm][w] = cand
                    par[nm][w] = v
    cost = dp[full][t]
    order = [t]
    mask, v = full, t
    while v != s:
        p = par[mask][v]
        mask ^= 1 << v
        v = p
        order.append(v)
    order.reverse()
    return cost, order
