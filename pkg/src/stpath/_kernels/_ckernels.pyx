# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the functions in ``_pure``; same results, int64 accumulators."""

from libc.stdlib cimport malloc, free


def subset_cut_values(int n, edges, weights):
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t m = len(edges)
    cdef long long *out = <long long *> malloc(size * sizeof(long long))
    cdef int *eu = <int *> malloc((m + 1) * sizeof(int))
    cdef int *ev = <int *> malloc((m + 1) * sizeof(int))
    cdef long long *ew = <long long *> malloc((m + 1) * sizeof(long long))
    cdef Py_ssize_t i, mask, prev
    cdef int top, u, v
    cdef long long val
    try:
        for i in range(m):
            eu[i] = edges[i][0]
            ev[i] = edges[i][1]
            ew[i] = weights[i]
        out[0] = 0
        for mask in range(1, size):
            top = 0
            while (mask >> (top + 1)) != 0:
                top += 1
            prev = mask ^ (<Py_ssize_t> 1 << top)
            val = out[prev]
            for i in range(m):
                u = eu[i]
                v = ev[i]
                if u == top:
                    u = v
                elif v != top:
                    continue
                if (prev >> u) & 1:
                    val -= ew[i]
                else:
                    val += ew[i]
            out[mask] = val
        return [out[i] for i in range(size)]
    finally:
        free(out)
        free(eu)
        free(ev)
        free(ew)


def min_partition(int n, block_cost):
    cdef Py_ssize_t size = 1 << n
    cdef long long *cost = <long long *> malloc(size * sizeof(long long))
    cdef long long *best = <long long *> malloc(size * sizeof(long long))
    cdef Py_ssize_t *choice = <Py_ssize_t *> malloc(size * sizeof(Py_ssize_t))
    cdef Py_ssize_t mask, low, rest, sub, block, pick
    cdef long long cur, cand
    cdef bint first
    try:
        for mask in range(size):
            cost[mask] = block_cost[mask]
        best[0] = 0
        choice[0] = 0
        for mask in range(1, size):
            low = mask & -mask
            rest = mask ^ low
            sub = rest
            first = True
            cur = 0
            pick = 0
            while True:
                block = sub | low
                cand = cost[block] + best[mask ^ block]
                if first or cand < cur:
                    cur = cand
                    pick = block
                    first = False
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
    finally:
        free(cost)
        free(best)
        free(choice)


def held_karp(dist, int s, int t):
    cdef int n = len(dist)
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t full = size - 1
    cdef long long *d = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *dp = <long long *> malloc(size * n * sizeof(long long))
    cdef int *par = <int *> malloc(size * n * sizeof(int))
    cdef Py_ssize_t mask, nm, idx
    cdef int v, w, p
    cdef long long cv, cand
    cdef long long UNSET = -1
    try:
        for v in range(n):
            for w in range(n):
                d[v * n + w] = dist[v][w]
        for idx in range(size * n):
            dp[idx] = UNSET
            par[idx] = -1
        dp[(1 << s) * n + s] = 0
        for mask in range(size):
            if not (mask >> s) & 1:
                continue
            for v in range(n):
                cv = dp[mask * n + v]
                if cv == UNSET or (v == t and mask != full):
                    continue
                for w in range(n):
                    if (mask >> w) & 1:
                        continue
                    nm = mask | (<Py_ssize_t> 1 << w)
                    cand = cv + d[v * n + w]
                    idx = nm * n + w
                    if dp[idx] == UNSET or cand < dp[idx]:
                        dp[idx] = cand
                        par[idx] = v
        cost = dp[full * n + t]
        order = [t]
        mask = full
        v = t
        while v != s:
            p = par[mask * n + v]
            mask ^= (<Py_ssize_t> 1 << v)
            v = p
            order.append(v)
        order.reverse()
        return cost, order
    finally:
        free(d)
        free(dp)
        free(par)
