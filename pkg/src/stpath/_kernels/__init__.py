"""Hot loops: subset cut enumeration, set-partition DP, Held-Karp DP.

The compiled Cython module is used when it was built; otherwise the pure-Python
versions in :mod:`._pure` are used.  Set ``STPATH_PURE_PYTHON=1`` to force the
fallback.  Both return identical results, including tie-breaking.
"""

from __future__ import annotations

import os

from . import _pure

try:
    if os.environ.get("STPATH_PURE_PYTHON"):
        raise ImportError("fallback forced by STPATH_PURE_PYTHON")
    from . import _ckernels as _native
except ImportError:
    _native = None

BACKEND = "cython" if _native is not None else "python"

# kernel accumulators are int64 in the compiled path
_INT64_SAFE = 1 << 62


def subset_cut_values(n, edges, weights, *, backend=None):
    """``out[mask] = sum of weights of edges crossing the vertex bitmask``."""
    mod = _pick(backend, bound=sum(abs(w) for w in weights))
    return mod.subset_cut_values(n, edges, weights)


def min_partition(n, block_cost, *, backend=None):
    """Minimise ``sum(block_cost[B])`` over set partitions of ``range(n)``.

    Returns ``(value, [block bitmasks])``.
    """
    bound = n * max((abs(c) for c in block_cost), default=0)
    mod = _pick(backend, bound=bound)
    return mod.min_partition(n, block_cost)


def held_karp(dist, s, t, *, backend=None):
    """Shortest Hamiltonian ``s``-``t`` path under ``dist``. Returns ``(cost, order)``."""
    n = len(dist)
    bound = n * max((max(row) for row in dist), default=0)
    mod = _pick(backend, bound=bound)
    return mod.held_karp(dist, s, t)


def _pick(backend, bound):
    if backend == "python":
        return _pure
    if backend == "cython":
        if _native is None:
            raise RuntimeError("compiled kernels are not built")
        return _native
    if _native is not None and bound < _INT64_SAFE:
        return _native
    return _pure
