"""Compare the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat R]
"""

from __future__ import annotations

import argparse
import itertools
import random
import timeit

from stpath import _kernels


def cases(rng: random.Random):
    n = 12
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
    w = [rng.randint(0, 12) for _ in edges]
    cut = _kernels.subset_cut_values(n, edges, w, backend="python")
    block = [c - 24 for c in cut]
    hk = 13
    d = [[0 if a == b else 1 + (a * 7 + b * 3) % 5 for b in range(hk)] for a in range(hk)]
    return {
        "subset_cut_values(n=12)": lambda b: _kernels.subset_cut_values(n, edges, w, backend=b),
        "min_partition(n=12)": lambda b: _kernels.min_partition(n, block, backend=b),
        "held_karp(n=13)": lambda b: _kernels.held_karp(d, 0, hk - 1, backend=b),
    }


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.BACKEND != "cython":
        raise SystemExit("compiled kernels not available; build the package first")
    print(f"{'kernel':<26}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, fn in cases(random.Random(0)).items():
        assert fn("python") == fn("cython"), name
        py = min(timeit.repeat(lambda: fn("python"), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: fn("cython"), number=1, repeat=args.repeat))
        print(f"{name:<26}{py:>11.4f}{cy:>11.4f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
