import itertools
import random
from fractions import Fraction

import pytest

from stpath import oracle
from stpath.gen import gen_random
from stpath.graph import Graph
from stpath.separation import (
    SeparationLimitError,
    ViolatedConstraint,
    initial_rows,
    separate_even_cuts,
    separate_partitions,
    solve_relaxation,
)

ONE, HALF = Fraction(1), Fraction(1, 2)


def cut_val(g, x, S):
    return sum((c for (u, v), c in zip(g.edges, x) if (u in S) != (v in S)), Fraction(0))


def min_even_cut(g, x):
    best = None
    for r in range(1, g.n):
        for S in itertools.combinations(range(g.n), r):
            if len({g.s, g.t} & set(S)) % 2 == 0:
                val = cut_val(g, x, set(S))
                best = val if best is None else min(best, val)
    return best


def min_partition_slack(g, x):
    best = None
    for W in oracle.iter_partitions(g.n):
        label = {v: i for i, b in enumerate(W) for v in b}
        cross = sum((c for (u, v), c in zip(g.edges, x) if label[u] != label[v]), Fraction(0))
        val = cross - (len(W) - 1)
        best = val if best is None else min(best, val)
    return best


class TestEvenCuts:
    def test_path_all_ones(self, p4):
        assert separate_even_cuts(p4, [ONE] * 3) is None

    def test_star_leaf(self, star):
        c = separate_even_cuts(star, [ONE] * 3)
        assert c.kind == "even-cut" and c.payload == (3,)
        assert c.lhs == 1 and c.rhs == 2

    @pytest.mark.parametrize("seed", range(5))
    def test_all_twos(self, seed):
        g = gen_random(7, 9, seed)
        assert separate_even_cuts(g, [Fraction(2)] * g.m) is None

    @pytest.mark.parametrize("seed", range(30))
    def test_matches_enumeration(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 8)
        g = gen_random(n, rng.randint(n - 1, n * (n - 1) // 2), seed)
        x = [Fraction(rng.randint(0, 4), rng.choice([1, 2, 3])) for _ in range(g.m)]
        x = [min(v, Fraction(2)) for v in x]
        c = separate_even_cuts(g, x)
        best = min_even_cut(g, x)
        if best is None or best >= 2:
            assert c is None
        else:
            assert c is not None and c.lhs == best
            assert cut_val(g, x, set(c.payload)) == best
            assert len({g.s, g.t} & set(c.payload)) % 2 == 0


class TestPartitions:
    def test_zero_vector(self, p4):
        c = separate_partitions(p4, [Fraction(0)] * 3)
        assert c.payload == ((0,), (1,), (2,), (3,))
        assert c.lhs == 0 and c.rhs == 3

    def test_path_all_ones(self, p4):
        assert separate_partitions(p4, [ONE] * 3) is None

    def test_star_halves(self, star):
        c = separate_partitions(star, [HALF] * 3)
        assert c.payload == ((0,), (1,), (2,), (3,))
        assert c.lhs == Fraction(3, 2) and c.rhs == 3

    def test_threshold(self):
        g = gen_random(13, 12, 0)
        with pytest.raises(SeparationLimitError):
            separate_partitions(g, [ONE] * g.m)
        with pytest.raises(SeparationLimitError):
            solve_relaxation(g)

    @pytest.mark.parametrize("seed", range(30))
    def test_matches_enumeration(self, seed):
        rng = random.Random(100 + seed)
        n = rng.randint(2, 7)
        g = gen_random(n, rng.randint(n - 1, n * (n - 1) // 2), seed)
        x = [Fraction(rng.randint(0, 4), 2) for _ in range(g.m)]
        c = separate_partitions(g, x)
        best = min_partition_slack(g, x)
        if best >= 0:
            assert c is None
        else:
            assert c.lhs - c.rhs == best
            label = {v: i for i, b in enumerate(c.payload) for v in b}
            assert sorted(label) == list(range(n))


def test_violated_constraint_requires_violation():
    with pytest.raises(ValueError):
        ViolatedConstraint("even-cut", (1,), Fraction(2), Fraction(2))


def test_initial_rows(star):
    rows = initial_rows(star)
    assert rows[0] == ((1, 1, 1), 3)
    assert rows[1:] == [((1, 1, 1), 2), ((0, 0, 1), 2)]


class TestRelaxation:
    def test_path(self, p4):
        r = solve_relaxation(p4)
        assert r.value == 3 and r.x == (ONE, ONE, ONE)

    def test_star(self, star):
        r = solve_relaxation(star)
        assert r.value == 4
        assert r.x == (ONE, ONE, Fraction(2))

    def test_single_edge(self, edge):
        r = solve_relaxation(edge)
        assert r.value == 1 and r.x == (ONE,)

    def test_triangle(self, k3):
        r = solve_relaxation(k3)
        assert r.value == 2 and r.x == (0, ONE, ONE)

    @pytest.mark.parametrize("seed", range(25))
    def test_matches_enumerated_lp_and_is_feasible(self, seed):
        rng = random.Random(200 + seed)
        n = rng.randint(3, 8)
        g = gen_random(n, rng.randint(n - 1, n * (n - 1) // 2), seed)
        r = solve_relaxation(g)
        assert r.value == sum(r.x)
        assert r.value == oracle.enumerate_lp(g)[1]
        assert oracle.relaxation_violations(g, r.x) == 0
        assert min_even_cut(g, r.x) is None or min_even_cut(g, r.x) >= 2
        assert min_partition_slack(g, r.x) >= 0
        assert r.value <= oracle.held_karp_opt(g).cost

    def test_rows_never_repeat(self):
        g = Graph(6, tuple(itertools.combinations(range(6), 2)), 0, 5)
        r = solve_relaxation(g)
        assert len(set(r.rows)) == len(r.rows)
