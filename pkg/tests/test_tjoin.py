import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stpath import oracle
from stpath.gen import gen_random
from stpath.graph import metric_completion, odd_vertices
from stpath.tjoin import blossom_matching, min_tjoin, shortest_path_edges


def table(n, entries):
    d = [[0] * n for _ in range(n)]
    for (a, b), w in entries.items():
        d[a][b] = d[b][a] = w
    return d


class TestBlossom:
    def test_two_points(self):
        m = blossom_matching([0, 1], table(2, {(0, 1): 5}))
        assert m.pairs == ((0, 1),) and m.weight == 5

    def test_dominant_pairs(self):
        d = table(4, {(0, 1): 1, (2, 3): 1, (0, 2): 10, (0, 3): 10, (1, 2): 10, (1, 3): 10})
        m = blossom_matching(range(4), d)
        assert m.pairs == ((0, 1), (2, 3)) and m.weight == 2

    def test_cross_pairs(self):
        d = table(4, {(0, 1): 3, (0, 2): 2, (0, 3): 4, (1, 2): 4, (1, 3): 2, (2, 3): 3})
        m = blossom_matching(range(4), d)
        assert m.pairs == ((0, 2), (1, 3)) and m.weight == 4

    def test_empty(self):
        assert blossom_matching([], []).weight == 0

    def test_odd(self):
        with pytest.raises(ValueError):
            blossom_matching([0, 1, 2], table(3, {}))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 5), st.data())
    def test_matches_enumeration(self, half, data):
        k = 2 * half
        d = table(k, {p: data.draw(st.integers(0, 15)) for p in itertools.combinations(range(k), 2)})
        m = blossom_matching(range(k), d)
        assert m.weight == oracle.brute_matching(range(k), d)
        assert sorted(v for p in m.pairs for v in p) == list(range(k))


class TestMinTJoin:
    def test_empty(self, p4):
        assert min_tjoin(p4, []) == ()

    def test_star(self, star):
        F = min_tjoin(star, {1, 3})
        assert [star.edges[i] for i in F] == [(1, 3)]

    def test_path_endpoints(self, p4):
        assert min_tjoin(p4, {0, 3}) == (0, 1, 2)

    def test_odd(self, p4):
        with pytest.raises(ValueError):
            min_tjoin(p4, {0, 1, 2})

    def test_shortest_path(self, c5):
        assert sorted(shortest_path_edges(c5, 0, 2)) == [0, 1]

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_brute_force(self, seed):
        rng = random.Random(500 + seed)
        n = rng.randint(2, 8)
        m = rng.randint(n - 1, min(18, n * (n - 1) // 2))
        g = gen_random(n, m, seed)
        T = rng.sample(range(n), 2 * rng.randint(0, n // 2))
        F = min_tjoin(g, T, metric_completion(g))
        assert odd_vertices(n, [g.edges[i] for i in F], [1] * len(F)) == set(T)
        assert len(F) == oracle.brute_tjoin(g, T)
        if n <= oracle.ENUMERATE_LP_MAX_N:
            assert len(F) == oracle.tjoin_lp_value(g, T)
