import random
from fractions import Fraction

import pytest

from stpath import oracle
from stpath.gen import gen_random
from stpath.graph import Graph, components
from stpath.narrow_cuts import NarrowCutChain, narrow_cut_chain
from stpath.separation import solve_relaxation
from stpath.tree_builder import (
    TreeBuildError,
    build_tree,
    support_graph,
    union_connectivity,
    wrong_degree_set,
)

ONE, TWO = Fraction(1), Fraction(2)
STAR_X = (ONE, ONE, TWO)


class TestSupportGraph:
    def test_full_support(self, p4):
        assert support_graph(p4, [ONE] * 3).edges == p4.edges

    def test_star(self, star):
        assert support_graph(star, STAR_X).edges == star.edges

    def test_triangle(self, k3):
        h = support_graph(k3, (0, ONE, ONE))
        assert h.edges == ((0, 2), (1, 2))


class TestBuildTree:
    def test_path(self, p4):
        _, chain = narrow_cut_chain(p4, [ONE] * 3)
        J = build_tree(p4, [ONE] * 3, chain)
        assert J.level_trees == ((), (), (), ())
        assert J.connectors == (0, 1, 2)
        assert J.edges == (0, 1, 2)

    def test_star(self, star):
        _, chain = narrow_cut_chain(star, STAR_X)
        J = build_tree(star, STAR_X, chain)
        assert J.level_trees == ((), (2,), ())
        assert J.connectors == (0, 1)
        assert J.edges == (0, 1, 2)

    def test_fallback_is_bfs_tree_of_g(self, c5):
        chain = NarrowCutChain(5, (), ())
        J = build_tree(c5, [ONE] * 5, chain)
        # BFS from s=0 reaches 1 and 4 directly, then 2 and 3
        assert J.edges == (0, 1, 3, 4)
        assert J.connectors == ()

    def test_fallback_ignores_support(self):
        g = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)), 0, 2)
        x = (0, 0, TWO, TWO)
        J = build_tree(g, x, NarrowCutChain(4, (), ()))
        assert 0 in J.edges

    def test_disconnected_level(self, p4):
        chain = NarrowCutChain(4, (frozenset({0}),), (ONE,))
        with pytest.raises(TreeBuildError):
            build_tree(p4, (ONE, 0, ONE), chain)

    def test_no_connector(self, p4):
        chain = NarrowCutChain(4, (frozenset({0, 1}),), (0,))
        with pytest.raises(TreeBuildError):
            build_tree(p4, (ONE, 0, ONE), chain)

    def test_lexicographic_connector(self):
        g = Graph(4, ((0, 3), (0, 2), (1, 2), (1, 3), (2, 3)), 0, 1)
        chain = NarrowCutChain(4, (frozenset({0}), frozenset({0, 2, 3})), (ONE, ONE))
        x = [ONE] * 5
        J = build_tree(g, x, chain)
        assert [g.edges[i] for i in J.connectors] == [(0, 2), (1, 2)]


class TestWrongDegree:
    def test_path(self, p4):
        assert wrong_degree_set(p4, [0, 1, 2]) == frozenset()

    def test_star(self, star):
        assert wrong_degree_set(star, [0, 1, 2]) == frozenset({1, 3})

    def test_triangle_path(self, k3):
        assert wrong_degree_set(k3, [1, 2]) == frozenset()


@pytest.mark.parametrize("seed", range(40))
def test_properties_on_lp_optimum(seed):
    rng = random.Random(400 + seed)
    n = rng.randint(3, 9)
    g = gen_random(n, rng.randint(n - 1, n * (n - 1) // 2), seed)
    relax = solve_relaxation(g)
    x = relax.x
    _, chain = narrow_cut_chain(g, x)
    J = build_tree(g, x, chain)
    used = [g.edges[i] for i in J.edges]
    assert len(J) == n - 1 <= relax.value
    assert len(components(n, used)) == 1
    for S in chain.cuts:
        assert sum((u in S) != (v in S) for u, v in used) == 1
    for lt, L in zip(J.level_trees, chain.levels):
        assert all(g.edges[i][0] in L and g.edges[i][1] in L for i in lt)
    T = wrong_degree_set(g, J.edges)
    assert len(T) % 2 == 0
    assert union_connectivity(g, x, chain) == []
    if n <= oracle.ENUMERATE_LP_MAX_N:
        assert oracle.odd_st_cuts_with_odd_crossing(g, T, J.edges) == []
