import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stpath.gen import gen_gap, gen_random
from stpath.graph import Graph, components


def test_tree_when_m_is_minimal():
    g = gen_random(4, 3, 7)
    assert g.m == 3 and len(components(4, g.edges)) == 1


def test_complete_when_m_is_maximal():
    g = gen_random(5, 10, 1)
    assert sorted(g.edges) == [(a, b) for a in range(5) for b in range(a + 1, 5)]


def test_deterministic_per_seed():
    assert gen_random(6, 7, 42) == gen_random(6, 7, 42)
    assert gen_random(6, 7, 42).to_text() == gen_random(6, 7, 42).to_text()


@pytest.mark.parametrize("n,m", [(4, 2), (4, 7), (1, 0)])
def test_rejects_bad_m(n, m):
    with pytest.raises(ValueError):
        gen_random(n, m, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12), st.data(), st.integers(0, 2**32))
def test_random_graphs_are_valid(n, data, seed):
    m = data.draw(st.integers(n - 1, n * (n - 1) // 2))
    g = gen_random(n, m, seed)
    assert isinstance(g, Graph) and g.m == m and g.s != g.t


def test_gap_rejects_k1():
    with pytest.raises(ValueError):
        gen_gap(1)


@pytest.mark.parametrize("k,n", [(2, 5), (3, 8), (4, 11)])
def test_gap_shape(k, n):
    g = gen_gap(k)
    assert g.n == n and g.m == 3 * k and (g.s, g.t) == (0, 1)
    assert sorted(len(g.neighbors(v)) for v in (0, 1)) == [3, 3]
    assert all(len(g.neighbors(v)) == 2 for v in range(2, n))
