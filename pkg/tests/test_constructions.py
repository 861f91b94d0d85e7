import networkx as nx
import pytest

from fs_lab import constructions as cons
from fs_lab.engine import FsInstance, component_census, friendly_swaps
from fs_lab.graph import is_bipartite, is_connected, min_degree


def test_named_families():
    assert cons.star(4).degrees() == [3, 1, 1, 1]
    t = cons.theta0()
    assert t.n == 7 and t.num_edges == 8 and sorted(t.degrees()) == [2, 2, 2, 2, 2, 3, 3]
    k33 = cons.complete_bipartite(3, 3)
    assert min_degree(k33) == 3 and is_bipartite(k33).bipartite
    assert cons.cycle(6).bipartition is not None and cons.cycle(5).bipartition is None
    assert cons.star_plus(5).has_edge(1, 2)
    assert cons.wheel(5).num_edges == 8


@pytest.mark.parametrize("call", [
    lambda: cons.cycle(2), lambda: cons.star_plus(2), lambda: cons.complete_bipartite(0, 3),
    lambda: cons.prop_1_6_pair(4, 5), lambda: cons.prop_1_6_pair(6, 4),
    lambda: cons.thm_1_11_pair(3, 3, 3), lambda: cons.thm_1_11_pair(2, 0, 3),
    lambda: cons.random_graph_min_degree(5, 5), lambda: cons.random_bipartite_subgraph(3, 4),
])
def test_illegal_parameters(call):
    with pytest.raises(cons.ConstructionError):
        call()


def test_prop_1_6_singleton_groups():
    pair = cons.prop_1_6_pair(5, 5)
    assert nx.is_isomorphic(nx.Graph(pair.x.edges()), nx.cycle_graph(5))
    assert nx.is_isomorphic(nx.Graph(pair.y.edges()), nx.cycle_graph(5))
    assert not component_census(pair.instance).connected


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_prop_1_6_bounds(n):
    pair = cons.prop_1_6_pair(n, 5)
    dx, dy = min_degree(pair.x), min_degree(pair.y)
    assert 5 * dx >= 3 * n - 20 and 5 * dy >= 3 * n - 15
    assert is_connected(pair.x) and is_connected(pair.y)
    assert pair.sigma == tuple(range(n))


def test_thm_1_11_small():
    pair = cons.thm_1_11_pair(2, 1, 2)
    assert pair.x.num_edges == 2 and min_degree(pair.x) == 1
    assert nx.is_isomorphic(nx.Graph(pair.y.edges()), nx.cycle_graph(4))
    assert component_census(pair.instance).num_components >= 3


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_thm_1_11_all_legal(r):
    total = 3 * r // 2
    for d1 in range(r + 1):
        d2 = total - d1
        if not 0 <= d2 <= r:
            continue
        pair = cons.thm_1_11_pair(r, d1, d2)
        assert min_degree(pair.x) == d1 and min_degree(pair.y) >= d2
        assert friendly_swaps(pair.instance, pair.sigma) == []
        for g in (pair.x, pair.y):
            a, b = g.bipartition
            assert len(a) == len(b) == r
            assert all((u in a) != (v in a) for u, v in g.edges())


def test_random_graph_forced_and_reproducible():
    k6 = cons.random_graph_min_degree(6, 5, seed=1)
    assert k6.num_edges == 15
    assert cons.random_graph_min_degree(6, 4, seed=9) == cons.random_graph_min_degree(6, 4, seed=9)
    for seed in range(100):
        g = cons.random_graph_min_degree(8, 4, seed=seed)
        assert min_degree(g) >= 4 and is_connected(g)


def test_random_bipartite():
    k33 = cons.random_bipartite_subgraph(3, 3, seed=0)
    assert k33.num_edges == 9
    g = cons.random_bipartite_subgraph(4, 3, seed=5)
    assert min_degree(g) >= 3 and is_bipartite(g).bipartite
    seen = set()
    for seed in range(200):
        h = cons.random_bipartite_subgraph(2, 1, seed=seed)
        assert min_degree(h) >= 1
        seen.add(tuple(h.edges()))
    assert len(seen) <= 7 and all(len(e) >= 2 for e in seen)


def test_lower_bound_pair_json():
    pair = cons.thm_1_11_pair(3, 2, 2)
    d = pair.to_json()
    assert d["sigma"] == list(range(6)) and d["meta"]["blocks"]["A"] == [0, 1]


def test_fixture_zoo():
    zoo = cons.fixture_zoo(7)
    assert "theta0" in zoo and all(g.n == 7 for g in zoo.values())
    assert set(cons.fixture_zoo(1)) == {"complete", "path", "star", "edgeless"}


@pytest.mark.parametrize("r", range(2, 9))
def test_isolated_pair_y_degree_is_exact(r):
    for d1, d2 in [(d, 3 * r // 2 - d) for d in range(r + 1) if 0 <= 3 * r // 2 - d <= r]:
        pair = cons.thm_1_11_pair(r, d1, d2)
        assert min_degree(pair.y) == d2 == pair.meta["delta_y"]
