import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fs_lab import constructions as cons
from fs_lab.graph import (
    Graph,
    GraphError,
    connected_components,
    cut_vertices,
    induced_subgraph,
    is_biconnected,
    is_bipartite,
    is_connected,
    is_cycle_graph,
    is_theta_zero,
    load_graph,
    min_degree,
    theta_zero_reference,
)
import oracles


def atlas(max_n=7):
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() <= max_n:
            yield h, Graph.from_edges(h.number_of_nodes(), list(h.edges()))


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def test_from_edges_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], ([0], [1, 2]))


def test_json_round_trip(tmp_path):
    g = cons.complete_bipartite(2, 3)
    assert Graph.from_json(json.loads(json.dumps(g.to_json()))) == g
    path = tmp_path / "g.json"
    path.write_text(g.dumps())
    assert load_graph(path) == g


def test_malformed_json():
    with pytest.raises(GraphError):
        Graph.from_json({"edges": []})
    with pytest.raises(GraphError):
        Graph.from_json({"n": 3, "edges": [[0, 1, 2]]})


def test_basic_queries():
    g = cons.path(4)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.degrees() == [1, 2, 2, 1]
    assert min_degree(g) == 1
    assert g.neighbors(1) == [0, 2]
    assert is_connected(g)
    assert not is_connected(cons.edgeless(3))
    assert connected_components(Graph.from_edges(4, [(2, 3)])) == [
        frozenset({0}), frozenset({1}), frozenset({2, 3})]


def test_induced_subgraph():
    g = cons.cycle(6)
    h, keep = induced_subgraph(g, [0, 1, 2, 4])
    assert keep == [0, 1, 2, 4]
    assert h.edges() == [(0, 1), (1, 2)]
    with pytest.raises(GraphError):
        induced_subgraph(g, [])


def test_odd_cycle_witness():
    chk = is_bipartite(cons.cycle(5))
    assert not chk.bipartite
    cyc = chk.odd_cycle
    assert len(cyc) % 2 == 1
    g = cons.cycle(5)
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_small_biconnectivity_conventions():
    assert not is_biconnected(cons.complete(1))
    assert is_biconnected(cons.complete(2))
    assert not is_biconnected(cons.path(3))


def test_theta_zero():
    t = theta_zero_reference()
    assert t.n == 7 and t.num_edges == 8
    assert sorted(t.degrees()) == [2, 2, 2, 2, 2, 3, 3]
    assert is_theta_zero(t)
    assert is_theta_zero(t.relabel([3, 5, 0, 6, 1, 2, 4]))
    assert not is_theta_zero(cons.cycle(7))


@pytest.mark.parametrize("idx", range(1, 1253, 97))
def test_theta_zero_against_networkx(idx):
    h = nx.graph_atlas(idx)
    g = Graph.from_edges(h.number_of_nodes(), list(h.edges()))
    ref = nx.Graph(theta_zero_reference().edges())
    assert is_theta_zero(g) == nx.is_isomorphic(h, ref)


def test_theta_zero_atlas_unique():
    ref = nx.Graph(theta_zero_reference().edges())
    hits = [g for h, g in atlas(7) if h.number_of_nodes() == 7 and h.number_of_edges() == 8 and is_theta_zero(g)]
    assert len(hits) == 1
    assert nx.is_isomorphic(nx.Graph(hits[0].edges()), ref)


def test_atlas_zoo_against_networkx():
    for h, g in atlas(7):
        assert set(cut_vertices(g)) == set(nx.articulation_points(h))
        assert is_bipartite(g).bipartite == nx.is_bipartite(h)
        assert is_connected(g) == nx.is_connected(h)
        expected_bicon = h.number_of_nodes() >= 2 and nx.is_biconnected(h)
        assert is_biconnected(g) == expected_bicon
        degs = [d for _, d in h.degree()]
        assert is_cycle_graph(g) == (h.number_of_nodes() >= 3 and nx.is_connected(h) and set(degs) == {2})


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_cut_vertices_oracle(g):
    assert set(cut_vertices(g)) == oracles.cut_vertices(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_bipartite_oracle(g):
    chk = is_bipartite(g)
    assert chk.bipartite == oracles.is_bipartite(g)
    if chk.bipartite:
        a, b = chk.parts
        assert all((u in a) != (v in a) for u, v in g.edges())
        assert a | b == frozenset(range(g.n))


@settings(max_examples=100, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert len(cut_vertices(h)) == len(cut_vertices(g))
    assert is_bipartite(h).bipartite == is_bipartite(g).bipartite
