import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactus_evc.chordal import evc_forced, mcs_peo, mvc_chordal, mvc_forced
from cactus_evc.generators import bare_cycle, complete_graph, path_graph
from cactus_evc.graph import Graph, biconnected_components
from cactus_evc.oracle import brute_force_mvc, oracle_evc

from conftest import DIAMOND, make


def random_chordal(seed, n):
    """Chordal graph grown by adding simplicial vertices on random cliques."""
    rng = random.Random(seed)
    edges = []
    adj = {0: set()}
    for v in range(1, n):
        clique = [rng.randrange(v)]
        for w in rng.sample(sorted(adj[clique[0]]), len(adj[clique[0]])):
            if all(w in adj[c] for c in clique) and rng.random() < 0.6:
                clique.append(w)
        adj[v] = set(clique)
        for c in clique:
            adj[c].add(v)
            edges.append((c, v))
    return Graph(n, tuple(edges))


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def test_mcs_on_k4():
    eo, ok = mcs_peo(complete_graph(4))
    assert ok and sorted(eo.order) == [0, 1, 2, 3]
    assert all(eo.order[eo.position[v]] == v for v in range(4))


def test_mcs_rejects_c4():
    assert mcs_peo(bare_cycle(4))[1] is False


def test_mcs_on_fan():
    fan = make(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
    assert mcs_peo(fan)[1] is True


@pytest.mark.parametrize("i", range(1, 1253))
def test_mcs_matches_networkx_on_atlas(i):
    h = nx.graph_atlas(i)
    g = Graph(h.number_of_nodes(), tuple(h.edges()))
    assert mcs_peo(g)[1] == nx.is_chordal(h)


@given(st.integers(0, 10**9), st.integers(1, 10))
@settings(max_examples=150)
def test_mvc_matches_brute_force(seed, n):
    g = random_chordal(seed, n)
    assert nx.is_chordal(_nx(g))
    assert mvc_chordal(g) == brute_force_mvc(g)


@given(st.integers(0, 10**9), st.integers(1, 9), st.data())
@settings(max_examples=150)
def test_mvc_forced_matches_brute_force(seed, n, data):
    g = random_chordal(seed, n)
    forced = data.draw(st.sets(st.integers(0, n - 1)))
    assert mvc_forced(g, forced) == brute_force_mvc(g, forced)


@given(st.integers(0, 10**9), st.integers(2, 9), st.data())
@settings(max_examples=100)
def test_mvc_forced_monotone(seed, n, data):
    g = random_chordal(seed, n)
    forced = data.draw(st.sets(st.integers(0, n - 1)))
    v = data.draw(st.integers(0, n - 1))
    step = mvc_forced(g, forced | {v}) - mvc_forced(g, forced)
    assert step in (0, 1)


def test_mvc_examples():
    assert mvc_chordal(complete_graph(5)) == 4
    assert mvc_chordal(path_graph(5)) == 2
    assert mvc_forced(path_graph(3), {0}) == 2
    assert mvc_forced(DIAMOND, set()) == 2


def test_mvc_rejects_non_chordal():
    with pytest.raises(ValueError):
        mvc_chordal(bare_cycle(5))


def test_evc_forced_examples():
    assert evc_forced(complete_graph(3), set()) == 2
    assert evc_forced(complete_graph(4), set()) == 3
    assert evc_forced(DIAMOND, set()) == 3
    assert evc_forced(complete_graph(3), {0}) == 2


def test_evc_forced_requires_biconnected():
    with pytest.raises(ValueError):
        evc_forced(path_graph(3), set())
    with pytest.raises(ValueError):
        evc_forced(bare_cycle(4), set())


def _biconnected_chordal_samples():
    found = []
    for i in range(1, 1253):
        h = nx.graph_atlas(i)
        n = h.number_of_nodes()
        if n >= 3 and nx.is_biconnected(h) and nx.is_chordal(h):
            found.append(Graph(n, tuple(h.edges())))
    rng = random.Random(5)
    while len(found) < 120:
        g = random_chordal(rng.randrange(10**9), 8)
        if len(biconnected_components(g).blocks) == 1:
            found.append(g)
    return found


@pytest.mark.parametrize("g", _biconnected_chordal_samples())
def test_evc_forced_matches_oracle(g):
    assert evc_forced(g, set()) == oracle_evc(g)
