from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph

from hyperspec.errors import CapacityError, InputError
from hyperspec.graph import (
    Graph,
    adjacency_matrix,
    complete_graph,
    degree,
    enumerate_connected_induced_vertex_sets,
    format_graph,
    induced_subgraph,
    is_bipartite,
    is_connected,
    modified_induced_subgraph,
    parse_graph,
    signless_laplacian_matrix,
)
from hyperspec.limits import gen_cycle, gen_cycle_plus_pendant, gen_path

P3 = gen_path(3)


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def test_degree_examples():
    assert degree(P3, 1) == 2
    Ghat = modified_induced_subgraph(P3, [0, 1])
    assert degree(Ghat, 1) == 2
    assert degree(Graph.from_edges(1, [(0, 0), (0, 0)]), 0) == 2
    with pytest.raises(InputError):
        degree(P3, 3)


def test_is_connected_examples():
    assert is_connected(P3)
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph.from_edges(1, [(0, 0)]))


def test_is_bipartite_examples():
    assert is_bipartite(gen_cycle(4)) == ((0, 2), (1, 3))
    assert is_bipartite(gen_cycle(3)) is None
    assert is_bipartite(gen_cycle_plus_pendant(5)) is None
    assert is_bipartite(Graph.from_edges(2, [(0, 1), (1, 1)])) is None


def _has_odd_closed_walk(G):
    A = adjacency_matrix(G).astype(np.int64)
    if G.has_loops:
        return True
    P = A.copy()
    for length in range(1, 2 * G.n + 2):
        if length % 2 == 1 and np.trace(P) > 0:
            return True
        P = np.minimum(P @ A, 1)
    return False


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=8), st.lists(st.integers(0, 7), max_size=2))
def test_bipartite_matches_odd_walk_oracle(G, loop_at):
    loops = [0] * G.n
    for v in loop_at:
        if v < G.n:
            loops[v] += 1
    G = Graph(G.n, G.edges, tuple(loops))
    found = is_bipartite(G)
    assert (found is None) == _has_odd_closed_walk(G)
    if found is not None:
        V1 = set(found[0])
        assert all((u in V1) != (v in V1) for u, v in G.edges)
        assert sorted(found[0] + found[1]) == list(range(G.n))


def test_induced_subgraph_examples():
    assert induced_subgraph(P3, [0, 1]).edges == ((0, 1),)
    assert induced_subgraph(gen_cycle(3), [0, 2]).edges == ((0, 1),)
    two = induced_subgraph(P3, [0, 2])
    assert two.n == 2 and two.edges == ()
    with pytest.raises(InputError):
        induced_subgraph(P3, [])


def test_modified_induced_subgraph_examples():
    center = modified_induced_subgraph(P3, [1])
    assert center.n == 1 and center.loops == (2,)
    edge = modified_induced_subgraph(P3, [0, 1])
    assert edge.edges == ((0, 1),) and edge.loops == (0, 1)
    full = modified_induced_subgraph(P3, [0, 1, 2])
    assert full == P3
    with pytest.raises(InputError):
        modified_induced_subgraph(P3, set())


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6), st.data())
def test_modified_subgraph_matches_principal_submatrix(G, data):
    U = sorted(data.draw(st.sets(st.integers(0, G.n - 1), min_size=1)))
    Ghat = modified_induced_subgraph(G, U)
    Q = signless_laplacian_matrix(G)
    assert np.array_equal(signless_laplacian_matrix(Ghat), Q[np.ix_(U, U)])
    assert list(Ghat.degrees()) == [int(G.degrees()[u]) for u in U]


def _brute_connected_sets(G):
    nxG = nx.Graph()
    nxG.add_nodes_from(range(G.n))
    nxG.add_edges_from(G.edges)
    out = []
    for r in range(1, G.n + 1):
        for U in combinations(range(G.n), r):
            if nx.is_connected(nxG.subgraph(U)):
                out.append(U)
    return out


def test_enumeration_examples():
    assert enumerate_connected_induced_vertex_sets(gen_path(2)) == [(0,), (1,), (0, 1)]
    assert enumerate_connected_induced_vertex_sets(P3) == [(0,), (1,), (2,), (0, 1), (1, 2), (0, 1, 2)]
    assert len(enumerate_connected_induced_vertex_sets(gen_cycle(3))) == 7


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=8))
def test_enumeration_matches_brute_force(G):
    assert enumerate_connected_induced_vertex_sets(G) == _brute_connected_sets(G)


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_enumeration_complete_graph_count(n):
    assert len(enumerate_connected_induced_vertex_sets(complete_graph(n))) == 2**n - 1


def test_enumeration_capacity(monkeypatch):
    G = gen_path(17)
    with pytest.raises(CapacityError, match="--cap"):
        enumerate_connected_induced_vertex_sets(G)
    assert len(enumerate_connected_induced_vertex_sets(G, cap=17)) == 17 * 18 // 2
    monkeypatch.setenv("HYPERSPEC_CAP", "17")
    assert len(enumerate_connected_induced_vertex_sets(G)) == 153
    monkeypatch.setenv("HYPERSPEC_CAP", "4")
    with pytest.raises(CapacityError):
        enumerate_connected_induced_vertex_sets(gen_path(5))


def test_matrix_examples():
    A2 = adjacency_matrix(gen_path(2))
    assert A2.tolist() == [[0, 1], [1, 0]]
    assert np.allclose(np.linalg.eigvalsh(A2), [-1, 1])
    assert adjacency_matrix(Graph.from_edges(1, [(0, 0)])).tolist() == [[0.0]]
    assert np.allclose(np.linalg.eigvalsh(adjacency_matrix(P3)), [-np.sqrt(2), 0, np.sqrt(2)])
    Q2 = signless_laplacian_matrix(gen_path(2))
    assert Q2.tolist() == [[1, 1], [1, 1]]
    looped = Graph.from_edges(2, [(0, 1), (0, 0)])
    assert signless_laplacian_matrix(looped).tolist() == [[2, 1], [1, 1]]
    assert np.allclose(np.linalg.eigvalsh(signless_laplacian_matrix(looped)), [(3 - 5**0.5) / 2, (3 + 5**0.5) / 2])
    assert np.allclose(np.linalg.eigvalsh(signless_laplacian_matrix(P3)), [0, 1, 3])


def test_matrices_are_exactly_symmetric(rng):
    for _ in range(10):
        G = random_graph(rng)
        for M in (adjacency_matrix(G), signless_laplacian_matrix(G)):
            assert np.array_equal(M, M.T)


def test_parse_and_format_roundtrip():
    G = parse_graph("3 4\n0 1\n1 2\n2 2\n2 2\n")
    assert G.edges == ((0, 1), (1, 2)) and G.loops == (0, 0, 2)
    assert parse_graph(format_graph(G)) == G


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n0 1\n1 0\n", "3 2\n0 1\n", "3 1\n0 5\n", "x y\n", "2 1\n0 1 1\n"],
)
def test_parse_rejects_bad_input(text):
    with pytest.raises(InputError):
        parse_graph(text)
