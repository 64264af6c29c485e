import random

import pytest
from hypothesis import given, settings, strategies as st

from indcount.graph import (GraphError, build_graph, complete_graph, connected_components, cycle_graph,
                            disjoint_union, empty_graph, induced_subgraph, max_degree,
                            neighborhood_of_set, path_graph, petersen_graph, random_bounded_degree_graph,
                            random_regular_graph, relabel)


def test_build_path():
    P3 = build_graph(3, [(0, 1), (1, 2)])
    assert P3.adjacency == ((1,), (0, 2), (1,))
    assert [P3.degree(v) for v in range(3)] == [1, 2, 1]


def test_single_vertex():
    G = build_graph(1, [])
    assert G.n == 1 and G.adjacency == ((),)


@pytest.mark.parametrize("n, edges", [
    (2, [(0, 0)]),
    (2, [(0, 1), (1, 0)]),
    (2, [(0, 2)]),
    (2, [(-1, 0)]),
])
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_max_degree():
    assert max_degree(path_graph(3)) == 2
    assert max_degree(empty_graph(5)) == 0
    assert max_degree(empty_graph(0)) == 0
    assert max_degree(complete_graph(4)) == 3


def test_induced_subgraph():
    assert induced_subgraph(cycle_graph(5), (0, 1, 2)) == path_graph(3)
    assert induced_subgraph(path_graph(4), ()).n == 0
    assert induced_subgraph(complete_graph(4), (0, 2)) == complete_graph(2)
    with pytest.raises(GraphError):
        induced_subgraph(path_graph(3), (0, 3))


def test_components():
    G = build_graph(3, [(0, 1)])
    assert connected_components(G) == [(0, 1), (2,)]
    assert connected_components(cycle_graph(4)) == [(0, 1, 2, 3)]
    assert connected_components(empty_graph(3)) == [(0,), (1,), (2,)]


def test_neighborhood():
    P3 = path_graph(3)
    assert neighborhood_of_set(P3, (1,)) == (0, 2)
    assert neighborhood_of_set(P3, (0, 1, 2)) == ()
    assert neighborhood_of_set(cycle_graph(5), (0,)) == (1, 4)


def test_petersen():
    P = petersen_graph()
    assert P.n == 10 and P.num_edges() == 15 and set(P.degree_sequence()) == {3}


def test_random_regular():
    G = random_regular_graph(3, 50, random.Random(1))
    assert all(G.degree(v) == 3 for v in range(50))


def test_disjoint_union_identity():
    G = cycle_graph(4)
    assert disjoint_union(G, empty_graph(0)) == G


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@given(graphs(), st.data())
def test_induced_properties(G, data):
    S = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
    F = induced_subgraph(G, S)
    for v in range(F.n):
        for w in F.adjacency[v]:
            assert v in F.adjacency[w]
    assert max_degree(F) <= max_degree(G)
    assert len(neighborhood_of_set(G, S)) <= len(S) * max_degree(G)


@given(graphs())
def test_components_partition(G):
    comps = connected_components(G)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(G.n))
    assert len(flat) == len(set(flat))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)


@settings(max_examples=50)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_degrees(G, r):
    perm = list(range(G.n))
    r.shuffle(perm)
    assert relabel(G, perm).degree_sequence() == G.degree_sequence()


def test_random_bounded_degree(rng):
    for _ in range(20):
        G = random_bounded_degree_graph(12, 3, 0.7, rng)
        assert max_degree(G) <= 3
