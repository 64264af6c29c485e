import math
import random

from indcount.corpus import all_graphs
from indcount.graph import (complete_graph, cycle_graph, empty_graph, path_graph, random_bounded_degree_graph,
                            relabel)
from indcount.oracle import brute_force_connected_subsets, brute_force_ind, brute_force_independence_counts


def test_examples():
    G = random_bounded_degree_graph(7, 3, 0.5, random.Random(0))
    assert brute_force_ind(empty_graph(1), G) == 7
    assert brute_force_ind(path_graph(3), cycle_graph(5)) == 5
    assert brute_force_ind(empty_graph(2), path_graph(3)) == 1
    assert brute_force_ind(empty_graph(0), G) == 1
    assert brute_force_ind(empty_graph(8), G) == 0


def test_connected_subsets_examples():
    assert len(brute_force_connected_subsets(complete_graph(3), 2)) == 6
    assert brute_force_connected_subsets(empty_graph(3), 2) == [(0,), (1,), (2,)]
    assert brute_force_connected_subsets(cycle_graph(4), 0) == []


def test_class_counts():
    assert [len(all_graphs(m)) for m in range(1, 6)] == [1, 2, 4, 11, 34]


def test_counts_sum_to_binomial():
    rng = random.Random(1)
    for _ in range(8):
        G = random_bounded_degree_graph(rng.randint(1, 8), 4, rng.random(), rng)
        for m in range(1, 5):
            assert sum(brute_force_ind(H, G) for H in all_graphs(m)) == math.comb(G.n, m)


def test_relabel_invariance():
    rng = random.Random(2)
    for _ in range(8):
        G = random_bounded_degree_graph(8, 3, 0.6, rng)
        perm = list(range(G.n))
        rng.shuffle(perm)
        G2 = relabel(G, perm)
        for H in all_graphs(3) + all_graphs(4):
            assert brute_force_ind(H, G) == brute_force_ind(H, G2)


def test_independence_counts():
    assert brute_force_independence_counts(path_graph(3), 3) == [1, 3, 1, 0]
