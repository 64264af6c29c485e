import json
import random

import pytest

from indcount.corpus import host_corpus, small_patterns
from indcount.graph import (build_graph, complete_graph, cycle_graph, disjoint_union, empty_graph,
                            path_graph, random_bounded_degree_graph, star_graph)
from indcount.oracle import brute_force_ind
from indcount.pipeline import count_induced, point_weights

K1, K2 = empty_graph(1), complete_graph(2)


@pytest.mark.parametrize("H, G, expected", [
    (K2, path_graph(3), 2),
    (disjoint_union(K2, K2), cycle_graph(6), 3),
    (disjoint_union(K1, K2), path_graph(4), 2),
    (complete_graph(3), cycle_graph(5), 0),
    (empty_graph(0), cycle_graph(5), 1),
    (K1, cycle_graph(5), 5),
])
def test_examples(H, G, expected):
    assert count_induced(H, G).count == expected


def test_degree_shortcut():
    res = count_induced(star_graph(3), cycle_graph(8))
    assert res.count == 0 and res.method == "trivial-zero"


def test_absent_component_shortcut():
    res = count_induced(disjoint_union(complete_graph(3), K1), disjoint_union(path_graph(4), path_graph(3)))
    assert res.count == 0 and res.method == "absent-component"


def test_connected_bypass():
    res = count_induced(path_graph(3), cycle_graph(7))
    assert res.method == "connected" and res.count == 7


def test_point_weights():
    assert point_weights((2, 3), (1, 2)) == (2, 9)


def test_diagnostics_json():
    res = count_induced(disjoint_union(K2, K2), cycle_graph(6))
    doc = json.loads(json.dumps(res.as_dict()))
    assert int(doc["count"]) == 3
    for key in ("n", "m", "delta", "r", "k", "method", "kernel", "timings"):
        assert key in doc
    assert doc["k"] == 1 and doc["r"] == 1


def test_oracle_equivalence_small():
    patterns = small_patterns(4)
    for G in host_corpus(count=30, seed=3):
        for H in patterns:
            assert count_induced(H, G).count == brute_force_ind(H, G)


def test_three_component_classes():
    rng = random.Random(2)
    H = disjoint_union(K1, K2, path_graph(3))
    for _ in range(8):
        G = random_bounded_degree_graph(rng.randint(6, 10), 3, 0.5, rng)
        assert count_induced(H, G).count == brute_force_ind(H, G)


def test_workers_same_result():
    rng = random.Random(9)
    G = random_bounded_degree_graph(10, 3, 0.6, rng)
    H = disjoint_union(K1, K1, K2)
    assert count_induced(H, G, workers=2).count == count_induced(H, G).count == brute_force_ind(H, G)


def test_disjoint_union_consistency():
    rng = random.Random(77)
    G1 = random_bounded_degree_graph(14, 3, 0.6, rng)
    G2 = random_bounded_degree_graph(13, 3, 0.6, rng)
    U = disjoint_union(G1, G2)
    for m in range(1, 7):
        total = sum(count_induced(empty_graph(a), G1).count * count_induced(empty_graph(m - a), G2).count
                    for a in range(m + 1))
        assert count_induced(empty_graph(m), U).count == total


def test_isolated_vertex_monotone():
    # 9 vertices of degree <= 3 always contain an independent 3-set, so every
    # step below is strict
    rng = random.Random(5)
    for _ in range(5):
        G = random_bounded_degree_graph(9, 3, 0.6, rng)
        bigger = disjoint_union(G, K1)
        for m in range(1, 5):
            before = count_induced(empty_graph(m), G).count
            after = count_induced(empty_graph(m), bigger).count
            assert after == before + count_induced(empty_graph(m - 1), G).count
            assert after > before
