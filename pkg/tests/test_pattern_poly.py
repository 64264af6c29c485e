import random
from itertools import product

import pytest

from indcount.corpus import all_graphs
from indcount.graph import (build_graph, complete_graph, disjoint_union, empty_graph, path_graph,
                            random_bounded_degree_graph, relabel)
from indcount.linear_extractor import enumerate_compositions
from indcount.oracle import brute_force_ind
from indcount.pattern_poly import (decompose_pattern, lambda_z_mu, match_to_multiset, materialize,
                                   monomial, z_mu_coefficient, z_mu_coefficients)

K1, K2 = empty_graph(1), complete_graph(2)
D_K1_K2 = decompose_pattern(disjoint_union(K2, K2, K1))


def test_decompose_examples():
    D = decompose_pattern(path_graph(3))
    assert D.components == (path_graph(3),) and D.rho == (1,) and D.h == (3,)
    assert D_K1_K2.components == (K1, K2)
    assert D_K1_K2.rho == (1, 2) and D_K1_K2.h == (1, 2) and D_K1_K2.m == 5 and D_K1_K2.r == 2
    D = decompose_pattern(empty_graph(3))
    assert D.components == (K1,) and D.rho == (3,) and D.r == 1


def test_decompose_empty():
    with pytest.raises(ValueError):
        decompose_pattern(empty_graph(0))


def test_decompose_groups_relabelled_copies():
    # two P3 copies labelled differently, one K3
    H = build_graph(9, [(0, 1), (1, 2), (3, 5), (5, 4), (6, 7), (7, 8), (6, 8)])
    D = decompose_pattern(H)
    assert D.rho == (2, 1) and D.h == (3, 3)
    assert D.components[0].num_edges() == 2


def test_match_examples():
    assert match_to_multiset(disjoint_union(K1, K2), D_K1_K2) == (1, 1)
    assert match_to_multiset(path_graph(3), D_K1_K2) is None
    assert match_to_multiset(disjoint_union(K2, K2), D_K1_K2) == (0, 2)


def test_lambda_examples():
    F = disjoint_union(K1, K2)
    assert lambda_z_mu(F, 3, (2, 3), D_K1_K2) == 6
    assert lambda_z_mu(F, 2, (2, 3), D_K1_K2) == 0
    assert lambda_z_mu(path_graph(3), 3, (2, 3), D_K1_K2) == 0


def test_lambda_isomorphism_invariant():
    rng = random.Random(0)
    D = decompose_pattern(disjoint_union(path_graph(3), K1, K2))
    for m in range(1, 6):
        for F in all_graphs(m):
            perm = list(range(m))
            rng.shuffle(perm)
            G = relabel(F, perm)
            assert lambda_z_mu(F, m, (2, 3, 5), D) == lambda_z_mu(G, m, (2, 3, 5), D)


def test_z_mu_examples():
    D = decompose_pattern(K1)
    assert z_mu_coefficient(path_graph(3), (1,), D, 2) == 1
    assert z_mu_coefficient(path_graph(3), (2,), D, 2) == 4
    assert z_mu_coefficient(complete_graph(2), (1,), D, 2) == 0
    assert z_mu_coefficients(path_graph(3), (1,), D, 0) == [1]


def test_materialize_roundtrip():
    for H in [disjoint_union(K1, K2), disjoint_union(path_graph(3), K2), disjoint_union(complete_graph(3), K1)]:
        D = decompose_pattern(H)
        for total in range(1, 7):
            for gamma in enumerate_compositions(total, D.h):
                assert match_to_multiset(materialize(gamma, D), D) == gamma


def definition_value(G, mu, D, i):
    return sum(monomial(mu, g) * brute_force_ind(materialize(g, D), G)
               for g in enumerate_compositions(i, D.h))


def test_agreement_with_definition():
    rng = random.Random(21)
    decomps = {}
    for m in range(1, 5):
        for H in all_graphs(m):
            D = decompose_pattern(H)
            decomps[(D.components, D.h)] = D
    hosts = [random_bounded_degree_graph(rng.randint(1, 9), 3, rng.random(), rng) for _ in range(6)]
    for D in decomps.values():
        for G in hosts:
            mus = list(product((1, 2, 3), repeat=D.r))
            for mu in rng.sample(mus, min(3, len(mus))):
                got = z_mu_coefficients(G, mu, D, D.m)
                assert got == [definition_value(G, mu, D, i) for i in range(D.m + 1)]


def test_generic_and_kernel_paths_agree():
    rng = random.Random(4)
    D = decompose_pattern(disjoint_union(K1, K2, path_graph(3)))
    for _ in range(5):
        G = random_bounded_degree_graph(rng.randint(3, 8), 3, 0.6, rng)
        mu = tuple(rng.randint(1, 4) for _ in range(D.r))
        assert z_mu_coefficients(G, mu, D, 5) == z_mu_coefficients(G, mu, D, 5, generic=True)


def test_multiplicativity():
    rng = random.Random(13)
    D = decompose_pattern(disjoint_union(K1, K2, path_graph(3)))
    m = 6
    for _ in range(6):
        G1 = random_bounded_degree_graph(rng.randint(1, 8), 3, 0.6, rng)
        G2 = random_bounded_degree_graph(rng.randint(1, 8), 3, 0.6, rng)
        mu = tuple(rng.randint(0, 3) for _ in range(D.r))
        a = z_mu_coefficients(G1, mu, D, m)
        b = z_mu_coefficients(G2, mu, D, m)
        ab = z_mu_coefficients(disjoint_union(G1, G2), mu, D, m)
        assert ab == [sum(a[x] * b[i - x] for x in range(i + 1)) for i in range(m + 1)]
