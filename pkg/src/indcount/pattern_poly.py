"""Pattern decomposition and univariate evaluations of the multivariate
pattern polynomial.

For a pattern made of connected, pairwise non-isomorphic pieces
H_1..H_r with sizes h, the evaluation at mu has coefficients

    s_i(mu) = sum over gamma with gamma.h = i of mu^gamma * ind(gamma H, G)

and is itself a component-product counting polynomial (alpha = 1), so its
coefficients come out of the generic engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .bigcp import ComponentProductInstance, compute_bigcp_coefficients
from .graph import Graph, connected_components, disjoint_union, induced_subgraph
from .subgraph_enum import ConnectedSubsetIndex, is_isomorphic_connected

ExponentVector = tuple[int, ...]


@dataclass(frozen=True)
class PatternDecomposition:
    components: tuple[Graph, ...]
    rho: ExponentVector
    h: ExponentVector

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def m(self) -> int:
        return dot(self.rho, self.h)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def hadamard(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    return tuple(x * y for x, y in zip(a, b))


def monomial(mu: Sequence[int], gamma: Sequence[int]) -> int:
    """mu^gamma = prod mu_j^gamma_j over exact integers."""
    value = 1
    for base, exp in zip(mu, gamma):
        for _ in range(exp):
            value *= base
    return value


def _shape_key(C: Graph):
    return (C.n, C.num_edges(), C.degree_sequence())


def decompose_pattern(H: Graph) -> PatternDecomposition:
    if H.n == 0:
        raise ValueError("empty pattern has no decomposition")
    classes: list[Graph] = []
    counts: list[int] = []
    for comp in connected_components(H):
        C = induced_subgraph(H, comp)
        for j, rep in enumerate(classes):
            if _shape_key(rep) == _shape_key(C) and is_isomorphic_connected(rep, C):
                counts[j] += 1
                break
        else:
            classes.append(C)
            counts.append(1)
    order = sorted(range(len(classes)), key=lambda j: _shape_key(classes[j]))
    return PatternDecomposition(
        components=tuple(classes[j] for j in order),
        rho=tuple(counts[j] for j in order),
        h=tuple(classes[j].n for j in order),
    )


def match_component(C: Graph, D: PatternDecomposition) -> Optional[int]:
    """Index j with C isomorphic to H_j (C connected), else None."""
    key = _shape_key(C)
    for j, Hj in enumerate(D.components):
        if Hj.n == C.n and _shape_key(Hj) == key and is_isomorphic_connected(Hj, C):
            return j
    return None


def match_to_multiset(F: Graph, D: PatternDecomposition) -> Optional[ExponentVector]:
    gamma = [0] * D.r
    for comp in connected_components(F):
        j = match_component(induced_subgraph(F, comp), D)
        if j is None:
            return None
        gamma[j] += 1
    return tuple(gamma)


def materialize(gamma: Sequence[int], D: PatternDecomposition) -> Graph:
    """The graph gamma_1 H_1 + ... + gamma_r H_r."""
    parts = [Hj for g, Hj in zip(gamma, D.components) for _ in range(g)]
    return disjoint_union(*parts)


def lambda_z_mu(F: Graph, i: int, mu: Sequence[int], D: PatternDecomposition) -> int:
    if len(mu) != D.r:
        raise ValueError("mu length must equal the number of pattern classes")
    if F.n != i:
        return 0
    gamma = match_to_multiset(F, D)
    if gamma is None or dot(gamma, D.h) != i:
        return 0
    return monomial(mu, gamma)


def subset_classes(index: ConnectedSubsetIndex, D: PatternDecomposition) -> list[int]:
    """For each connected subset, the j with G[S] isomorphic to H_j, else -1.
    Cached on the index since it does not depend on mu."""
    key = ("classes", D)
    if key not in index._cache:
        sizes = set(D.h)
        G = index.graph
        out = []
        for S in index.subsets:
            j = match_component(induced_subgraph(G, S), D) if len(S) in sizes else None
            out.append(-1 if j is None else j)
        index._cache[key] = out
    return index._cache[key]


def z_mu_instance(mu: Sequence[int], D: PatternDecomposition) -> ComponentProductInstance:
    mu = tuple(mu)
    if len(mu) != D.r:
        raise ValueError("mu length must equal the number of pattern classes")

    def weight(C: Graph) -> int:
        j = match_component(C, D)
        return 0 if j is None else mu[j]

    def signature(F: Graph):
        gamma = match_to_multiset(F, D)
        sizes = tuple(sorted(len(c) for c in connected_components(F)))
        return sizes, gamma

    def weights_for(index: ConnectedSubsetIndex) -> list[int]:
        return [0 if j < 0 else mu[j] for j in subset_classes(index, D)]

    return ComponentProductInstance(
        weight=weight,
        lam=lambda F, i: lambda_z_mu(F, i, mu, D),
        key=signature,
        weights_for=weights_for,
        beta_note="O(i^2 r Delta^(i-1))",
    )


def z_mu_coefficients(G: Graph, mu: Sequence[int], D: PatternDecomposition, m: int,
                      index: Optional[ConnectedSubsetIndex] = None, generic: bool = False) -> list[int]:
    """s_0(mu)..s_m(mu) for host G."""
    if m == 0:
        return [1]
    return compute_bigcp_coefficients(G, m, z_mu_instance(mu, D), index, generic=generic).e


def z_mu_coefficient(G: Graph, mu: Sequence[int], D: PatternDecomposition, m: int,
                     index: Optional[ConnectedSubsetIndex] = None, generic: bool = False) -> int:
    return z_mu_coefficients(G, mu, D, m, index, generic)[m]

