"""Coefficients of bounded induced graph counting polynomials.

A polynomial p(G)(z) = sum_i e_i(G) z^i with e_0 = 1 whose coefficients are
finite combinations e_i = sum_F lambda(F, i) ind(F, G) over graphs F with at
most alpha*i vertices. The inverse power sums p_k of such a polynomial are
additive over disjoint unions, so they are supported on connected induced
subgraphs: p_k = sum over connected S of a(S, k). The table a(S, k) is
built bottom-up from lambda and the Newton identities, then e_1..e_m are
recovered from p_1..p_m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterator, Optional

from . import kernels
from ._kernel_py import is_connected_mask, local_adjacency
from .graph import Graph, connected_components, induced_subgraph
from .subgraph_enum import ConnectedSubsetIndex, enumerate_connected_subsets


class NonIntegralError(ArithmeticError):
    """Newton recovery hit a division that is not exact."""


@dataclass(frozen=True)
class BigcpInstance:
    """lam(F, i) must be isomorphism invariant and vanish when |V(F)| > alpha*i.

    If ``key`` is given, oracle calls are memoized on (key(F), i); key must
    then be an isomorphism-invariant signature that determines lam.
    """

    alpha: int
    lam: Callable[[Graph, int], int]
    beta_note: str = ""
    key: Optional[Callable[[Graph], Hashable]] = None


@dataclass(frozen=True)
class ComponentProductInstance(BigcpInstance):
    """Oracle of the form lam(F, i) = [|V(F)| = i] * prod over components C of w(C).

    Both the independence polynomial and the pattern polynomial evaluations
    have this shape, which lets the table be filled by the fast kernel
    using one weight per connected subset.
    """

    alpha: int = 1
    lam: Callable[[Graph, int], int] = field(default=None, repr=False)  # type: ignore[assignment]
    weight: Callable[[Graph], int] = field(default=None, repr=False)  # type: ignore[assignment]
    # optional bulk replacement for subset_weights (e.g. cached classifications)
    weights_for: Optional[Callable[[ConnectedSubsetIndex], list[int]]] = field(default=None, repr=False)

    def __post_init__(self):
        if self.alpha != 1:
            raise ValueError("component-product oracles have alpha = 1")
        if self.weight is None:
            raise ValueError("weight function required")
        if self.lam is None:
            object.__setattr__(self, "lam", self._product_lam)

    def _product_lam(self, F: Graph, i: int) -> int:
        if F.n != i:
            return 0
        value = 1
        for comp in connected_components(F):
            value *= self.weight(induced_subgraph(F, comp))
            if not value:
                return 0
        return value

    def subset_weights(self, index: ConnectedSubsetIndex) -> list[int]:
        if self.weights_for is not None:
            return self.weights_for(index)
        G = index.graph
        return [self.weight(induced_subgraph(G, S)) for S in index.subsets]


def independence_instance() -> ComponentProductInstance:
    """The independence polynomial: lam(F, i) = 1 iff F is i isolated vertices."""
    return ComponentProductInstance(weight=lambda C: 1 if C.n == 1 else 0,
                                    beta_note="O(i)")


@dataclass
class CoefficientSequence:
    e: list[int]  # e_0..e_m, e_0 = 1
    p: list[int]  # p_1..p_m stored at p[0]..p[m-1]


class CoefficientTable:
    """a(S, k) for connected S with |S| <= alpha*k, k = 1..m."""

    def __init__(self, index: ConnectedSubsetIndex, m: int, alpha: int, rows: list[list[int]]):
        self.index = index
        self.m = m
        self.alpha = alpha
        self.rows = rows

    def __getitem__(self, key: tuple) -> int:
        S, k = key
        if not 1 <= k <= self.m or len(S) > self.alpha * k:
            raise KeyError(key)
        return self.rows[self.index.id_of(tuple(S))][k]

    def __contains__(self, key) -> bool:
        S, k = key
        return tuple(S) in self.index and 1 <= k <= self.m and len(S) <= self.alpha * k

    def items(self, k: int) -> Iterator[tuple[tuple[int, ...], int]]:
        limit = self.alpha * k
        for S, row in zip(self.index.subsets, self.rows):
            if len(S) <= limit:
                yield S, row[k]

    def power_sum(self, k: int) -> int:
        return sum(v for _, v in self.items(k))


def newton_power_sums_from_coeffs(e: list[int], m: int) -> list[int]:
    """p_1..p_m from e (e[0] = 1; missing entries are 0) via
    p_k = -k e_k - sum_{i=1}^{k-1} e_i p_{k-i}."""
    if not e or e[0] != 1:
        raise ValueError("e_0 must be 1")
    coeff = lambda i: e[i] if i < len(e) else 0  # noqa: E731
    p = [0] * (m + 1)
    for k in range(1, m + 1):
        p[k] = -k * coeff(k) - sum(coeff(i) * p[k - i] for i in range(1, k))
    return p[1:]


def newton_coeffs_from_power_sums(p: list[int]) -> list[int]:
    """Inverse of :func:`newton_power_sums_from_coeffs`; returns e_0..e_m.

    k e_k = -sum_{i=0}^{k-1} e_i p_{k-i}; the division must be exact.
    """
    m = len(p)
    e = [1] + [0] * m
    for k in range(1, m + 1):
        total = -sum(e[i] * p[k - i - 1] for i in range(k))
        q, r = divmod(total, k)
        if r:
            raise NonIntegralError(
                f"k*e_k = {total} not divisible by k = {k}; power sums are not integral-realizable")
        e[k] = q
    return e


def iter_covers(s: int) -> Iterator[tuple[int, int]]:
    """All pairs (U, T) of submasks of the full s-bit mask with U | T = full."""
    full = (1 << s) - 1
    for U in range(full + 1):
        R = full ^ U
        W = U
        while True:
            yield U, R | W
            if W == 0:
                break
            W = (W - 1) & U


def _generic_table(G: Graph, m: int, inst: BigcpInstance, T: ConnectedSubsetIndex) -> list[list[int]]:
    alpha = inst.alpha
    rows = [[0] * (m + 1) for _ in T.subsets]
    memo: dict = {}

    def lam(U: tuple, i: int) -> int:
        F = induced_subgraph(G, U)
        key = (inst.key(F), i) if inst.key is not None else (U, i)
        if key not in memo:
            memo[key] = inst.lam(F, i)
        return memo[key]

    for k in range(1, m + 1):
        for sid, S in enumerate(T.subsets):
            s = len(S)
            if s > alpha * k:
                continue
            ladj = local_adjacency(S, G.adjacency)
            verts = lambda mask: tuple(S[j] for j in range(s) if mask >> j & 1)  # noqa: E731
            acc = -k * lam(S, k)
            full = (1 << s) - 1
            for i in range(1, k):
                for U in range(full + 1):
                    if bin(U).count("1") > alpha * i:
                        continue
                    lu = lam(verts(U), i)
                    if not lu:
                        continue
                    R = full ^ U
                    W = U
                    while True:
                        Tm = R | W
                        if Tm and bin(Tm).count("1") <= alpha * (k - i) and is_connected_mask(Tm, ladj):
                            acc -= lu * rows[T.id_of(verts(Tm))][k - i]
                        if W == 0:
                            break
                        W = (W - 1) & U
            rows[sid][k] = acc
    return rows


def compute_coefficient_table(G: Graph, m: int, inst: BigcpInstance, T: ConnectedSubsetIndex,
                              generic: bool = False) -> CoefficientTable:
    """Fill a(S, k) for all S in T with |S| <= alpha*k.

    Component-product oracles go through the compiled/fallback kernel
    unless ``generic`` is set; everything else uses the direct recurrence.
    """
    if T.graph is not G:
        raise ValueError("index was built for a different graph")
    if T.k < inst.alpha * m:
        raise ValueError(f"index size bound {T.k} < alpha*m = {inst.alpha * m}")
    if isinstance(inst, ComponentProductInstance) and not generic:
        rows = kernel_rows(T, inst.subset_weights(T), m)
    else:
        rows = _generic_table(G, m, inst, T)
    return CoefficientTable(T, m, inst.alpha, rows)


def local_structure(T: ConnectedSubsetIndex, kernel=None):
    """Per-subset kernel structure, cached on the index (independent of weights)."""
    kernel = kernel or kernels
    key = kernel.IMPLEMENTATION
    if key not in T._cache:
        T._cache[key] = kernel.prepare(T.subsets, T.ids, T.graph.adjacency)
    return T._cache[key]


def kernel_rows(T: ConnectedSubsetIndex, weights: list[int], m: int, kernel=None) -> list[list[int]]:
    kernel = kernel or kernels
    return kernel.fill_table(local_structure(T, kernel), weights, m)


def power_sums(table: CoefficientTable) -> list[int]:
    return [table.power_sum(k) for k in range(1, table.m + 1)]


def compute_bigcp_coefficients(G: Graph, m: int, inst: BigcpInstance,
                               T: Optional[ConnectedSubsetIndex] = None,
                               generic: bool = False) -> CoefficientSequence:
    if m == 0:
        return CoefficientSequence([1], [])
    if T is None:
        T = enumerate_connected_subsets(G, inst.alpha * m)
    table = compute_coefficient_table(G, m, inst, T, generic=generic)
    p = power_sums(table)
    return CoefficientSequence(newton_coeffs_from_power_sums(p), p)
