"""ind(H, G): the number of vertex subsets of G inducing a copy of H."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .graph import Graph, max_degree
from .linear_extractor import enumerate_compositions, extraction_matrix, find_independent_vectors, solve_exact_system
from .pattern_poly import PatternDecomposition, decompose_pattern, z_mu_coefficient
from .subgraph_enum import ConnectedSubsetIndex, count_induced_connected, enumerate_connected_subsets, occurs_connected
from . import kernels


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


@dataclass
class CountResult:
    count: int
    n: int
    m: int
    delta: int
    r: int = 0
    k: int = 0
    method: str = ""
    kernel: str = kernels.IMPLEMENTATION
    timings: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["count"] = str(self.count)  # unbounded integer; keep JSON exact
        return d


def point_weights(nu, h) -> tuple[int, ...]:
    """Substituting x_j = nu_j z puts weight nu_j^h_j on each copy of H_j,
    so the univariate evaluation runs at mu = (nu_j^h_j)_j."""
    return tuple(v ** hj for v, hj in zip(nu, h))


def _evaluate(args):
    G, nu, D, m = args
    return z_mu_coefficient(G, point_weights(nu, D.h), D, m)


def count_induced(H: Graph, G: Graph, workers: int = 1) -> CountResult:
    t0 = time.perf_counter()
    m, n = H.n, G.n
    delta = max_degree(G)
    res = CountResult(count=0, n=n, m=m, delta=delta)

    def done(count: int, method: str) -> CountResult:
        if count < 0:
            raise InvariantError(f"negative count {count}")
        res.count = count
        res.method = method
        res.timings["total"] = time.perf_counter() - t0
        return res

    if m == 0:
        return done(1, "empty-pattern")
    if m == 1:
        return done(n, "single-vertex")
    if m > n or max_degree(H) > delta:
        return done(0, "trivial-zero")

    D = decompose_pattern(H)
    res.r = D.r
    res.timings["decompose"] = time.perf_counter() - t0
    if D.r == 1 and D.rho == (1,):
        res.k = 1
        return done(count_induced_connected(H, G), "connected")
    # any induced copy of H contains an induced copy of each piece
    for Hj in D.components:
        if not occurs_connected(Hj, G):
            return done(0, "absent-component")

    gammas = enumerate_compositions(m, D.h)
    gammas.remove(D.rho)
    gammas.insert(0, D.rho)
    res.k = len(gammas)
    t = time.perf_counter()
    nus = find_independent_vectors(gammas, D.h, m)
    res.timings["vectors"] = time.perf_counter() - t

    t = time.perf_counter()
    rhs = evaluate_points(G, nus, D, m, workers)
    res.timings["evaluate"] = time.perf_counter() - t

    s = solve_exact_system(extraction_matrix(nus, gammas, D.h), rhs)
    for v in s:
        if v.denominator != 1 or v < 0:
            raise InvariantError(f"solution entry {v} is not a nonnegative integer")
    return done(int(s[0]), "polynomial")


def evaluate_points(G: Graph, nus, D: PatternDecomposition, m: int, workers: int = 1,
                    index: Optional[ConnectedSubsetIndex] = None) -> list[int]:
    """Coefficient of z^m in Z_H(G; nu z) for each point nu, sharing one
    connected-subset index."""
    if workers > 1 and len(nus) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_evaluate, [(G, nu, D, m) for nu in nus]))
    if index is None:
        index = enumerate_connected_subsets(G, m)
    return [z_mu_coefficient(G, point_weights(nu, D.h), D, m, index) for nu in nus]
