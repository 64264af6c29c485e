"""Exponent compositions, independent evaluation points, and exact solving.

Unknowns are ind(gamma H, G) for every composition gamma with gamma.h = m.
Evaluating the pattern polynomial at a point nu gives one equation whose
coefficient row is nu* = (nu^(gamma_i o h))_i. Points are chosen one at a
time so that the growing square matrix stays nonsingular: the determinant
with a symbolic last point is a homogeneous polynomial whose coefficient on
x^(gamma_l o h) is the previous determinant, so it cannot vanish on the grid
prod_i {1..a_i h_i + 1} (Alon's Combinatorial Nullstellensatz), and a
lexicographic scan of that grid finds a good point.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from .pattern_poly import ExponentVector, dot, hadamard, monomial


class SingularMatrixError(ArithmeticError):
    pass


def enumerate_compositions(m: int, h: Sequence[int]) -> list[ExponentVector]:
    """All gamma >= 0 with gamma.h = m, in decreasing lexicographic order."""
    if any(x < 1 for x in h):
        raise ValueError("sizes must be positive")
    r = len(h)
    out: list[ExponentVector] = []

    def rec(j: int, left: int, prefix: list[int]) -> None:
        if j == r:
            if left == 0:
                out.append(tuple(prefix))
            return
        for g in range(left // h[j], -1, -1):
            prefix.append(g)
            rec(j + 1, left - g * h[j], prefix)
            prefix.pop()

    if r:
        rec(0, m, [])
    return out


def monomial_vector(nu: Sequence[int], gammas: Sequence[ExponentVector], h: Sequence[int]) -> list[int]:
    """nu* = (nu^(gamma_i o h))_i."""
    return [monomial(nu, hadamard(g, h)) for g in gammas]


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(row) for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
        prev = pivot
    return sign * A[n - 1][n - 1] if n else 1


def solve_exact_system(M: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Unique s with M s = b. Forward elimination is fraction-free on the
    augmented matrix; back substitution runs over rationals."""
    n = len(M)
    if any(len(row) != n for row in M) or len(b) != n:
        raise ValueError("matrix must be square and match the right-hand side")
    A = [list(row) + [b[i]] for i, row in enumerate(M)]
    prev = 1
    for k in range(n):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = pivot
    s = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(A[i][n]) - sum(A[i][j] * s[j] for j in range(i + 1, n))
        s[i] = acc / A[i][i]
    for i in range(n):
        if sum(M[i][j] * s[j] for j in range(n)) != b[i]:
            raise ArithmeticError("nonzero residual in exact solve")
    return s


def last_column_cofactors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Cofactors along the last column of the l x l matrix whose first l-1
    columns are ``rows`` (an l x (l-1) array) and whose last column is free.

    With B the top (l-1) x (l-1) block and a the last row, the vector is
    (-det(B) * a B^-1, det(B)); it is integral since each entry is a minor.
    """
    l = len(rows)
    B = [list(r) for r in rows[:-1]]
    det_b = determinant(B)
    if det_b == 0:
        raise SingularMatrixError("previous matrix is singular")
    if l == 1:
        return [1]
    # solve y B = a  <=>  B^T y = a
    Bt = [[B[i][j] for i in range(l - 1)] for j in range(l - 1)]
    y = solve_exact_system(Bt, rows[-1])
    cof = []
    for v in y:
        c = -det_b * v
        if c.denominator != 1:
            raise ArithmeticError("non-integral cofactor")
        cof.append(int(c))
    cof.append(det_b)
    return cof


def grid_box(gamma: Sequence[int], h: Sequence[int]) -> list[range]:
    return [range(1, a * hh + 2) for a, hh in zip(gamma, h)]


def find_independent_vectors(gammas: Sequence[ExponentVector], h: Sequence[int],
                             m: int) -> list[ExponentVector]:
    """Points nu_1..nu_k with nu_l inside the grid box of gamma_l and the
    matrix (nu_j^(gamma_i o h)) nonsingular."""
    if not gammas:
        raise ValueError("composition set is empty")
    exps = [hadamard(g, h) for g in gammas]
    nus: list[ExponentVector] = []
    for l, gamma in enumerate(gammas):
        if dot(gamma, h) != m:
            raise ValueError(f"composition {gamma} does not sum to {m}")
        known = [[monomial(nu, exps[i]) for nu in nus] for i in range(l + 1)]
        cof = last_column_cofactors(known)
        box = grid_box(gamma, h)
        size = math.prod(len(b) for b in box)
        if size > math.exp(m):
            raise AssertionError(f"grid of size {size} exceeds e^{m}")
        for x in itertools.product(*box):
            if sum(c * monomial(x, e) for c, e in zip(cof, exps)):
                nus.append(tuple(x))
                break
        else:
            raise AssertionError(f"no nonvanishing grid point for composition {gamma}")
    return nus


def extraction_matrix(nus: Sequence[ExponentVector], gammas: Sequence[ExponentVector],
                      h: Sequence[int]) -> list[list[int]]:
    """Row i is nu_i*: the equation nu_i* . s = s_m(nu_i)."""
    return [monomial_vector(nu, gammas, h) for nu in nus]
