"""Matrix builders and exact integer kernels.

Integer matrices are plain ``numpy`` arrays of ``int64``; every exact routine
converts to Python ints before doing arithmetic, so coefficient growth never
overflows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence, TypeVar

import numpy as np

from .hypergraph import Hypergraph
from .poly import IntPolynomial, RationalFunction

T = TypeVar("T")


def adjacency_matrix(H: Hypergraph) -> np.ndarray:
    """``A[i, j]`` = number of edges containing both i and j; zero diagonal."""
    A = np.zeros((H.n, H.n), dtype=np.int64)
    for e in H.edges:
        for a in range(len(e)):
            for b in range(a + 1, len(e)):
                A[e[a], e[b]] += 1
                A[e[b], e[a]] += 1
    return A


def seidel_from_adjacency(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    return np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - 2 * A


def seidel_matrix(H: Hypergraph) -> np.ndarray:
    """``S = J - I - 2A``."""
    return seidel_from_adjacency(adjacency_matrix(H))


def _as_int_rows(M) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in np.asarray(M, dtype=object).tolist()] if len(M) else []
    for row in rows:
        if len(row) != len(rows):
            raise ValueError("matrix is not square")
    return rows


def char_poly(M) -> IntPolynomial:
    """``det(M - x I)`` exactly, by Berkowitz's division-free algorithm.

    The leading coefficient is ``(-1)^n``.
    """
    A = _as_int_rows(M)
    n = len(A)
    if n == 0:
        return IntPolynomial([1])
    # coefficients of det(xI - A_r), highest degree first
    C = [1, -A[0][0]]
    for r in range(1, n):
        R = A[r][:r]
        S = [A[i][r] for i in range(r)]
        T = [1, -A[r][r]]
        v = S
        for j in range(r):
            T.append(-sum(a * b for a, b in zip(R, v)))
            if j + 1 < r:
                v = [sum(a * b for a, b in zip(A[i][:r], v)) for i in range(r)]
        newC = []
        for i in range(r + 2):
            acc = 0
            for j in range(max(0, i - len(T) + 1), min(i, len(C) - 1) + 1):
                acc += T[i - j] * C[j]
            newC.append(acc)
        C = newC
    p = IntPolynomial(reversed(C))
    return -p if n % 2 else p


def bareiss_det(rows: Sequence[Sequence[T]], exquo: Callable[[T, T], T], zero: T, one: T) -> T:
    """Fraction-free determinant over an integral domain.

    ``exquo(a, b)`` must return the exact quotient a/b; Bareiss guarantees
    every division performed here is exact.
    """
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if M[k][k] == zero:
            for i in range(k + 1, n):
                if M[i][k] != zero:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exquo(M[i][j] * pivot - M[i][k] * M[k][j], prev)
            M[i][k] = zero
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign == 1 else zero - det


def int_det(M) -> int:
    """Exact determinant of an integer matrix (Bareiss)."""
    return bareiss_det(_as_int_rows(M), lambda a, b: a // b, 0, 1)


def poly_det(rows: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Exact determinant of a matrix with integer-polynomial entries."""
    zero, one = IntPolynomial(), IntPolynomial([1])
    return bareiss_det(rows, lambda a, b: a.exquo(b), zero, one)


def ji_inverse(r: Fraction | int, s: Fraction | int, n: int) -> tuple[Fraction, Fraction]:
    """Scalars ``(alpha, beta)`` with ``(rI_n - sJ_n)^{-1} = alpha I + beta J``."""
    r, s = Fraction(r), Fraction(s)
    if r == 0 or r == n * s:
        raise ZeroDivisionError(f"rI - sJ is singular for r={r}, s={s}, n={n}")
    return 1 / r, s / (r * (r - n * s))


def rank_one_det(M, u: Sequence[int], w: Sequence[int]) -> Fraction:
    """``det(u w^T + M)`` via ``(1 + w^T M^{-1} u) det M``."""
    A = _as_int_rows(M)
    d = int_det(A)
    if d == 0:
        raise ZeroDivisionError("M is singular")
    y = solve_fraction(A, [Fraction(x) for x in u])
    return (1 + sum(Fraction(wi) * yi for wi, yi in zip(w, y))) * d


def solve_fraction(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve ``A y = b`` exactly by Gaussian elimination over Q."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def counting_identity_check(n: int, m: int) -> bool:
    """Exact check of the eigenvalue-counting identity for iterated coronas."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    lhs = sum(2**j * n * (n - 1) * (n + 1) ** (m - j - 1) for j in range(m)) + 2**m * n
    return lhs == n * (n + 1) ** m


def coronal(M) -> RationalFunction:
    """Sum of all entries of ``(M - xI)^{-1}`` as an exact rational function.

    Uses ``det(M + J - xI) / det(M - xI) - 1``.
    """
    A = np.asarray(M, dtype=np.int64)
    n = A.shape[0]
    if n == 0:
        return RationalFunction(0)
    base = char_poly(A)
    shifted = char_poly(A + np.ones((n, n), dtype=np.int64))
    return RationalFunction(shifted - base, base)


def is_symmetric(M) -> bool:
    M = np.asarray(M)
    return M.ndim == 2 and M.shape[0] == M.shape[1] and bool(np.array_equal(M, M.T))
