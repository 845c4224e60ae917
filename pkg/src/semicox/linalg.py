"""Exact elimination over ordered fields (CycReal or Fraction entries)."""
from __future__ import annotations

from fractions import Fraction


def sgn(x) -> int:
    if hasattr(x, "sign"):
        return x.sign()
    return (x > 0) - (x < 0)


def is_zero(x) -> bool:
    return x == 0


def inverse(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(1) / x
    return x.inverse()


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    A = [list(r) for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if not is_zero(A[i][c])), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = inverse(A[r][c])
        A[r] = [v * inv for v in A[r]]
        for i in range(len(A)):
            if i != r and not is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def is_positive_definite(G) -> bool:
    """Symmetric elimination; every pivot must be strictly positive."""
    A = [list(r) for r in G]
    n = len(A)
    for k in range(n):
        piv = A[k][k]
        if sgn(piv) <= 0:
            return False
        inv = inverse(piv)
        for i in range(k + 1, n):
            if is_zero(A[i][k]):
                continue
            f = A[i][k] * inv
            for j in range(k + 1, n):
                A[i][j] = A[i][j] - f * A[k][j]
    return True


def principal(G, keep):
    return [[G[i][j] for j in keep] for i in keep]


def classify_gram(G) -> str:
    """'finite', 'affine' or 'indefinite' for the Gram matrix of an irreducible diagram.

    Affine means positive semidefinite with a one dimensional kernel, which is
    equivalent to rank n - 1 together with some positive definite principal
    submatrix of size n - 1 (eigenvalue interlacing).
    """
    n = len(G)
    if is_positive_definite(G):
        return "finite"
    if rank(G) == n - 1:
        for i in range(n):
            if is_positive_definite(principal(G, [j for j in range(n) if j != i])):
                return "affine"
    return "indefinite"
