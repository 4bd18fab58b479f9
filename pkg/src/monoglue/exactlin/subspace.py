"""Subspaces of Q^n, each given by a matrix whose columns span it.

Every function returns the canonical reduced column echelon basis, so two
results describe the same subspace exactly when they are equal matrices.
"""

from __future__ import annotations

from .matrix import Matrix, column_echelon, kernel_basis, rank


def span(A: Matrix) -> Matrix:
    return column_echelon(A)


def zero(n: int) -> Matrix:
    return Matrix.zeros(n, 0)


def full(n: int) -> Matrix:
    return Matrix.identity(n)


def dim(S: Matrix) -> int:
    return rank(S)


def contains(S: Matrix, T: Matrix) -> bool:
    """True iff span(T) is a subspace of span(S)."""
    return rank(S.hstack(T)) == rank(S)


def equal(S: Matrix, T: Matrix) -> bool:
    return span(S) == span(T)


def add(S: Matrix, T: Matrix) -> Matrix:
    return span(S.hstack(T))


def intersect(S: Matrix, T: Matrix) -> Matrix:
    S, T = span(S), span(T)
    K = kernel_basis(S.hstack(-T))
    return span(S @ K.submatrix(range(S.cols), range(K.cols)))


def image(f: Matrix, S: Matrix) -> Matrix:
    return span(f @ S)


def annihilator(S: Matrix) -> Matrix:
    """Subspace of the dual space (dual basis coordinates) vanishing on S."""
    return span(kernel_basis(S.T))


def preimage(f: Matrix, S: Matrix) -> Matrix:
    """Vectors v with f v in span(S)."""
    P = kernel_basis(span(S).T).T
    return span(kernel_basis(P @ f))
