"""Exact rational linear algebra: matrices, subspaces and polynomials."""

from .matrix import (
    Matrix,
    block_diag,
    column_echelon,
    det,
    format_rational,
    invert,
    is_invertible,
    kernel_basis,
    left_annihilator,
    rank,
    rref,
    rref_decompose,
    solve,
    to_rational,
)
from .poly import (
    Polynomial,
    charpoly,
    factor_rational_poly,
    multiply_factors,
    poly_gcd,
    root_multiplicity,
)
from . import subspace

__all__ = [
    "Matrix", "Polynomial", "block_diag", "charpoly", "column_echelon", "det",
    "factor_rational_poly", "format_rational", "invert", "is_invertible",
    "kernel_basis", "left_annihilator", "multiply_factors", "poly_gcd", "rank",
    "root_multiplicity", "rref", "rref_decompose", "solve", "subspace", "to_rational",
]
