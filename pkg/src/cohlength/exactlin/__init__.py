"""Exact dense linear algebra over F_p, F_p[t]/(f) and Q, plus F_p[x] matrices."""
from .field import ExtElem, Field, is_prime
from .matrix import (
    Matrix,
    in_span,
    inverse,
    kernel_basis,
    nullspace,
    rank,
    rank_of,
    row_basis,
    rref,
    solve,
    solve_linear,
)
from .polymatrix import PolyMatrix, bareiss, poly_matrix_rank, residue_point
from . import poly

__all__ = [
    "ExtElem",
    "Field",
    "Matrix",
    "PolyMatrix",
    "bareiss",
    "in_span",
    "inverse",
    "is_prime",
    "kernel_basis",
    "nullspace",
    "poly",
    "poly_matrix_rank",
    "rank",
    "rank_of",
    "residue_point",
    "row_basis",
    "rref",
    "solve",
    "solve_linear",
]
