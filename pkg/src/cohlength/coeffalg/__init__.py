"""Coefficient algebras, finite-dimensional algebras, radicals and module length."""
from .algebra import DUAL, POLY, QUOT, CoeffAlgebra, FractionFieldMarker
from .findim import (
    AlgebraError,
    AlgebraModule,
    FinDimAlgebra,
    brute_force_radical,
    composition_length_brute,
    end_algebra_as_table,
    module_length,
    primitive_central_idempotents,
    radical,
    semisimple_data,
)


def residue_field(A: CoeffAlgebra, prime):
    return A.residue_field(prime)


__all__ = [
    "DUAL",
    "POLY",
    "QUOT",
    "AlgebraError",
    "AlgebraModule",
    "CoeffAlgebra",
    "FinDimAlgebra",
    "FractionFieldMarker",
    "brute_force_radical",
    "composition_length_brute",
    "end_algebra_as_table",
    "module_length",
    "primitive_central_idempotents",
    "radical",
    "residue_field",
    "semisimple_data",
]
