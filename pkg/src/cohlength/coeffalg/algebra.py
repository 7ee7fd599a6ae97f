"""Coefficient algebras: k[eps], k[x] and k[x]/(f).

Finite-dimensional coefficient algebras (dual numbers, quotients) store
elements as coordinate vectors in the monomial basis 1, x, ..., x^(d-1)
(for dual numbers 1, eps).  Elements of k[x] are coefficient tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from ..exactlin import Field, residue_point, solve
from ..exactlin import poly as P

DUAL = "dual_numbers"
POLY = "poly_ring"
QUOT = "poly_quotient"


@dataclass(frozen=True)
class FractionFieldMarker:
    """Stands for Frac(k[x]); ranks there are computed by fraction-free elimination."""

    p: int

    def __repr__(self):
        return f"F_{self.p}(x)"


@dataclass(frozen=True)
class CoeffAlgebra:
    kind: str
    field: Field
    modulus: tuple = ()  # monic, low degree first; only for poly_quotient

    def __post_init__(self):
        if self.kind not in (DUAL, POLY, QUOT):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if self.kind in (POLY, QUOT) and self.field.kind != "prime":
            raise ValueError("polynomial coefficient algebras are supported over prime fields only")
        if self.kind == QUOT and (len(self.modulus) < 2 or self.modulus[-1] != 1):
            raise ValueError("poly_quotient modulus must be monic of degree >= 1")

    @staticmethod
    def dual_numbers(field: Field) -> "CoeffAlgebra":
        return CoeffAlgebra(DUAL, field)

    @staticmethod
    def poly_ring(field: Field) -> "CoeffAlgebra":
        return CoeffAlgebra(POLY, field)

    @staticmethod
    def poly_quotient(field: Field, f: Sequence[int]) -> "CoeffAlgebra":
        return CoeffAlgebra(QUOT, field, P.normalize(f, field.p))

    # -- description --------------------------------------------------
    def describe(self) -> str:
        if self.kind == QUOT:
            return QUOT + ":" + ",".join(map(str, self.modulus))
        return self.kind

    @staticmethod
    def parse(name: str, field: Field) -> "CoeffAlgebra":
        if name.startswith(QUOT + ":"):
            return CoeffAlgebra.poly_quotient(field, [int(c) for c in name.split(":", 1)[1].split(",")])
        return CoeffAlgebra(name, field)

    def __repr__(self):
        if self.kind == DUAL:
            return f"{self.field}[eps]"
        if self.kind == POLY:
            return f"{self.field}[x]"
        return f"{self.field}[x]/({P.to_str(self.modulus)})"

    # -- finite-dimensional structure ---------------------------------
    @property
    def is_finite_dim(self) -> bool:
        return self.kind != POLY

    @property
    def dim(self) -> int:
        if self.kind == DUAL:
            return 2
        if self.kind == QUOT:
            return len(self.modulus) - 1
        raise ValueError("k[x] is infinite dimensional")

    @cached_property
    def mult(self) -> np.ndarray:
        """Structure constants: mult[u, v, t] = coefficient of basis t in e_u e_v."""
        d = self.dim
        F = self.field
        table = F.zeros((d, d, d))
        p = F.p
        for u in range(d):
            for v in range(d):
                if self.kind == DUAL:
                    if u + v < 2:
                        table[u, v, u + v] = F.one
                    continue
                prod = P.mod(tuple([0] * (u + v)) + (1,), self.modulus, p)
                for t, c in enumerate(prod):
                    table[u, v, t] = F.element(c)
        return table

    @cached_property
    def unit(self) -> np.ndarray:
        e = self.field.zeros((self.dim,))
        e[0] = self.field.one
        return e

    @cached_property
    def maximal_generator(self) -> tuple | None:
        """For a local algebra, the irreducible g with maximal ideal (g); None if not local."""
        if self.kind == DUAL:
            return (0, 1)
        if self.kind == QUOT:
            p = self.field.p
            g = P.smallest_factor(self.modulus, p)
            f = self.modulus
            while len(f) > 1:
                q, r = P.divmod_(f, g, p)
                if r:
                    return None
                f = q
            return g
        return None

    @property
    def is_local(self) -> bool:
        return self.maximal_generator is not None

    def is_unit(self, coords: np.ndarray) -> bool:
        F = self.field
        if self.kind == DUAL:
            return not F.is_zero(coords[0])
        g = self.maximal_generator
        if g is None:
            raise ValueError(f"{self} is not local")
        return bool(P.mod(P.normalize([int(c) for c in coords], F.p), g, F.p))

    def left_matrix(self, coords: np.ndarray) -> np.ndarray:
        """Matrix of y -> coords * y in the monomial basis."""
        F = self.field
        return F.reduce(np.einsum("v,vut->tu", coords, self.mult))

    def inverse(self, coords: np.ndarray) -> np.ndarray:
        x = solve(self.field, self.left_matrix(coords), self.unit)
        if x is None:
            raise ZeroDivisionError("element is not a unit")
        return x

    # -- residue fields -----------------------------------------------
    def residue_field(self, prime) -> Field | FractionFieldMarker:
        """Residue field at a prime: ``"eps"`` for k[eps]; () or a monic irreducible for k[x]."""
        if self.kind == DUAL:
            if prime not in ("eps", (0, 1), None):
                raise ValueError("k[eps] has the single prime (eps)")
            return self.field
        if self.kind == POLY:
            p = self.field.p
            f = P.normalize(prime or (), p)
            if not f:
                return FractionFieldMarker(p)
            if len(f) < 2:
                raise ValueError("a unit does not generate a prime ideal")
            w = P.factor_witness(f, p)
            if w is not None:
                raise ValueError(f"{P.to_str(f)} is reducible; factor {P.to_str(w)}")
            return residue_point(p, f)[0]
        g = self.maximal_generator
        if g is None:
            raise ValueError("residue fields of non-local quotients are not supported")
        return residue_point(self.field.p, g)[0]
