"""Matrices over F_p[x] and their rank over the fraction field."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import poly as P
from .field import Field
from .matrix import Matrix


@dataclass(frozen=True)
class PolyMatrix:
    """rows x cols matrix of polynomials over F_p (coefficient tuples, low degree first)."""

    p: int
    rows: int
    cols: int
    entries: tuple  # row-major tuple of Poly

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[Sequence[int]]], cols: int | None = None) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged polynomial matrix")
        flat = tuple(P.normalize(e, p) for r in rows for e in r)
        return cls(p, len(rows), ncols, flat)

    def entry(self, i: int, j: int) -> tuple:
        return self.entries[i * self.cols + j]

    def grid(self) -> list[list[tuple]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def evaluate(self, field: Field, point) -> Matrix:
        """Substitute x -> point (an element of ``field``, which must have characteristic p)."""
        if field.p != self.p:
            raise ValueError("field characteristic does not match")
        one = field.one
        vals = [[P.eval_at(e, point, one) for e in row] for row in self.grid()]
        if not vals:
            return Matrix.zeros(field, 0, self.cols)
        return Matrix(field, vals, shape=(self.rows, self.cols))

    def reduce_mod(self, f: Sequence[int]) -> Matrix:
        """Image over the residue field F_p[x]/(f) for monic irreducible f."""
        field, point = residue_point(self.p, f)
        return self.evaluate(field, point)


def residue_point(p: int, f: Sequence[int]) -> tuple[Field, object]:
    """The field F_p[x]/(f) together with the class of x in it."""
    f = P.monic(P.normalize(f, p), p)
    if len(f) == 2:
        return Field.prime(p), (-f[0]) % p
    field = Field.extension(p, f)
    return field, field.element((0, 1))


def bareiss(m: PolyMatrix) -> tuple[int, tuple]:
    """Fraction-free elimination: (rank, last pivot).

    The last pivot is a nonzero maximal minor of ``m`` (``(1,)`` for rank 0),
    so at any prime not dividing it the rank is unchanged.
    """
    p = m.p
    a = [list(r) for r in m.grid()]
    rows, cols = m.rows, m.cols
    prev: tuple = (1,)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r][c]
        for i in range(r + 1, rows):
            lead = a[i][c]
            for j in range(c + 1, cols):
                num = P.sub(P.mul(pr, a[i][j], p), P.mul(lead, a[r][j], p), p)
                q, rem = P.divmod_(num, prev, p)
                assert not rem, "Bareiss division must be exact"
                a[i][j] = q
            a[i][c] = ()
        prev = pr
        r += 1
    return r, prev


def poly_matrix_rank(m: PolyMatrix) -> int:
    """Rank over F_p(x), by Bareiss elimination."""
    return bareiss(m)[0]
