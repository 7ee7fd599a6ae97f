"""Dense exact linear algebra.

Two layers: array functions (``rref``, ``rank_of``, ``nullspace``, ``solve``)
that take a :class:`Field` and a numpy array and are used internally
everywhere, and the immutable :class:`Matrix` value with the public
``rank``/``kernel_basis``/``solve_linear`` operations built on them.
Vectors returned by the array layer are stored as rows.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .. import kernels
from .field import Field


def _generic_rref(field: Field, a: np.ndarray, full: bool = True) -> list[int]:
    rows, cols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if not field.is_zero(a[i, c])), None)
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = field.inv(a[r, c])
        a[r, c:] = a[r, c:] * inv
        for i in range(0 if full else r + 1, rows):
            if i != r and not field.is_zero(a[i, c]):
                a[i, c:] = a[i, c:] - a[i, c] * a[r, c:]
        pivots.append(c)
        r += 1
    return pivots


def rref(field: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a copy of ``a`` and its pivot columns."""
    if field.dtype is np.int64:
        work = np.ascontiguousarray(a, dtype=np.int64) % field.p
        if work.size == 0:
            return work, []
        piv = kernels.rref_inplace(work, field.p)
        return work, list(piv)
    work = np.array(a, dtype=object, copy=True)
    if work.size == 0:
        return work, []
    return work, _generic_rref(field, work)


def rank_of(field: Field, a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if field.dtype is np.int64:
        work = np.ascontiguousarray(a, dtype=np.int64) % field.p
        return int(kernels.rank_inplace(work, field.p))
    work = np.array(a, dtype=object, copy=True)
    return len(_generic_rref(field, work, full=False))


def nullspace(field: Field, a: np.ndarray) -> np.ndarray:
    """Basis of {v : a v = 0} as the rows of the returned array."""
    rows, cols = a.shape
    if rows == 0:
        return field.eye(cols)
    r, piv = rref(field, a)
    free = [c for c in range(cols) if c not in set(piv)]
    out = field.zeros((len(free), cols))
    for k, f in enumerate(free):
        out[k, f] = field.one
        for i, c in enumerate(piv):
            out[k, c] = -r[i, f]
    return field.reduce(out)


def left_nullspace(field: Field, a: np.ndarray) -> np.ndarray:
    return nullspace(field, a.T)


def row_basis(field: Field, a: np.ndarray) -> np.ndarray:
    """Rows spanning the row space of ``a`` (reduced echelon rows)."""
    if a.size == 0:
        return field.zeros((0, a.shape[1]))
    r, piv = rref(field, a)
    return r[: len(piv)]


def solve(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Some x with a x = b (b a vector or a matrix of right-hand sides), or None."""
    vec = b.ndim == 1
    bb = b.reshape(-1, 1) if vec else b
    rows, cols = a.shape
    if bb.shape[0] != rows:
        raise ValueError(f"dimension mismatch: {a.shape} vs rhs {b.shape}")
    aug = np.concatenate([a, bb], axis=1) if rows else field.zeros((0, cols + bb.shape[1]))
    r, piv = rref(field, aug)
    if any(c >= cols for c in piv):
        return None
    x = field.zeros((cols, bb.shape[1]))
    for i, c in enumerate(piv):
        x[c] = r[i, cols:]
    return x[:, 0] if vec else x


def inverse(field: Field, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve(field, a, field.eye(n))
    if x is None or rank_of(field, a) < n:
        raise ValueError("matrix is singular")
    return x


def complement_columns(field: Field, basis_rows: np.ndarray, dim: int) -> list[int]:
    """Coordinates whose unit vectors complete the row span of ``basis_rows`` to the whole space."""
    if basis_rows.shape[0] == 0:
        return list(range(dim))
    _, piv = rref(field, basis_rows)
    used = set(piv)
    return [c for c in range(dim) if c not in used]


def in_span(field: Field, basis_rows: np.ndarray, v: np.ndarray) -> bool:
    if basis_rows.shape[0] == 0:
        return not field.nonzero_mask(v).any()
    return rank_of(field, np.vstack([basis_rows, v.reshape(1, -1)])) == rank_of(field, basis_rows)


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, entries, shape: tuple[int, int] | None = None):
        if isinstance(entries, np.ndarray) and entries.ndim == 2:
            data = field.array(entries) if entries.dtype != field.dtype else field.reduce(entries.copy())
        else:
            rows = [list(r) for r in entries]
            if shape is None:
                shape = (len(rows), len(rows[0]) if rows else 0)
            if any(len(r) != shape[1] for r in rows) or len(rows) != shape[0]:
                raise ValueError("ragged or mis-shaped matrix entries")
            data = field.array(rows) if rows else field.zeros(shape)
            data = data.reshape(shape)
        data.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def entries(self) -> list:
        return list(self.data.reshape(-1))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, field.eye(n))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, field.zeros((rows, cols)))

    @classmethod
    def random(cls, field: Field, rows: int, cols: int, rng: np.random.Generator) -> "Matrix":
        return cls(field, field.random_array(rng, (rows, cols)))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.data.T.copy())

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return Matrix(self.field, self.field.matmul(self.data, other.data))
        v = self.field.array(other)
        return self.field.matmul(self.data, v)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "Matrix":
        return Matrix(self.field, self.data[np.ix_(list(row_perm), list(col_perm))].copy())

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.all(self.data == other.data))
        )

    def __hash__(self):
        return hash((self.field, self.data.shape, tuple(self.data.reshape(-1).tolist())))

    def __repr__(self):
        return f"Matrix({self.field}, {self.data.tolist()})"


def rank(m: Matrix) -> int:
    """Rank of ``m`` over its field; zero-size matrices have rank 0."""
    return rank_of(m.field, m.data)


def kernel_basis(m: Matrix) -> list[np.ndarray]:
    """Basis of the right null space, one column vector per entry."""
    ns = nullspace(m.field, m.data)
    return [ns[i].copy() for i in range(ns.shape[0])]


def solve_linear(m: Matrix, b) -> np.ndarray | None:
    """Some x with m x = b, or None when the system is inconsistent."""
    bv = m.field.array(b)
    if bv.ndim != 1 or bv.shape[0] != m.rows:
        raise ValueError(f"right-hand side of length {bv.shape} does not match {m.rows} rows")
    return solve(m.field, m.data, bv)
