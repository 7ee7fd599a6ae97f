"""Matrices over a coefficient algebra.

Over a finite-dimensional algebra of dimension d an r x c matrix is an array of
shape (r, c, d) holding the coordinates of each entry.  Over k[x] it is an
(r, c) object array of coefficient tuples.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..coeffalg import POLY, CoeffAlgebra
from ..exactlin import Field, inverse
from ..exactlin import poly as P


class FDOps:
    """Matrix arithmetic over a finite-dimensional commutative algebra."""

    def __init__(self, A: CoeffAlgebra):
        self.A = A
        self.F: Field = A.field
        self.d = A.dim
        self.mult = A.mult

    def zeros(self, r: int, c: int) -> np.ndarray:
        return self.F.zeros((r, c, self.d))

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.A.unit
        return out

    def const(self, k: np.ndarray) -> np.ndarray:
        """Embed a base-field matrix."""
        out = self.zeros(*k.shape)
        out[:, :, 0] = k
        return out

    def scalar(self, n: int, coords) -> np.ndarray:
        out = self.zeros(n, n)
        c = self.F.array(coords)
        for i in range(n):
            out[i, i] = c
        return out

    def mul(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        if X.shape[1] == 0:
            return self.zeros(X.shape[0], Y.shape[1])
        return self.F.reduce(np.einsum("acv,cbu,vut->abt", X, Y, self.mult))

    def add(self, X, Y):
        return self.F.reduce(X + Y)

    def sub(self, X, Y):
        return self.F.reduce(X - Y)

    def neg(self, X):
        return self.F.reduce(-X)

    def scale(self, X, s: int):
        return self.F.reduce(X * s)

    def is_zero(self, X) -> bool:
        return X.size == 0 or not self.F.nonzero_mask(X).any()

    def to_k(self, X: np.ndarray) -> np.ndarray:
        """Base-field matrix of v -> X v on A^c, coordinates (row, basis) flattened."""
        r, c, d = X.shape
        K = np.einsum("ijv,vut->itju", X, self.mult)
        return self.F.reduce(K.reshape(r * d, c * d))

    def inv(self, X: np.ndarray) -> np.ndarray:
        n = X.shape[0]
        Kinv = inverse(self.F, self.to_k(X))
        # column (j, 0) of the k-inverse is the image of the unit vector e_j
        cols = Kinv[:, [j * self.d for j in range(n)]]
        return cols.reshape(n, self.d, n).transpose(0, 2, 1).copy()

    def constant_part(self, X: np.ndarray) -> np.ndarray:
        return X[:, :, 0]


class PolyOps:
    """Matrix arithmetic over F_p[x] with entries as coefficient tuples."""

    def __init__(self, A: CoeffAlgebra):
        self.A = A
        self.F = A.field
        self.p = A.field.p

    def zeros(self, r: int, c: int) -> np.ndarray:
        out = np.empty((r, c), dtype=object)
        out.reshape(-1)[:] = [()] * (r * c)
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = (1,)
        return out

    def const(self, k: np.ndarray) -> np.ndarray:
        out = self.zeros(*k.shape)
        for idx in np.ndindex(*k.shape):
            out[idx] = P.normalize((int(k[idx]),), self.p)
        return out

    def scalar(self, n: int, f) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = P.normalize(f, self.p)
        return out

    def mul(self, X, Y):
        r, m = X.shape
        c = Y.shape[1]
        out = self.zeros(r, c)
        p = self.p
        for i in range(r):
            for j in range(c):
                acc: tuple = ()
                for k in range(m):
                    if X[i, k] and Y[k, j]:
                        acc = P.add(acc, P.mul(X[i, k], Y[k, j], p), p)
                out[i, j] = acc
        return out

    def _map2(self, X, Y, fn):
        out = self.zeros(*X.shape)
        for idx in np.ndindex(*X.shape):
            out[idx] = fn(X[idx], Y[idx], self.p)
        return out

    def add(self, X, Y):
        return self._map2(X, Y, P.add)

    def sub(self, X, Y):
        return self._map2(X, Y, P.sub)

    def neg(self, X):
        out = self.zeros(*X.shape)
        for idx in np.ndindex(*X.shape):
            out[idx] = P.neg(X[idx], self.p)
        return out

    def scale(self, X, s: int):
        out = self.zeros(*X.shape)
        for idx in np.ndindex(*X.shape):
            out[idx] = P.scale(X[idx], s, self.p)
        return out

    def is_zero(self, X) -> bool:
        return all(not e for e in X.reshape(-1))

    def inv(self, X):
        """Inverse of a constant invertible matrix (the only kind used for basis changes)."""
        if any(len(e) > 1 for e in X.reshape(-1)):
            raise ValueError("only constant polynomial matrices are inverted")
        K = np.array([[e[0] if e else 0 for e in row] for row in X], dtype=np.int64).reshape(X.shape)
        return self.const(inverse(Field.prime(self.p), K))


@lru_cache(maxsize=None)
def ops_for(A: CoeffAlgebra):
    return PolyOps(A) if A.kind == POLY else FDOps(A)
