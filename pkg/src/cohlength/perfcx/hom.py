"""The Hom complex between two complexes over a finite-dimensional algebra.

Hom^n(X, Y) = prod_i Hom_A(X^i, Y^{i+n}) as a base-field vector space; an
element is stored as a flat vector, block i holding the A-matrix
f^i : X^i -> Y^{i+n} in the (row, col, coord) order.  The differential is
(Df)^i = d_Y f^i - (-1)^n f^{i+1} d_X.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..exactlin import nullspace, rank_of, row_basis, solve
from ..exactlin.matrix import complement_columns
from .amat import ops_for
from .complex import ChainMap, ComplexError, PerfectComplex


def left_comp_matrix(ops, D: np.ndarray, q: int) -> np.ndarray:
    """k-matrix of f -> D f on (p x q) A-matrices, D of shape (s, p, d)."""
    s, p, d = D.shape
    F = ops.F
    if s == 0 or p == 0 or q == 0:
        return F.zeros((s * q * d, p * q * d))
    T = np.einsum("acv,vut->actu", D, ops.mult)
    M = np.einsum("actu,bB->abtcBu", T, F.eye(q))
    return F.reduce(M.reshape(s * q * d, p * q * d))


def right_comp_matrix(ops, E: np.ndarray, p: int) -> np.ndarray:
    """k-matrix of f -> f E on (p x q) A-matrices, E of shape (q, m, d)."""
    q, m, d = E.shape
    F = ops.F
    if p == 0 or q == 0 or m == 0:
        return F.zeros((p * m * d, p * q * d))
    R = np.einsum("cbv,uvt->cbtu", E, ops.mult)
    M = np.einsum("aA,cbtu->abtAcu", F.eye(p), R)
    return F.reduce(M.reshape(p * m * d, p * q * d))


@dataclass
class Cohomology:
    """Data for H^n: cocycles, boundaries, representatives and a coordinate map."""

    cocycles: np.ndarray
    boundaries: np.ndarray
    reps: np.ndarray  # rows: representatives of a basis of H^n
    proj: np.ndarray  # (h, N): coordinates in the reps basis of any cocycle

    @property
    def dim(self) -> int:
        return self.reps.shape[0]


class HomComplex:
    def __init__(self, X: PerfectComplex, Y: PerfectComplex):
        if X.algebra != Y.algebra:
            raise ComplexError("algebra mismatch")
        if not X.algebra.is_finite_dim:
            raise ComplexError("Hom complexes are formed over finite-dimensional algebras only")
        self.X, self.Y = X, Y
        self.ops = ops_for(X.algebra)
        self.F = X.algebra.field
        self.d = X.algebra.dim
        self._mats: dict[int, np.ndarray] = {}
        self._coh: dict[int, Cohomology] = {}
        self._blocks: dict[int, list] = {}

    @cached_property
    def degree_range(self) -> range:
        if self.X.is_zero or self.Y.is_zero:
            return range(0)
        (xl, xh), (yl, yh) = self.X.support, self.Y.support
        return range(yl - xh, yh - xl + 1)

    def blocks(self, n: int) -> list[tuple[int, int, int, int]]:
        """(i, rows, cols, offset) for each nonzero block of Hom^n."""
        if n in self._blocks:
            return self._blocks[n]
        out = []
        off = 0
        for i in self.X.degrees:
            r, c = self.Y.rank(i + n), self.X.rank(i)
            if r and c:
                out.append((i, r, c, off))
                off += r * c * self.d
        self._blocks[n] = out
        return out

    def dim(self, n: int) -> int:
        return sum(r * c for _, r, c, _ in self.blocks(n)) * self.d

    def matrix(self, n: int) -> np.ndarray:
        """k-matrix of D : Hom^n -> Hom^{n+1}."""
        if n in self._mats:
            return self._mats[n]
        src, tgt = self.blocks(n), self.blocks(n + 1)
        M = self.F.zeros((self.dim(n + 1), self.dim(n)))
        tmap = {i: (r, c, off) for i, r, c, off in tgt}
        sign = 1 if n % 2 else -1  # -(-1)^n
        for i, r, c, off in src:
            size = r * c * self.d
            if i in tmap:  # d_Y f^i lands in block i of Hom^{n+1}
                tr, tc, toff = tmap[i]
                L = left_comp_matrix(self.ops, self.Y.d(i + n), c)
                M[toff:toff + tr * tc * self.d, off:off + size] += L
            if i - 1 in tmap:  # f^i d_X^{i-1} lands in block i-1
                tr, tc, toff = tmap[i - 1]
                R = right_comp_matrix(self.ops, self.X.d(i - 1), r)
                M[toff:toff + tr * tc * self.d, off:off + size] += R * sign
        M = self.F.reduce(M)
        self._mats[n] = M
        return M

    def cohomology_dim(self, n: int) -> int:
        if n in self._coh:
            return self._coh[n].dim
        N = self.dim(n)
        if N == 0:
            return 0
        return N - rank_of(self.F, self.matrix(n)) - rank_of(self.F, self.matrix(n - 1))

    def cohomology(self, n: int) -> Cohomology:
        if n in self._coh:
            return self._coh[n]
        F = self.F
        N = self.dim(n)
        Z = nullspace(F, self.matrix(n)) if N else F.zeros((0, 0))
        Dprev = self.matrix(n - 1)
        B = row_basis(F, Dprev.T) if Dprev.size else F.zeros((0, N))
        if B.shape[0]:
            bc = solve(F, Z.T, B.T).T  # boundaries in cocycle coordinates
            keep = complement_columns(F, bc, Z.shape[0])
        else:
            keep = list(range(Z.shape[0]))
        reps = Z[keep] if keep else F.zeros((0, N))
        outside = complement_columns(F, Z, N) if Z.shape[0] else list(range(N))
        W = F.zeros((len(outside), N))
        for k, c in enumerate(outside):
            W[k, c] = F.one
        full = np.vstack([B, reps, W])
        if N:
            coords = solve(F, full.T, F.eye(N))
            proj = coords[B.shape[0]:B.shape[0] + reps.shape[0]]
        else:
            proj = F.zeros((0, 0))
        out = Cohomology(Z, B, reps, proj)
        self._coh[n] = out
        return out

    # -- conversions between flat vectors and A-matrix families --------
    def to_components(self, n: int, v: np.ndarray) -> dict[int, np.ndarray]:
        return {i: v[off:off + r * c * self.d].reshape(r, c, self.d) for i, r, c, off in self.blocks(n)}

    def from_components(self, n: int, comps) -> np.ndarray:
        v = self.F.zeros((self.dim(n),))
        for i, r, c, off in self.blocks(n):
            if i in comps:
                v[off:off + r * c * self.d] = np.asarray(comps[i]).reshape(-1)
        return v

    def chain_map(self, v: np.ndarray) -> ChainMap:
        return ChainMap(self.X, self.Y, self.to_components(0, v))

    def vector(self, f: ChainMap) -> np.ndarray:
        return self.from_components(0, f.comps)

    def postcompose_matrix(self, n: int, g_comps, Z: PerfectComplex) -> np.ndarray:
        """k-matrix of f -> g o f from Hom^n(X, Y) to Hom^n(X, Z) for g : Y -> Z of degree 0."""
        other = self if Z is self.Y else HomComplex(self.X, Z)
        M = self.F.zeros((other.dim(n), self.dim(n)))
        tmap = {i: (r, c, off) for i, r, c, off in other.blocks(n)}
        for i, r, c, off in self.blocks(n):
            if i not in tmap:
                continue
            tr, tc, toff = tmap[i]
            g = g_comps.get(i + n)
            if g is None:
                continue
            M[toff:toff + tr * tc * self.d, off:off + r * c * self.d] = left_comp_matrix(self.ops, g, c)
        return M


def hom_complex(X: PerfectComplex, Y: PerfectComplex) -> HomComplex:
    return HomComplex(X, Y)


def derived_hom_dim(X: PerfectComplex, Y: PerfectComplex, n: int) -> int:
    """dim_k Hom(X, Sigma^n Y) = dim_k H^n(Hom(X, Y))."""
    return HomComplex(X, Y).cohomology_dim(n)


def derived_hom_profile(X: PerfectComplex, Y: PerfectComplex) -> dict[int, int]:
    H = HomComplex(X, Y)
    out = {}
    for n in H.degree_range:
        v = H.cohomology_dim(n)
        if v:
            out[n] = v
    return out


def find_null_homotopy(f: ChainMap) -> dict[int, np.ndarray] | None:
    """Components s^i : X^i -> Y^{i-1} with f = d s + s d, or None if f is not null-homotopic."""
    H = HomComplex(f.source, f.target)
    D = H.matrix(-1)
    v = H.vector(f)
    if D.size == 0:
        return {} if not H.F.nonzero_mask(v).any() else None
    s = solve(H.F, D, v)
    if s is None:
        return None
    return H.to_components(-1, s)
