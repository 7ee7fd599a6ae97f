"""Bounded complexes of free modules and chain maps between them.

Degrees are cohomological: ``d^i : X^i -> X^{i+1}``.  ``diffs[i]`` has shape
``(rank(i+1), rank(i), ...)`` in the matrix layout of :mod:`.amat`.
"""
from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from ..coeffalg import CoeffAlgebra
from .amat import ops_for


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    degree: int
    row: int
    col: int
    value: object
    reason: str

    def __str__(self):
        return f"{self.reason} at degree {self.degree}, entry ({self.row}, {self.col}): {self.value}"


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.setflags(write=False)
    return arr


class PerfectComplex:
    """A bounded complex of finitely generated free modules over ``algebra``."""

    __slots__ = ("algebra", "ranks", "diffs", "__weakref__", "_cache")

    def __init__(self, algebra: CoeffAlgebra, ranks: Mapping[int, int], diffs: Mapping[int, np.ndarray] | None = None):
        ops = ops_for(algebra)
        rk = {int(i): int(r) for i, r in sorted(ranks.items()) if int(r) > 0}
        if any(r < 0 for r in ranks.values()):
            raise ComplexError("ranks must be nonnegative")
        dd = {}
        diffs = diffs or {}
        for i, m in diffs.items():
            i = int(i)
            rs, rt = rk.get(i, 0), rk.get(i + 1, 0)
            if rs == 0 or rt == 0:
                if np.size(m) and not ops.is_zero(np.asarray(m)):
                    raise ComplexError(f"differential in degree {i} maps between a zero module")
                continue
            m = np.asarray(m)
            if m.shape[:2] != (rt, rs):
                raise ComplexError(f"differential in degree {i} has shape {m.shape[:2]}, expected {(rt, rs)}")
            dd[i] = m
        for i in rk:
            if i + 1 in rk and i not in dd:
                dd[i] = ops.zeros(rk[i + 1], rk[i])
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "ranks", MappingProxyType(rk))
        object.__setattr__(self, "diffs", MappingProxyType({i: _freeze(dd[i]) for i in sorted(dd)}))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("PerfectComplex is immutable")

    # -- basic data ---------------------------------------------------
    def rank(self, i: int) -> int:
        return self.ranks.get(i, 0)

    def d(self, i: int) -> np.ndarray:
        """Differential X^i -> X^{i+1} (zero-size when either side vanishes)."""
        if i in self.diffs:
            return self.diffs[i]
        return ops_for(self.algebra).zeros(self.rank(i + 1), self.rank(i))

    @property
    def degrees(self) -> list[int]:
        return list(self.ranks)

    @property
    def is_zero(self) -> bool:
        return not self.ranks

    @property
    def support(self) -> tuple[int, int] | None:
        if not self.ranks:
            return None
        return min(self.ranks), max(self.ranks)

    def total_rank(self) -> int:
        return sum(self.ranks.values())

    def k_dim(self) -> int:
        return self.total_rank() * self.algebra.dim

    def key(self) -> tuple:
        """Hashable exact description (used for equality and caching)."""
        out = [self.algebra, tuple(self.ranks.items())]
        for i, m in self.diffs.items():
            out.append((i, m.shape, tuple(m.reshape(-1).tolist())))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, PerfectComplex) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        parts = " ".join(f"{i}:{r}" for i, r in self.ranks.items())
        return f"PerfectComplex({self.algebra}, ranks {{{parts}}})"


def validate(X: PerfectComplex) -> Violation | None:
    """None when d^{i+1} d^i = 0 everywhere, else the first offending entry."""
    ops = ops_for(X.algebra)
    for i in X.degrees:
        if X.rank(i + 1) == 0 or X.rank(i + 2) == 0:
            continue
        prod = ops.mul(X.d(i + 1), X.d(i))
        if not ops.is_zero(prod):
            if X.algebra.is_finite_dim:
                nz = np.argwhere(X.algebra.field.nonzero_mask(prod))[0]
                return Violation(i, int(nz[0]), int(nz[1]), prod[nz[0], nz[1]].tolist(), "d^2 != 0")
            for r, c in np.ndindex(*prod.shape):
                if prod[r, c]:
                    return Violation(i, r, c, prod[r, c], "d^2 != 0")
    return None


def zero_complex(A: CoeffAlgebra) -> PerfectComplex:
    return PerfectComplex(A, {})


def stalk(A: CoeffAlgebra, degree: int = 0, rank: int = 1) -> PerfectComplex:
    return PerfectComplex(A, {degree: rank})


def string_complex(A: CoeffAlgebra, n: int, r: int) -> PerfectComplex:
    """X_{n,r}: one copy of A in each degree n..n+r, every differential equal to eps."""
    if r < 0:
        return zero_complex(A)
    ops = ops_for(A)
    eps = ops.zeros(1, 1)
    eps[0, 0, 1] = A.field.one
    return PerfectComplex(A, {i: 1 for i in range(n, n + r + 1)}, {i: eps for i in range(n, n + r)})


def shift(X: PerfectComplex, n: int) -> PerfectComplex:
    """(Sigma^n X)^i = X^{i+n}, differential multiplied by (-1)^n."""
    if n == 0:
        return X
    ops = ops_for(X.algebra)
    sign = -1 if n % 2 else 1
    ranks = {i - n: r for i, r in X.ranks.items()}
    diffs = {i - n: (ops.neg(m) if sign < 0 else m) for i, m in X.diffs.items()}
    return PerfectComplex(X.algebra, ranks, diffs)


def direct_sum(*Xs: PerfectComplex) -> PerfectComplex:
    if not Xs:
        raise ComplexError("direct_sum needs at least one summand")
    A = Xs[0].algebra
    if any(X.algebra != A for X in Xs):
        raise ComplexError("algebra mismatch")
    ops = ops_for(A)
    degs = sorted({i for X in Xs for i in X.degrees})
    ranks = {i: sum(X.rank(i) for X in Xs) for i in degs}
    diffs = {}
    for i in degs:
        if ranks.get(i + 1, 0) == 0:
            continue
        out = ops.zeros(ranks[i + 1], ranks[i])
        ro = co = 0
        for X in Xs:
            a, b = X.rank(i + 1), X.rank(i)
            if a and b:
                out[ro:ro + a, co:co + b] = X.d(i)
            ro += a
            co += b
        diffs[i] = out
    return PerfectComplex(A, ranks, diffs)


def change_basis(X: PerfectComplex, g: Mapping[int, np.ndarray]) -> PerfectComplex:
    """The isomorphic complex with d'^i = g^{i+1} d^i (g^i)^{-1}; missing g^i are identities."""
    ops = ops_for(X.algebra)
    ginv = {i: ops.inv(m) for i, m in g.items()}
    diffs = {}
    for i, m in X.diffs.items():
        out = m
        if i in ginv:
            out = ops.mul(out, ginv[i])
        if i + 1 in g:
            out = ops.mul(g[i + 1], out)
        diffs[i] = out
    return PerfectComplex(X.algebra, dict(X.ranks), diffs)


class ChainMap:
    """Degree-0 map of complexes; ``comps[i]`` is an A-matrix X^i -> Y^i."""

    __slots__ = ("source", "target", "comps")

    def __init__(self, source: PerfectComplex, target: PerfectComplex, comps: Mapping[int, np.ndarray]):
        if source.algebra != target.algebra:
            raise ComplexError("algebra mismatch")
        ops = ops_for(source.algebra)
        cc = {}
        for i in sorted(set(source.degrees) & set(target.degrees)):
            m = comps.get(i)
            if m is None:
                m = ops.zeros(target.rank(i), source.rank(i))
            m = np.asarray(m)
            if m.shape[:2] != (target.rank(i), source.rank(i)):
                raise ComplexError(f"component in degree {i} has shape {m.shape[:2]}")
            cc[i] = _freeze(m)
        self.source = source
        self.target = target
        self.comps = MappingProxyType(cc)

    def at(self, i: int) -> np.ndarray:
        if i in self.comps:
            return self.comps[i]
        return ops_for(self.source.algebra).zeros(self.target.rank(i), self.source.rank(i))

    def commutator_defect(self) -> int | None:
        """First degree i where d_Y f^i != f^{i+1} d_X, or None."""
        ops = ops_for(self.source.algebra)
        X, Y = self.source, self.target
        for i in sorted(set(X.degrees) | set(Y.degrees)):
            if Y.rank(i + 1) == 0 or (X.rank(i) == 0):
                continue
            lhs = ops.mul(Y.d(i), self.at(i)) if Y.rank(i) else ops.zeros(Y.rank(i + 1), X.rank(i))
            rhs = ops.mul(self.at(i + 1), X.d(i)) if X.rank(i + 1) else ops.zeros(Y.rank(i + 1), X.rank(i))
            if not ops.is_zero(ops.sub(lhs, rhs)):
                return i
        return None

    def is_chain_map(self) -> bool:
        return self.commutator_defect() is None

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self o other."""
        if other.target is not self.source and other.target != self.source:
            raise ComplexError("composition of non-composable maps")
        ops = ops_for(self.source.algebra)
        comps = {i: ops.mul(self.at(i), other.at(i)) for i in set(other.source.degrees) & set(self.target.degrees)}
        return ChainMap(other.source, self.target, comps)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        ops = ops_for(self.source.algebra)
        return ChainMap(self.source, self.target, {i: ops.add(self.at(i), other.at(i)) for i in self.comps})

    def scaled(self, s: int) -> "ChainMap":
        ops = ops_for(self.source.algebra)
        return ChainMap(self.source, self.target, {i: ops.scale(m, s) for i, m in self.comps.items()})

    def shifted(self, n: int) -> "ChainMap":
        """Sigma^n f (no sign change on components)."""
        return ChainMap(shift(self.source, n), shift(self.target, n), {i - n: m for i, m in self.comps.items()})

    def __repr__(self):
        return f"ChainMap({self.source!r} -> {self.target!r})"


def identity_map(X: PerfectComplex) -> ChainMap:
    ops = ops_for(X.algebra)
    return ChainMap(X, X, {i: ops.eye(r) for i, r in X.ranks.items()})


def zero_map(X: PerfectComplex, Y: PerfectComplex) -> ChainMap:
    return ChainMap(X, Y, {})


def direct_sum_map(*fs: ChainMap) -> ChainMap:
    src = direct_sum(*(f.source for f in fs))
    tgt = direct_sum(*(f.target for f in fs))
    ops = ops_for(src.algebra)
    comps = {}
    for i in set(src.degrees) & set(tgt.degrees):
        out = ops.zeros(tgt.rank(i), src.rank(i))
        ro = co = 0
        for f in fs:
            a, b = f.target.rank(i), f.source.rank(i)
            if a and b:
                out[ro:ro + a, co:co + b] = f.at(i)
            ro += a
            co += b
        comps[i] = out
    return ChainMap(src, tgt, comps)


def inclusion(Xs: list[PerfectComplex], k: int) -> ChainMap:
    """Inclusion of the k-th summand into direct_sum(*Xs)."""
    tgt = direct_sum(*Xs)
    ops = ops_for(tgt.algebra)
    comps = {}
    for i in Xs[k].degrees:
        out = ops.zeros(tgt.rank(i), Xs[k].rank(i))
        off = sum(X.rank(i) for X in Xs[:k])
        out[off:off + Xs[k].rank(i)] = ops.eye(Xs[k].rank(i))
        comps[i] = out
    return ChainMap(Xs[k], tgt, comps)


def projection(Xs: list[PerfectComplex], k: int) -> ChainMap:
    src = direct_sum(*Xs)
    ops = ops_for(src.algebra)
    comps = {}
    for i in Xs[k].degrees:
        out = ops.zeros(Xs[k].rank(i), src.rank(i))
        off = sum(X.rank(i) for X in Xs[:k])
        out[:, off:off + Xs[k].rank(i)] = ops.eye(Xs[k].rank(i))
        comps[i] = out
    return ChainMap(src, Xs[k], comps)


def k_homology_dims(X: PerfectComplex) -> dict[int, int]:
    """dim_k H^i(X) for a complex over a finite-dimensional algebra."""
    from ..exactlin import rank_of

    ops = ops_for(X.algebra)
    F = X.algebra.field
    d = X.algebra.dim
    rk = {i: rank_of(F, ops.to_k(m)) for i, m in X.diffs.items()}
    return {i: X.rank(i) * d - rk.get(i, 0) - rk.get(i - 1, 0) for i in X.degrees}


def is_acyclic(X: PerfectComplex) -> bool:
    return all(v == 0 for v in k_homology_dims(X).values())
