"""Mapping cones, exact triangles, Auslander-Reiten triangles and Schanuel checks."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..coeffalg import DUAL, CoeffAlgebra
from .amat import ops_for
from .complex import (
    ChainMap,
    ComplexError,
    PerfectComplex,
    direct_sum,
    direct_sum_map,
    identity_map,
    shift,
    string_complex,
    zero_complex,
    zero_map,
)
from .hom import find_null_homotopy
from .minimal import Barcode, barcode, barcode_certificate


@dataclass(frozen=True, eq=False)
class Triangle:
    """A -f-> B -g-> C -h-> Sigma A with C = cone(f)."""

    A: PerfectComplex
    B: PerfectComplex
    C: PerfectComplex
    f: ChainMap
    g: ChainMap
    h: ChainMap

    def shifted(self, n: int) -> "Triangle":
        """The cone triangle of Sigma^n f; its third term is Sigma^n C up to isomorphism."""
        return cone(self.f.shifted(n))

    def rotated(self) -> "Triangle":
        """B -> C -> Sigma A -> Sigma B, realized as the cone triangle of g."""
        return cone(self.g)

    def null_homotopy(self) -> dict[int, np.ndarray] | None:
        return find_null_homotopy(self.g.compose(self.f))

    def __repr__(self):
        return f"Triangle({self.A!r} -> {self.B!r} -> {self.C!r})"


def cone(f: ChainMap) -> Triangle:
    """C^i = B^i + A^{i+1} with d = [[d_B, f^{i+1}], [0, -d_A^{i+1}]]."""
    if not f.is_chain_map():
        raise ComplexError(f"not a chain map (defect in degree {f.commutator_defect()})")
    A, B = f.source, f.target
    alg = A.algebra
    ops = ops_for(alg)
    degs = sorted(set(B.degrees) | {i - 1 for i in A.degrees})
    ranks = {i: B.rank(i) + A.rank(i + 1) for i in degs}
    diffs = {}
    for i in degs:
        rt = ranks.get(i + 1, 0)
        if not rt or not ranks[i]:
            continue
        bi, ai1 = B.rank(i), A.rank(i + 1)
        bi1, ai2 = B.rank(i + 1), A.rank(i + 2)
        out = ops.zeros(rt, ranks[i])
        if bi1 and bi:
            out[:bi1, :bi] = B.d(i)
        if bi1 and ai1:
            out[:bi1, bi:] = f.at(i + 1)
        if ai2 and ai1:
            out[bi1:, bi:] = ops.neg(A.d(i + 1))
        diffs[i] = out
    C = PerfectComplex(alg, ranks, diffs)
    g = {}
    for i in B.degrees:
        m = ops.zeros(C.rank(i), B.rank(i))
        m[:B.rank(i)] = ops.eye(B.rank(i))
        g[i] = m
    SA = shift(A, 1)
    h = {}
    for i in SA.degrees:
        m = ops.zeros(SA.rank(i), C.rank(i))
        m[:, B.rank(i):] = ops.eye(SA.rank(i))
        h[i] = m
    return Triangle(A, B, C, f, ChainMap(B, C, g), ChainMap(C, SA, h))


def canonical_null_homotopy(T: Triangle) -> dict[int, np.ndarray]:
    """s^i : A^i -> C^{i-1} = B^{i-1} + A^i, the inclusion of A^i; g f = d s + s d."""
    ops = ops_for(T.A.algebra)
    out = {}
    for i in T.A.degrees:
        m = ops.zeros(T.C.rank(i - 1), T.A.rank(i))
        m[T.B.rank(i - 1):] = ops.eye(T.A.rank(i))
        out[i] = m
    return out


def check_homotopy(f: ChainMap, s: dict[int, np.ndarray]) -> bool:
    """True iff f^i = d_Y^{i-1} s^i + s^{i+1} d_X^i in every degree."""
    ops = ops_for(f.source.algebra)
    X, Y = f.source, f.target
    for i in sorted(set(X.degrees) | set(Y.degrees)):
        r, c = Y.rank(i), X.rank(i)
        if not r or not c:
            continue
        total = ops.zeros(r, c)
        if i in s and Y.rank(i - 1):
            total = ops.add(total, ops.mul(Y.d(i - 1), s[i]))
        if i + 1 in s and X.rank(i + 1):
            total = ops.add(total, ops.mul(s[i + 1], X.d(i)))
        if not ops.is_zero(ops.sub(total, f.at(i))):
            return False
    return True


# ---------------------------------------------------------------------------
# string-complex maps over the dual numbers


def _id_on_overlap(A: CoeffAlgebra, src: PerfectComplex, tgt: PerfectComplex, degrees) -> ChainMap:
    ops = ops_for(A)
    return ChainMap(src, tgt, {i: ops.eye(1) for i in degrees if src.rank(i) and tgt.rank(i)})


def truncation(A: CoeffAlgebra, n: int, r: int) -> ChainMap:
    """X_{n,r} -> X_{n,r-1}, identity in degrees n..n+r-1."""
    src, tgt = string_complex(A, n, r), string_complex(A, n, r - 1)
    return _id_on_overlap(A, src, tgt, range(n, n + r))


def extension_map(A: CoeffAlgebra, n: int, r: int) -> ChainMap:
    """X_{n+1,r} -> X_{n,r+1}, identity in degrees n+1..n+r+1."""
    src, tgt = string_complex(A, n + 1, r), string_complex(A, n, r + 1)
    return _id_on_overlap(A, src, tgt, range(n + 1, n + r + 2))


def phi_map(A: CoeffAlgebra, n: int, t: int) -> ChainMap:
    """phi_{n,t}: X_{n,t} -> X_{n,0}, the identity in degree n."""
    return _id_on_overlap(A, string_complex(A, n, t), string_complex(A, n, 0), [n])


@dataclass(frozen=True, eq=False)
class ARTriangle:
    triangle: Triangle
    end: PerfectComplex  # X_{n,r}
    equivalence: ChainMap  # cone -> X_{n,r}


@lru_cache(maxsize=512)
def ar_triangle(n: int, r: int, A: CoeffAlgebra) -> ARTriangle:
    """X_{n+1,r} -> X_{n+1,r-1} + X_{n,r+1} -> X_{n,r} ->, as a cone triangle."""
    if A.kind != DUAL:
        raise ComplexError("AR triangles are built over the dual numbers")
    if r < 0:
        raise ValueError("r must be nonnegative")
    start = string_complex(A, n + 1, r)
    ops = ops_for(A)
    legs = [truncation(A, n + 1, r), extension_map(A, n, r)] if r > 0 else [extension_map(A, n, r)]
    mid = direct_sum(*(leg.target for leg in legs))
    comps = {}
    for i in start.degrees:
        blocks = [leg.at(i) if leg.target.rank(i) else ops.zeros(0, 1) for leg in legs]
        comps[i] = np.concatenate(blocks, axis=0) if mid.rank(i) else ops.zeros(0, 1)
    T = cone(ChainMap(start, mid, comps))
    bc, R, psi = barcode_certificate(T.C)
    end = string_complex(A, n, r)
    if bc != Barcode.of({(n, r): 1}) or R != end:
        raise AssertionError(f"third term of the AR triangle ({n},{r}) has barcode {bc}")
    return ARTriangle(T, end, psi)


# ---------------------------------------------------------------------------
# Schanuel


def triangle_sum(T1: Triangle, T2: Triangle) -> Triangle:
    return cone(direct_sum_map(T1.f, T2.f))


def pad_b_and_c(T: Triangle, X: PerfectComplex) -> Triangle:
    """T + (0 -> X -> X): presents the same functor."""
    Z = zero_complex(T.A.algebra)
    return triangle_sum(T, cone(zero_map(Z, X)))


def pad_a_and_b(T: Triangle, X: PerfectComplex) -> Triangle:
    """T + (X -> X -> 0): presents the same functor."""
    return triangle_sum(T, cone(identity_map(X)))


def contractible(X: PerfectComplex) -> PerfectComplex:
    return cone(identity_map(X)).C


def schanuel_triangle_check(T1: Triangle, T2: Triangle) -> bool:
    """barcode(A + B' + C) == barcode(A' + B + C')."""
    left = barcode(direct_sum(T1.A, T2.B, T1.C))
    right = barcode(direct_sum(T2.A, T1.B, T2.C))
    return left == right


def schanuel_free_parity_check(P: Sequence[int], Q: Sequence[int]) -> bool:
    """Parity identity sum P_even + Q_odd == sum P_odd + Q_even for equal-length resolutions."""
    if len(P) != len(Q):
        raise ValueError(f"resolutions of different lengths: {len(P)} vs {len(Q)}")
    even_p = sum(P[0::2])
    odd_p = sum(P[1::2])
    even_q = sum(Q[0::2])
    odd_q = sum(Q[1::2])
    return even_p + odd_q == odd_p + even_q


def free_resolution_of_k(length: int) -> list[int]:
    """Ranks of the minimal free resolution of k over k[eps], truncated: ... -> A -eps-> A -> k."""
    return [1] * length
