"""Seeded random objects for property tests and acceptance suites."""
from __future__ import annotations

from collections import Counter

import numpy as np

from .coeffalg import CoeffAlgebra
from .exactlin import Field, nullspace, rank_of
from .exactlin import poly as P
from .perfcx import (
    Barcode,
    ChainMap,
    HomComplex,
    PerfectComplex,
    change_basis,
    contractible,
    direct_sum,
    stalk,
    string_complex,
    zero_complex,
)
from .perfcx.amat import ops_for


def random_invertible(F: Field, rng: np.random.Generator, n: int) -> np.ndarray:
    while True:
        m = F.random_array(rng, (n, n), bound=3)
        if rank_of(F, m) == n:
            return m


def random_automorphism(A: CoeffAlgebra, rng: np.random.Generator, n: int) -> np.ndarray:
    """Random invertible A-matrix: invertible constant part plus random higher coordinates."""
    ops = ops_for(A)
    F = A.field
    out = ops.zeros(n, n)
    out[:, :, 0] = random_invertible(F, rng, n)
    for t in range(1, A.dim):
        out[:, :, t] = F.random_array(rng, (n, n), bound=3)
    return out


def random_barcode(rng: np.random.Generator, lo: int, hi: int, budget: dict[int, int], max_bars: int) -> Barcode:
    """Random bars inside [lo, hi] respecting a per-degree rank budget (consumed in place)."""
    bars = Counter()
    for _ in range(max_bars):
        n = int(rng.integers(lo, hi + 1))
        r = int(rng.integers(0, hi - n + 1))
        if all(budget[i] > 0 for i in range(n, n + r + 1)):
            for i in range(n, n + r + 1):
                budget[i] -= 1
            bars[(n, r)] += 1
    return Barcode.of(bars)


def random_dual_complex(A: CoeffAlgebra, rng: np.random.Generator, lo: int = -4, hi: int = 4,
                        max_rank: int = 4, scramble: bool = True) -> tuple[PerfectComplex, Barcode]:
    """A complex with known barcode: strings plus contractible pairs, in a scrambled basis."""
    budget = {i: max_rank for i in range(lo, hi + 1)}
    bc = random_barcode(rng, lo, hi, budget, int(rng.integers(0, 2 * (hi - lo + 1))))
    parts = [string_complex(A, n, r) for n, r in bc.labels()]
    for _ in range(int(rng.integers(0, hi - lo + 1))):
        i = int(rng.integers(lo, hi))
        if budget[i] > 0 and budget[i + 1] > 0:
            budget[i] -= 1
            budget[i + 1] -= 1
            parts.append(contractible(stalk(A, i + 1)))
    order = rng.permutation(len(parts))
    X = direct_sum(*(parts[k] for k in order)) if parts else zero_complex(A)
    if scramble and not X.is_zero:
        X = change_basis(X, {i: random_automorphism(A, rng, r) for i, r in X.ranks.items()})
    return X, bc


def random_chain_map(X: PerfectComplex, Y: PerfectComplex, rng: np.random.Generator) -> ChainMap:
    """A uniformly random degree-0 cocycle of Hom(X, Y)."""
    H = HomComplex(X, Y)
    F = X.algebra.field
    N = H.dim(0)
    if N == 0:
        return ChainMap(X, Y, {})
    Z = nullspace(F, H.matrix(0))
    if Z.shape[0] == 0:
        return ChainMap(X, Y, {})
    c = F.random_array(rng, (1, Z.shape[0]), bound=3)
    v = F.matmul(c, Z).reshape(-1)
    return H.chain_map(v)


def random_poly_complex(A: CoeffAlgebra, rng: np.random.Generator, max_deg: int = 3,
                        pieces: int = 3, lo: int = -1, hi: int = 1) -> PerfectComplex:
    """Sums of two-term complexes A^a -M-> A^b and free stalks, mixed by constant basis changes."""
    p = A.field.p
    ops = ops_for(A)
    parts = []
    for _ in range(int(rng.integers(1, pieces + 1))):
        kind = rng.integers(0, 4)
        deg = int(rng.integers(lo, hi + 1))
        if kind == 0:
            parts.append(stalk(A, deg, int(rng.integers(1, 3))))
            continue
        a, b = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        M = ops.zeros(b, a)
        for idx in np.ndindex(b, a):
            d = int(rng.integers(-1, max_deg + 1))
            M[idx] = P.normalize(rng.integers(0, p, size=d + 1).tolist(), p) if d >= 0 else ()
        parts.append(PerfectComplex(A, {deg: a, deg + 1: b}, {deg: M}))
    X = direct_sum(*parts)
    Fp = Field.prime(p)
    g = {i: ops.const(random_invertible(Fp, rng, r)) for i, r in X.ranks.items()}
    return change_basis(X, g)
