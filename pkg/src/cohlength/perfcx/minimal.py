r"""Minimal models and barcodes.

Minimal models come from Gaussian elimination.  Suppose d^i has a unit entry
u at (a, b).  Write X^i = A e_b + C and X^{i+1} = A e_a + D, so that
d^i = [[u, delta], [gamma, E]].  Then the pair (e_b, e_a) spans a contractible
summand up to basis change.  Removing it leaves

    d'^i = E - gamma u^{-1} delta,

with row b dropped from d^{i-1} and column a dropped from d^{i+1}.  The
projection X -> X' is [0, id] in degree i, [-gamma u^{-1}, id] in degree i+1,
and the identity elsewhere.

Why barcodes classify over k[eps]
---------------------------------
A minimal complex has d^i = eps M_i with M_i over k.  A map phi = phi_0 +
eps phi_1 between two such complexes is a chain map iff
eps M'_i phi_0 = eps phi_0 M_i, that is iff phi_0 is a morphism of the mod-eps
quiver representations.  phi_1 never enters, because eps^2 = 0.  phi is
invertible iff phi_0 is.  So the minimal complexes are isomorphic iff their
representations (M_i) of the linear quiver are, and those are classified by
interval multiplicities.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from ..coeffalg import DUAL
from ..exactlin import inverse, rank_of, solve
from ..exactlin.matrix import complement_columns
from .amat import ops_for
from .complex import (
    ChainMap,
    ComplexError,
    PerfectComplex,
    direct_sum,
    is_acyclic,
    string_complex,
    zero_complex,
)


class UndecidableError(RuntimeError):
    """Raised when a question cannot be decided for the given coefficient algebra."""


def _find_unit(A, m: np.ndarray) -> tuple[int, int] | None:
    F = A.field
    if A.kind == DUAL:
        nz = np.argwhere(F.nonzero_mask(m[:, :, 0]))
        return (int(nz[0][0]), int(nz[0][1])) if len(nz) else None
    for a, b in np.ndindex(*m.shape[:2]):
        if A.is_unit(m[a, b]):
            return a, b
    return None


def minimal_model_with_map(X: PerfectComplex) -> tuple[PerfectComplex, ChainMap]:
    """Minimal model of X together with a homotopy equivalence X -> model."""
    A = X.algebra
    if not A.is_finite_dim or not A.is_local:
        raise ComplexError(f"minimal models need a local coefficient algebra, got {A}")
    ops = ops_for(A)
    ranks = dict(X.ranks)
    diffs = {i: np.array(m, copy=True) for i, m in X.diffs.items()}
    maps = {i: ops.eye(r) for i, r in ranks.items()}  # current projection X^i -> cur^i
    changed = True
    while changed:
        changed = False
        for i in sorted(diffs):
            m = diffs[i]
            if m.shape[0] == 0 or m.shape[1] == 0:
                continue
            hit = _find_unit(A, m)
            if hit is None:
                continue
            a, b = hit
            u = m[a, b].reshape(1, 1, -1)
            uinv = ops.inv(u)
            rows = [k for k in range(m.shape[0]) if k != a]
            cols = [k for k in range(m.shape[1]) if k != b]
            gamma = m[rows][:, [b]]
            delta = m[[a]][:, cols]
            E = m[rows][:, cols]
            g_uinv = ops.mul(gamma, uinv)
            diffs[i] = ops.sub(E, ops.mul(g_uinv, delta))
            if i - 1 in diffs:
                diffs[i - 1] = diffs[i - 1][cols]
            if i + 1 in diffs:
                diffs[i + 1] = diffs[i + 1][:, rows]
            maps[i] = maps[i][cols]
            upper = maps[i + 1]
            maps[i + 1] = ops.sub(upper[rows], ops.mul(g_uinv, upper[[a]]))
            ranks[i] -= 1
            ranks[i + 1] -= 1
            changed = True
            break
    model = PerfectComplex(A, ranks, {i: m for i, m in diffs.items() if ranks.get(i, 0) and ranks.get(i + 1, 0)})
    return model, ChainMap(X, model, {i: maps[i] for i in model.degrees})


def minimal_model(X: PerfectComplex) -> PerfectComplex:
    return minimal_model_with_map(X)[0]


@dataclass(frozen=True)
class Barcode:
    """Multiset of labels (n, r): one X_{n,r} summand per unit of multiplicity."""

    items: tuple = ()  # sorted ((n, r), multiplicity) pairs

    @staticmethod
    def of(counts: Mapping[tuple[int, int], int] | Iterable[tuple[int, int]]) -> "Barcode":
        if not isinstance(counts, Mapping):
            counts = Counter(counts)
        for (n, r), m in counts.items():
            if r < 0 or m < 0:
                raise ValueError("bar lengths and multiplicities must be nonnegative")
        return Barcode(tuple(sorted(((int(n), int(r)), int(m)) for (n, r), m in counts.items() if m)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.items)

    def __add__(self, other: "Barcode") -> "Barcode":
        return Barcode.of(Counter(self.as_dict()) + Counter(other.as_dict()))

    def labels(self) -> list[tuple[int, int]]:
        """Labels repeated by multiplicity, in sorted order."""
        return [lab for lab, m in self.items for _ in range(m)]

    def k_dim(self, algebra_dim: int = 2) -> int:
        return sum((r + 1) * m for (_, r), m in self.items) * algebra_dim

    def shifted(self, k: int) -> "Barcode":
        return Barcode.of({(n - k, r): m for (n, r), m in self.items})

    def to_json(self) -> list:
        return [[n, r, m] for (n, r), m in self.items]

    def __str__(self):
        if not self.items:
            return "{}"
        return "{" + ", ".join(f"({n},{r}):{m}" for (n, r), m in self.items) + "}"


def eps_matrices(X: PerfectComplex) -> dict[int, np.ndarray]:
    """The eps-coefficients M_i of a minimal complex over k[eps]."""
    return {i: np.array(m[:, :, 1]) for i, m in X.diffs.items()}


def barcode_from_reps(ranks: Mapping[int, int], M: Mapping[int, np.ndarray], F) -> Barcode:
    """Interval multiplicities of a representation of the linear quiver."""
    if not ranks:
        return Barcode()
    lo, hi = min(ranks), max(ranks)

    def r(a: int, b: int) -> int:
        if a < lo or b > hi or a > b:
            return 0
        if ranks.get(a, 0) == 0:
            return 0
        comp = F.eye(ranks[a])
        for j in range(a, b):
            if ranks.get(j + 1, 0) == 0:
                return 0
            comp = F.matmul(M[j], comp)
        return rank_of(F, comp)

    cache: dict[tuple[int, int], int] = {}

    def rc(a, b):
        if (a, b) not in cache:
            cache[(a, b)] = r(a, b)
        return cache[(a, b)]

    counts = {}
    for a in range(lo, hi + 1):
        for b in range(a, hi + 1):
            m = rc(a, b) - rc(a - 1, b) - rc(a, b + 1) + rc(a - 1, b + 1)
            if m < 0:
                raise AssertionError("negative interval multiplicity")
            if m:
                counts[(a, b - a)] = m
    return Barcode.of(counts)


def _require_dual(X: PerfectComplex):
    if X.algebra.kind != DUAL:
        raise ComplexError("barcodes are defined over the dual numbers")


def barcode(X: PerfectComplex) -> Barcode:
    _require_dual(X)
    Mx = minimal_model(X)
    return barcode_from_reps(dict(Mx.ranks), eps_matrices(Mx), X.algebra.field)


def from_barcode(bc: Barcode, A) -> PerfectComplex:
    summands = [string_complex(A, n, r) for n, r in bc.labels()]
    return direct_sum(*summands) if summands else zero_complex(A)


def interval_bases(ranks: Mapping[int, int], M: Mapping[int, np.ndarray], F) -> list[tuple[int, int, dict[int, np.ndarray]]]:
    """Interval decomposition by the elder rule.

    Returns bars (birth, death, {degree: vector}) with M_i v_i = v_{i+1} inside
    the bar and M_death v_death = 0.  Bars are independent of the rank formula.
    """
    if not ranks:
        return []
    lo, hi = min(ranks), max(ranks)
    bars: list[dict] = []
    alive: list[int] = []
    for i in range(lo, hi + 1):
        dim = ranks.get(i, 0)
        # new bars complete the span of incoming vectors
        incoming = np.array([bars[k]["vecs"][i] for k in alive], dtype=F.dtype).reshape(len(alive), dim)
        for c in complement_columns(F, incoming, dim):
            v = F.zeros((dim,))
            v[c] = F.one
            bars.append({"birth": i, "death": None, "vecs": {i: v}})
            alive.append(len(bars) - 1)
        if i == hi or ranks.get(i + 1, 0) == 0:
            for k in alive:
                bars[k]["death"] = i
            alive = []
            continue
        alive.sort(key=lambda k: (bars[k]["birth"], k))
        kept: list[int] = []
        kept_imgs = F.zeros((0, ranks[i + 1]))
        for k in alive:
            w = F.matmul(M[i], bars[k]["vecs"][i].reshape(-1, 1)).reshape(-1)
            c = solve(F, kept_imgs.T, w) if kept else (None if F.nonzero_mask(w).any() else F.zeros((0,)))
            if c is None:
                kept.append(k)
                bars[k]["vecs"][i + 1] = w
                kept_imgs = np.vstack([kept_imgs, w.reshape(1, -1)])
                continue
            # w is a combination of older images: subtract the older chains and die here
            for j in range(bars[k]["birth"], i + 1):
                v = bars[k]["vecs"][j]
                for coef, g in zip(c, kept):
                    v = F.reduce(v - bars[g]["vecs"][j] * coef)
                bars[k]["vecs"][j] = v
            bars[k]["death"] = i
        alive = kept
    return [(b["birth"], b["death"], b["vecs"]) for b in bars]


def barcode_certificate(X: PerfectComplex) -> tuple[Barcode, PerfectComplex, ChainMap]:
    """(barcode, rebuilt direct sum R, explicit chain map X -> R)."""
    _require_dual(X)
    A = X.algebra
    F = A.field
    ops = ops_for(A)
    Mx, pi = minimal_model_with_map(X)
    reps = eps_matrices(Mx)
    bars = interval_bases(dict(Mx.ranks), reps, F)
    bc = Barcode.of(Counter((b, e - b) for b, e, _ in bars))
    R = from_barcode(bc, A)
    labels = bc.labels()
    by_label: dict[tuple[int, int], list] = {}
    for b, e, vecs in bars:
        by_label.setdefault((b, e - b), []).append(vecs)
    used = Counter()
    slot: list[dict] = []
    for lab in labels:
        slot.append(by_label[lab][used[lab]])
        used[lab] += 1
    comps = {}
    for i in Mx.degrees:
        cols = [slot[k][i] for k, (n, r) in enumerate(labels) if n <= i <= n + r]
        B = np.array(cols, dtype=F.dtype).T
        comps[i] = ops.const(inverse(F, B))
    psi = ChainMap(Mx, R, comps)
    return bc, R, psi.compose(pi)


def is_homotopy_equivalence(f: ChainMap) -> bool:
    """A chain map between bounded complexes of free modules with acyclic cone."""
    from .triangles import cone

    return f.is_chain_map() and is_acyclic(cone(f).C)


def homotopy_equivalent(X: PerfectComplex, Y: PerfectComplex) -> bool:
    if X.algebra != Y.algebra:
        raise ComplexError("algebra mismatch")
    if X.algebra.kind != DUAL:
        raise UndecidableError(f"homotopy equivalence is not decided over {X.algebra}")
    return barcode(X) == barcode(Y)
