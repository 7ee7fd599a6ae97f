"""Axiom checking, extension to presented functors, simple functors, decomposition."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ..coeffalg import DUAL, CoeffAlgebra
from ..exactlin import rank_of
from ..perfcx import (
    HomComplex,
    PerfectComplex,
    Triangle,
    ar_triangle,
    barcode,
    derived_hom_dim,
    homotopy_equivalent,
    shift,
    string_complex,
)
from .functions import CohFunction, ComboFunction, IrreducibleLabel, ObjectLabel, SimpleLabel


class WindowError(ValueError):
    """The shift window does not contain the support of the function on the triangle."""


class BasisInsufficient(ValueError):
    def __init__(self, residual: dict):
        self.residual = residual
        shown = ", ".join(f"{k}: {v}" for k, v in list(residual.items())[:8])
        super().__init__(f"basis insufficient; residual {{{shown}}}")


@dataclass(frozen=True)
class AxiomViolation:
    anchor: int  # position in the strip of X_0
    n: int  # offset of X_n from the anchor
    value: int

    def __str__(self):
        return f"labelling anchored at {self.anchor}: partial sum at n={self.n} is {self.value}"


def triangle_profiles(chi: CohFunction, T: Triangle) -> tuple[dict, dict, dict]:
    return chi.profile(T.A), chi.profile(T.B), chi.profile(T.C)


def strip_values(chi: CohFunction, T: Triangle, window: int) -> list[int]:
    """chi along Sigma^j A, Sigma^j B, Sigma^j C for j = -window..window (position 3(j+window)+k)."""
    pa, pb, pc = triangle_profiles(chi, T)
    for p in (pa, pb, pc):
        if p and (min(p) <= -window or max(p) >= window):
            raise WindowError(f"support {sorted(p)} is not inside the open window (-{window}, {window})")
    out = []
    for j in range(-window, window + 1):
        out.extend([pa.get(j, 0), pb.get(j, 0), pc.get(j, 0)])
    return out


def check_sequence(values: Sequence[int]) -> AxiomViolation | None:
    """Checks every zero-anchored labelling of a finite strip that vanishes at both ends.

    Forward: S_n = x_n - S_{n-1} with S_0 = x_0 = 0.  Backward: the same recurrence
    run towards negative indices.  S_n >= 0 always, S_n = 0 where x_n = 0.
    """
    if not values or values[0] or values[-1]:
        raise WindowError("the strip must vanish at both ends")
    L = len(values)
    for a in range(L):
        if values[a]:
            continue
        for step in (1, -1):
            s = 0
            n = 0
            i = a + step
            while 0 <= i < L:
                n += step
                s = values[i] - s
                if s < 0 or (values[i] == 0 and s != 0):
                    return AxiomViolation(a, n, s)
                i += step
    return None


def check_cohomological(chi: CohFunction, T: Triangle, window: int = 8) -> AxiomViolation | None:
    """None when chi satisfies the alternating-sum condition on the triangle T."""
    return check_sequence(strip_values(chi, T, window))


def _extend_at(pa: dict, pb: dict, pc: dict, n: int) -> int:
    term = lambda i: pa.get(i, 0) - pb.get(i, 0) + pc.get(i, 0)  # noqa: E731
    if n >= 0:
        return sum((-1) ** i * term(i) for i in range(0, n + 1))
    return sum((-1) ** (i + 1) * term(i) for i in range(-1, n - 1, -1))


def extension_anchors(chi: CohFunction, T: Triangle, window: int = 8) -> list[int]:
    pa, pb, pc = triangle_profiles(chi, T)
    return [n for n in range(-window, window + 1) if not (pa.get(n, 0) or pb.get(n, 0) or pc.get(n, 0))]


def extend_chi_all(chi: CohFunction, T: Triangle, window: int = 8) -> dict[int, int]:
    """chi-hat of the functor copresented by T (kernel of H_A -> H_B), at every valid anchor."""
    pa, pb, pc = triangle_profiles(chi, T)
    anchors = extension_anchors(chi, T, window)
    return {n: _extend_at(pa, pb, pc, n) for n in anchors}


def extend_chi(chi: CohFunction, T: Triangle, window: int = 8, anchor: int | None = None) -> int:
    """chi-hat(F) for F = ker(Hom(-, A) -> Hom(-, B)); two anchors are compared when available."""
    values = extend_chi_all(chi, T, window)
    if not values:
        raise WindowError(f"no shift in [-{window}, {window}] where chi vanishes on A, B and C")
    if anchor is not None:
        if anchor not in values:
            raise WindowError(f"chi does not vanish on Sigma^{anchor}(A + B + C)")
        return values[anchor]
    picks = sorted(values, key=lambda n: (abs(n), n))
    out = values[picks[0]]
    far = values[picks[-1]]
    if far != out:
        raise AssertionError(f"anchor dependence: {picks[0]} -> {out}, {picks[-1]} -> {far}")
    return out


# ---------------------------------------------------------------------------
# simple functors from AR triangles


def simple_functor_eval(n: int, r: int, C: PerfectComplex) -> int:
    """dim S_{n+1,r}(C): kernel of Hom(C, X_{n+1,r}) -> Hom(C, X_{n+1,r-1} + X_{n,r+1}) on H^0."""
    A = C.algebra
    if A.kind != DUAL:
        raise ValueError("simple functors are evaluated over the dual numbers")
    if r < 0:
        return 0
    if C.is_zero:
        return 0
    T = ar_triangle(n, r, A).triangle
    F = A.field
    H1 = HomComplex(C, T.A)
    coh1 = H1.cohomology(0)
    if coh1.dim == 0:
        return 0
    H2 = HomComplex(C, T.B)
    coh2 = H2.cohomology(0)
    L = H1.postcompose_matrix(0, T.f.comps, T.B)
    images = F.matmul(L, coh1.reps.T).T
    B2 = coh2.boundaries
    rk_b = rank_of(F, B2) if B2.shape[0] else 0
    stacked = images if not B2.shape[0] else np.vstack([images, B2])
    rk_f = rank_of(F, stacked) - rk_b
    return coh1.dim - rk_f


def five_term_sum(n: int, r: int, C: PerfectComplex) -> int:
    """S_{n+1,r}(C) - h(C, X_{n+1,r}) + h(C, mid) - h(C, X_{n,r}) + S_{n,r}(C); zero by exactness."""
    A = C.algebra
    T = ar_triangle(n, r, A).triangle
    return (simple_functor_eval(n, r, C) - derived_hom_dim(C, T.A, 0) + derived_hom_dim(C, T.B, 0)
            - derived_hom_dim(C, string_complex(A, n, r), 0) + simple_functor_eval(n - 1, r, C))


# ---------------------------------------------------------------------------
# decomposition


def probe_window(A: CoeffAlgebra, n_range: Iterable[int], r_max: int) -> list[tuple[str, PerfectComplex]]:
    """String complexes X_{n,r} ordered by (r, n)."""
    ns = list(n_range)
    return [(str(ObjectLabel(n, r)), string_complex(A, n, r)) for r in range(r_max + 1) for n in ns]


def object_multiplicity(chi: CohFunction, n: int, r: int, window: int = 12) -> int:
    """Multiplicity of chi_{X_{n,r}} in chi, read off from the simple functor S_{n,r}."""
    T = ar_triangle(n - 1, r, chi.algebra).triangle
    return extend_chi(chi, T, window)


def _residual(chi: CohFunction, mults: dict, probes: list[tuple[str, PerfectComplex]]) -> dict:
    model = ComboFunction(chi.algebra, mults)
    out = {}
    for name, C in probes:
        a, b = chi.profile(C), model.profile(C)
        for j in sorted(set(a) | set(b)):
            if a.get(j, 0) != b.get(j, 0):
                out[(name, j)] = a.get(j, 0) - b.get(j, 0)
    return out


def decompose_chi(chi: CohFunction, basis: Sequence[IrreducibleLabel],
                  probes: list[tuple[str, PerfectComplex]], window: int = 12) -> dict[IrreducibleLabel, int]:
    """Multiplicities of the basis labels in chi, verified on every probe and shift.

    Object labels are read off in (r, n) order from the simple functors; the remaining
    simple-label part is read off at the stalks X_{s,0}.
    """
    A = chi.algebra
    mults: dict[IrreducibleLabel, int] = {}
    objects = sorted((b for b in basis if isinstance(b, ObjectLabel)), key=lambda b: (b.r, b.n))
    for lab in objects:
        m = object_multiplicity(chi, lab.n, lab.r, window)
        if m < 0:
            raise BasisInsufficient({(str(lab), "readout"): m})
        if m:
            mults[lab] = m
    peeled = ComboFunction(A, mults)
    for lab in sorted(b for b in basis if isinstance(b, SimpleLabel)):
        C = string_complex(A, lab.shift, 0)
        m = chi(C) - peeled(C)
        if m < 0:
            raise BasisInsufficient({(str(lab), "readout"): m})
        if m:
            mults[lab] = m
    residual = _residual(chi, mults, probes)
    if residual:
        raise BasisInsufficient(residual)
    return dict(sorted(mults.items()))


# ---------------------------------------------------------------------------
# lengths versus isomorphism


@dataclass(frozen=True)
class IsoVerdict:
    equal_lengths: bool
    homotopy_equivalent: bool
    differences: tuple = field(default=())

    @property
    def conforms(self) -> bool:
        return self.equal_lengths == self.homotopy_equivalent


def length_table(X: PerfectComplex, probes: list[tuple[str, PerfectComplex]]) -> dict:
    """{probe: {j: dim_k Hom(Sigma^j C, X)}}, the k-lengths compared by the isomorphism test."""
    out = {}
    for name, C in probes:
        H = HomComplex(C, X)
        out[name] = {-n: v for n in H.degree_range if (v := H.cohomology_dim(n))}
    return out


def lengths_determine_iso(X: PerfectComplex, Y: PerfectComplex,
                          probes: list[tuple[str, PerfectComplex]]) -> IsoVerdict:
    """Compares the length tables of X and Y and decides homotopy equivalence independently."""
    tx, ty = length_table(X, probes), length_table(Y, probes)
    diffs = tuple(name for name, _ in probes if tx[name] != ty[name])
    return IsoVerdict(not diffs, homotopy_equivalent(X, Y), diffs)


# ---------------------------------------------------------------------------
# tables


def chi_table(chi: CohFunction, probes: list[tuple[str, PerfectComplex]]) -> list[tuple[str, int, int]]:
    """Rows (probe, shift, value) for every nonzero value; a probe with none gets (probe, 0, 0)."""
    rows = []
    for name, C in probes:
        prof = chi.profile(C)
        rows.extend((name, j, v) for j, v in prof.items())
        if not prof:
            rows.append((name, 0, 0))
    return rows


def chi_table_csv(rows: list[tuple[str, int, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["probe", "shift", "value"])
    w.writerows(rows)
    return buf.getvalue()


def shifted_probe(C: PerfectComplex, j: int) -> PerfectComplex:
    return shift(C, j)


def barcode_labels(X: PerfectComplex) -> dict[ObjectLabel, int]:
    return {ObjectLabel(n, r): m for (n, r), m in barcode(X).items}
