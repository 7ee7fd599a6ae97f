"""Finite windows of the spectrum of irreducible cohomological functions.

Points are labels; neighbourhoods are witnessed by probes.  An object probe C
gives the basic open {chi : chi(Sigma^n C) != 0 for some n}; a functor probe
is a triangle copresenting F, giving {chi : chi-hat(F o Sigma^n) != 0 for some n}.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ..coeffalg import DUAL, POLY, CoeffAlgebra
from ..cohfun import (
    IrreducibleLabel,
    ObjectLabel,
    ResidueLabel,
    SimpleLabel,
    extend_chi,
)
from ..exactlin import PolyMatrix, bareiss
from ..exactlin import poly as P
from ..perfcx import (
    ChainMap,
    HomComplex,
    PerfectComplex,
    Triangle,
    ar_triangle,
    cone,
    phi_map,
    shift,
    stalk,
    string_complex,
)
from ..perfcx.amat import ops_for

# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class FunctorProbe:
    """A finitely presented functor, copresented as ker(Hom(-, A) -> Hom(-, B)) by a triangle."""

    name: str
    triangle: Triangle


@dataclass
class SpectrumWindow:
    algebra: CoeffAlgebra
    labels: list[IrreducibleLabel]
    probes: list[tuple[str, PerfectComplex]]
    shifts: range
    table: dict = field(default_factory=dict)  # (label, probe name) -> profile

    def materialize(self) -> "SpectrumWindow":
        for lab in self.labels:
            chi = lab.function(self.algebra)
            for name, C in self.probes:
                self.table[(lab, name)] = chi.profile(C)
        return self

    def profile(self, label: IrreducibleLabel, probe: str) -> dict[int, int]:
        return self.table[(label, probe)]

    def distinguished(self) -> list[tuple[IrreducibleLabel, IrreducibleLabel]]:
        """Pairs of labels whose tables agree on every probe and shift (should be empty)."""
        rows = {lab: tuple(tuple(sorted(self.profile(lab, n).items())) for n, _ in self.probes) for lab in self.labels}
        return [(a, b) for a, b in combinations(self.labels, 2) if rows[a] == rows[b]]

    def rows(self) -> list[tuple[str, str, int, int]]:
        out = []
        for lab in self.labels:
            for name, _ in self.probes:
                for j, v in self.profile(lab, name).items():
                    out.append((str(lab), name, j, v))
        return out


def enumerate_sp_dual_numbers(r_max: int, A: CoeffAlgebra | None = None) -> SpectrumWindow:
    """Labels [chi_{X_{0,r}}] for r <= r_max and [chi_k]; probes Sigma^n X_{0,s}."""
    from ..exactlin import Field

    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    A = A or CoeffAlgebra.dual_numbers(Field.prime(5))
    labels: list[IrreducibleLabel] = [ObjectLabel(0, r) for r in range(r_max + 1)] + [SimpleLabel(0)]
    w = r_max + 2
    probes = [(str(ObjectLabel(n, s)), string_complex(A, n, s)) for s in range(r_max + 2) for n in range(-w, w + 1)]
    return SpectrumWindow(A, labels, probes, range(-w - r_max - 2, w + r_max + 3)).materialize()


def empty_window(A: CoeffAlgebra) -> SpectrumWindow:
    return SpectrumWindow(A, [], [], range(0))


def basic_open_membership(label: IrreducibleLabel, C: PerfectComplex, A: CoeffAlgebra | None = None) -> bool:
    """True iff chi_label is nonzero on some shift of C."""
    A = A or C.algebra
    return any(label.function(A).profile(C).values())


def functor_membership(label: IrreducibleLabel, probe: FunctorProbe, A: CoeffAlgebra, shifts: range) -> bool:
    """True iff chi-hat(F) != 0 for some member chi o Sigma^n of the orbit of the label."""
    return any(functor_value(label.shifted(n), probe, A) for n in shifts)


def functor_value(label: IrreducibleLabel, probe: FunctorProbe, A: CoeffAlgebra, window: int = 16) -> int:
    return extend_chi(label.function(A), probe.triangle, window)


# ---------------------------------------------------------------------------
# isolated points and the closure point


def simple_functor_probe(A: CoeffAlgebra, n: int, r: int) -> FunctorProbe:
    """S_{n,r}, copresented by the AR triangle ending in X_{n-1,r}."""
    return FunctorProbe(f"S({n},{r})", ar_triangle(n - 1, r, A).triangle)


@dataclass(frozen=True)
class Isolation:
    label: IrreducibleLabel
    witness: str


def isolated_points(W: SpectrumWindow) -> list[Isolation]:
    """Labels separated from all others by a simple functor probe S_{0,r}."""
    if not W.labels:
        return []
    A = W.algebra
    rs = sorted({lab.r for lab in W.labels if isinstance(lab, ObjectLabel)})
    out = []
    for lab in W.labels:
        for r in rs:
            probe = simple_functor_probe(A, 0, r)
            hits = [other for other in W.labels if functor_membership(other, probe, A, W.shifts)]
            if hits == [lab]:
                out.append(Isolation(lab, probe.name))
                break
    return out


def image_probe(A: CoeffAlgebra, t: int) -> FunctorProbe:
    """U_t = im Hom(-, phi_{0,t}) for phi_{0,t} : X_{0,t} -> X_{0,0}."""
    T = cone(phi_map(A, 0, t))
    return FunctorProbe(f"U({t})", T.rotated())


@dataclass
class ClosureReport:
    ok: bool
    limit_label: IrreducibleLabel | None
    object_probe_hits: dict = field(default_factory=dict)  # probe -> r values with membership
    functor_probe_hits: dict = field(default_factory=dict)
    counterexample: tuple = ()

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "limit_point": str(self.limit_label) if self.limit_label else None,
            "object_probes": {k: v for k, v in self.object_probe_hits.items()},
            "functor_probes": {k: v for k, v in self.functor_probe_hits.items()},
            "counterexample": list(self.counterexample),
            "note": "finite-window surrogate of the topological closure statement",
        }


def _family_check(hits: dict[str, list[int]]) -> tuple:
    """Empty tuple if every subfamily has a common r, else a minimal failing subfamily."""
    names = sorted(hits)
    common = set.intersection(*(set(hits[n]) for n in names)) if names else {0}
    if common:
        return ()
    for size in range(1, len(names) + 1):
        for group in combinations(names, size):
            if not set.intersection(*(set(hits[n]) for n in group)):
                return group
    return tuple(names)


def closure_extra_point_check(W: SpectrumWindow, R: int) -> ClosureReport:
    """Every neighbourhood of [chi_k] on the window meets {[chi_{X_{0,r}}] : r <= R}."""
    A = W.algebra
    k = next((lab for lab in W.labels if isinstance(lab, SimpleLabel)), None)
    if k is None:
        return ClosureReport(True, None)
    rows = [ObjectLabel(0, r) for r in range(R + 1)]
    obj_hits: dict[str, list[int]] = {}
    for name, C in W.probes:
        if not basic_open_membership(k, C, A):
            continue
        obj_hits[name] = [lab.r for lab in rows if basic_open_membership(lab, C, A)]
    fun_hits: dict[str, list[int]] = {}
    r_max = max((lab.r for lab in W.labels if isinstance(lab, ObjectLabel)), default=0)
    for t in range(r_max + 2):
        probe = image_probe(A, t)
        if not functor_membership(k, probe, A, W.shifts):
            continue
        fun_hits[probe.name] = [lab.r for lab in rows if functor_membership(lab, probe, A, W.shifts)]
    bad = _family_check(obj_hits) or _family_check(fun_hits)
    return ClosureReport(not bad, k, obj_hits, fun_hits, bad)


# ---------------------------------------------------------------------------
# closed length sets


@dataclass(frozen=True)
class ImageNode:
    """im Hom(-, phi) for phi : Y -> X (degree 0 chain map)."""

    name: str
    phi: ChainMap


@dataclass
class LengthSetReport:
    ok: bool
    inside: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)  # label -> chain of node names
    failures: list = field(default_factory=list)


def _image_triangle(phi: ChainMap) -> Triangle:
    return cone(phi).rotated()


def _factors_through(small: ChainMap, big: ChainMap) -> bool:
    """True iff small = big o psi up to homotopy for some psi."""
    Ys, Yb, X = small.source, big.source, big.target
    F = X.algebra.field
    Hsx = HomComplex(Ys, X)
    coh = Hsx.cohomology(0)
    target = Hsx.vector(small)
    Hsb = HomComplex(Ys, Yb)
    cand = Hsb.cohomology(0).reps
    imgs = [Hsx.vector(big.compose(Hsb.chain_map(v))) for v in cand]
    from ..exactlin import in_span
    import numpy as np

    span = np.vstack(imgs + [coh.boundaries]) if (imgs or coh.boundaries.shape[0]) else F.zeros((0, Hsx.dim(0)))
    if span.shape[0] == 0:
        return not F.nonzero_mask(target).any()
    return in_span(F, span, target)


def image_nodes(X: PerfectComplex, sources: Sequence[tuple[str, PerfectComplex]]) -> list[ImageNode]:
    """Image subfunctors of Hom(-, X) from basis maps Y -> X, plus the identity."""
    from ..perfcx import identity_map

    nodes = [ImageNode("id", identity_map(X))]
    for name, Y in sources:
        H = HomComplex(Y, X)
        coh = H.cohomology(0)
        for b in range(coh.dim):
            nodes.append(ImageNode(f"{name}#{b}", H.chain_map(coh.reps[b])))
    return nodes


def closed_length_set_check(X: PerfectComplex, n: int, points: Sequence[IrreducibleLabel],
                            sources: Sequence[tuple[str, PerfectComplex]]) -> LengthSetReport:
    """{chi : chi(X) <= n} is closed on the window.

    Each point with chi(X) > n gets a chain 0 < F_1 < ... < F_{n+1} of image subfunctors of
    Hom(-, X) along which chi-hat strictly increases, while every point inside the set is
    flat on some step.  The open set {chi : every step increases} is then a neighbourhood
    of the outside point missing the whole set.
    """
    A = X.algebra
    values = {lab: lab.function(A)(X) for lab in points}
    inside = [lab for lab in points if values[lab] <= n]
    outside = [lab for lab in points if values[lab] > n]
    if not outside:
        return LengthSetReport(True, inside)
    nodes = image_nodes(X, sources)
    val = {}
    for i, node in enumerate(nodes):
        T = _image_triangle(node.phi)
        for lab in points:
            val[(i, lab)] = extend_chi(lab.function(A), T, 16)
    below = {i: [j for j in range(len(nodes)) if j != i and _factors_through(nodes[j].phi, nodes[i].phi)]
             for i in range(len(nodes))}
    report = LengthSetReport(True, inside)
    for lab in outside:
        chain = _search_chain(nodes, below, val, lab, inside, n + 1)
        if chain is None:
            report.ok = False
            report.failures.append(str(lab))
        else:
            report.witnesses[str(lab)] = [nodes[i].name for i in chain]
    return report


def _search_chain(nodes, below, val, lab, inside, steps):
    """Chain ending at the identity node with ``steps`` strict increases for lab."""
    def rec(top, remaining, flat):
        # top: current largest node; chain is built downwards
        if remaining == 1:
            # last step: 0 < top
            if val[(top, lab)] <= 0:
                return None
            flat2 = flat | {u for u in inside if val[(top, u)] == 0}
            return [top] if len(flat2) == len(inside) else None
        for j in below[top]:
            if val[(j, lab)] >= val[(top, lab)] or val[(j, lab)] <= 0:
                continue
            flat2 = flat | {u for u in inside if val[(j, u)] == val[(top, u)]}
            sub = rec(j, remaining - 1, flat2)
            if sub is not None:
                return sub + [top]
        return None

    return rec(0, steps, frozenset())


# ---------------------------------------------------------------------------
# the Spec A embedding


@dataclass(frozen=True)
class PrimeDatum:
    """A prime of F_p[x] (monic irreducible generator, or () for the zero ideal), or the maximal ideal of k[eps]."""

    algebra: CoeffAlgebra
    generator: tuple = ()

    def __post_init__(self):
        A = self.algebra
        if A.kind == POLY:
            if self.generator:
                g = P.monic(P.normalize(self.generator, A.field.p), A.field.p)
                object.__setattr__(self, "generator", g)
            A.residue_field(self.generator)
        elif A.kind != DUAL:
            raise ValueError("primes are handled for k[x] and k[eps]")

    def __str__(self):
        if self.algebra.kind == DUAL:
            return "(eps)"
        return f"({P.to_str(self.generator)})" if self.generator else "(0)"


def rho(prime: PrimeDatum) -> IrreducibleLabel:
    if prime.algebra.kind == DUAL:
        return SimpleLabel(0)
    return ResidueLabel(prime.generator, 0)


def multiplication_cone(A: CoeffAlgebra, f: tuple) -> PerfectComplex:
    """cone(f : A -> A), concentrated in degrees -1 and 0."""
    ops = ops_for(A)
    m = ops.zeros(1, 1)
    m[0, 0] = P.normalize(f, A.field.p)
    return PerfectComplex(A, {-1: 1, 0: 1}, {-1: m})


def _separating_element(p: PrimeDatum, q: PrimeDatum) -> tuple:
    """An element of one prime lying outside the other."""
    if p.generator and (not q.generator or P.mod(p.generator, q.generator, p.algebra.field.p)):
        return p.generator
    return q.generator


@dataclass
class InjectivityReport:
    ok: bool
    separations: list = field(default_factory=list)  # (p, q, probe, values at shift 0)
    collision: tuple = ()


def rho_injectivity_check(primes: Sequence[PrimeDatum]) -> InjectivityReport:
    report = InjectivityReport(True)
    for p, q in combinations(primes, 2):
        A = p.algebra
        f = _separating_element(p, q)
        C = multiplication_cone(A, f)
        vp, vq = rho(p).function(A).profile(C), rho(q).function(A).profile(C)
        if vp == vq:
            report.ok = False
            report.collision = (str(p), str(q))
            return report
        report.separations.append((str(p), str(q), f"cone({P.to_str(f)})", vp.get(0, 0), vq.get(0, 0)))
    return report


@dataclass
class SupportReport:
    ok: bool
    support: list
    fitting: tuple
    violation: str = ""


def fitting_witness(X: PerfectComplex) -> tuple:
    """Product of nonzero maximal minors, one per differential: off its prime factors ranks do not drop."""
    p = X.algebra.field.p
    out: tuple = (1,)
    for i, m in X.diffs.items():
        pm = PolyMatrix(p, m.shape[0], m.shape[1], tuple(m.reshape(-1)))
        _, piv = bareiss(pm)
        out = P.mul(out, piv, p)
    return out


def supp_dichotomy_check(X: PerfectComplex, primes: Sequence[PrimeDatum]) -> SupportReport:
    """Support over the sample; generic primes behave like (0) and special ones divide the fitting witness."""
    A = X.algebra
    p = A.field.p
    g = fitting_witness(X)
    generic = rho(PrimeDatum(A, ())).function(A).profile(X)
    support = []
    for q in primes:
        prof = rho(q).function(A).profile(X)
        if prof:
            support.append(str(q))
        if not q.generator:
            continue
        divides = not P.mod(g, q.generator, p)
        if not divides and prof != generic:
            return SupportReport(False, support, g, f"{q} does not divide the fitting witness but differs from (0)")
        if not generic and prof and not divides:
            return SupportReport(False, support, g, f"{q} in a torsion support without dividing the fitting witness")
    zero_in = bool(generic)
    if zero_in:
        missing = [str(q) for q in primes if q.generator and not rho(q).function(A).profile(X)
                   and P.mod(g, q.generator, p)]
        if missing:
            return SupportReport(False, support, g, f"generic support misses {missing}")
    return SupportReport(True, support, g)


# ---------------------------------------------------------------------------
# reports


def spectrum_csv(W: SpectrumWindow) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label", "probe", "shift", "value"])
    w.writerows(W.rows())
    return buf.getvalue()


def spectrum_summary(W: SpectrumWindow, isolated: list[Isolation], closure: ClosureReport) -> str:
    doc = {
        "isolated": [str(i.label) for i in isolated],
        "limit_points": [str(closure.limit_label)] if closure.limit_label else [],
        "checks": {
            "distinct_labels": not W.distinguished(),
            "witnesses": {str(i.label): i.witness for i in isolated},
            "closure": closure.to_dict(),
        },
    }
    return json.dumps(doc, indent=2, sort_keys=False)


def default_primes(A: CoeffAlgebra) -> list[PrimeDatum]:
    """(0), (x), (x-1), (x-2), (x^2+2), (x^2+3)."""
    p = A.field.p
    gens = [(), (0, 1), (p - 1, 1), (p - 2, 1), (2, 0, 1), (3, 0, 1)]
    return [PrimeDatum(A, g) for g in gens]


def shifted_stalk(A: CoeffAlgebra, n: int) -> PerfectComplex:
    return shift(stalk(A, 0), n)
