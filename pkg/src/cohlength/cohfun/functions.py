"""Cohomological functions as values.

Every function is evaluated through its *profile* at a complex C: the map
j -> chi(Sigma^j C), restricted to nonzero values.  One Hom complex yields the
whole profile, because Hom(Sigma^j C, X) = H^{-j} Hom(C, X).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Mapping

import numpy as np

from ..coeffalg import DUAL, POLY, AlgebraModule, CoeffAlgebra, FinDimAlgebra, module_length, radical, semisimple_data
from ..coeffalg.findim import SemisimpleData
from ..exactlin import Field, PolyMatrix, nullspace, poly_matrix_rank, rank, rank_of, row_basis, solve
from ..exactlin.matrix import complement_columns
from ..exactlin import poly as P
from ..perfcx import HomComplex, PerfectComplex, identity_map, minimal_model, string_complex
from ..perfcx.amat import ops_for


class IncompatibleAlgebra(ValueError):
    pass


# ---------------------------------------------------------------------------
# labels of irreducible functions


@total_ordering
class IrreducibleLabel:
    kind_rank = 0

    def sort_key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other):
        return (self.kind_rank, self.sort_key()) < (other.kind_rank, other.sort_key())

    def function(self, A: CoeffAlgebra) -> "CohFunction":
        return _label_function(self, A)


@dataclass(frozen=True, eq=True)
class ObjectLabel(IrreducibleLabel):
    """chi of X_{n,r}; equals chi_{X_{0,r}} o Sigma^n."""

    n: int
    r: int
    kind_rank = 0

    def sort_key(self):
        return (self.r, self.n)

    def orbit(self) -> "ObjectLabel":
        return ObjectLabel(0, self.r)

    def shifted(self, k: int) -> "ObjectLabel":
        """The label of chi o Sigma^k."""
        return ObjectLabel(self.n + k, self.r)

    def __str__(self):
        return f"X({self.n},{self.r})"

    __hash__ = lambda self: hash(("obj", self.n, self.r))  # noqa: E731


@dataclass(frozen=True, eq=True)
class SimpleLabel(IrreducibleLabel):
    """chi_k o Sigma^shift: the simple module k as a stalk in degree ``shift``."""

    shift: int
    kind_rank = 1

    def sort_key(self):
        return (self.shift,)

    def orbit(self) -> "SimpleLabel":
        return SimpleLabel(0)

    def shifted(self, k: int) -> "SimpleLabel":
        return SimpleLabel(self.shift + k)

    def __str__(self):
        return f"k[{self.shift}]"

    __hash__ = lambda self: hash(("simple", self.shift))  # noqa: E731


@dataclass(frozen=True, eq=True)
class ResidueLabel(IrreducibleLabel):
    """chi_{k(p)} o Sigma^shift over k[x]; prime () is the zero ideal."""

    prime: tuple
    shift: int = 0
    kind_rank = 2

    def sort_key(self):
        return (len(self.prime), self.prime, self.shift)

    def orbit(self) -> "ResidueLabel":
        return ResidueLabel(self.prime, 0)

    def shifted(self, k: int) -> "ResidueLabel":
        return ResidueLabel(self.prime, self.shift + k)

    def __str__(self):
        name = P.to_str(self.prime) if self.prime else "0"
        return f"k({name})[{self.shift}]"

    __hash__ = lambda self: hash(("res", self.prime, self.shift))  # noqa: E731


# ---------------------------------------------------------------------------
# functions


class CohFunction:
    """Base class; subclasses implement ``_profile``."""

    def __init__(self, algebra: CoeffAlgebra):
        self.algebra = algebra
        self._cache: dict = {}
        self._lock = threading.Lock()

    def _profile(self, C: PerfectComplex) -> dict[int, int]:
        raise NotImplementedError

    def profile(self, C: PerfectComplex) -> dict[int, int]:
        """{j: chi(Sigma^j C)} over the shifts where the value is nonzero."""
        if C.algebra != self.algebra:
            raise IncompatibleAlgebra(f"function over {self.algebra} evaluated on a complex over {C.algebra}")
        key = C.key()
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return dict(hit)
        val = {j: v for j, v in sorted(self._profile(C).items()) if v}
        if any(v < 0 for v in val.values()):
            raise AssertionError("cohomological functions take nonnegative values")
        with self._lock:
            self._cache.setdefault(key, val)
        return dict(val)

    def __call__(self, C: PerfectComplex, shift: int = 0) -> int:
        return self.profile(C).get(shift, 0)

    def terms(self) -> dict | None:
        """Label multiplicities for combinations, None for oracle-backed functions."""
        return None

    def __add__(self, other: "CohFunction") -> "CohFunction":
        return SumFunction(self, other)

    def __rmul__(self, k: int) -> "CohFunction":
        return ScaledFunction(self, int(k))

    def shifted(self, k: int) -> "CohFunction":
        return ShiftedFunction(self, k)


def eval_chi(chi: CohFunction, C: PerfectComplex) -> int:
    return chi(C)


class SumFunction(CohFunction):
    def __init__(self, *parts: CohFunction):
        super().__init__(parts[0].algebra)
        self.parts = parts

    def _profile(self, C):
        out: dict[int, int] = {}
        for f in self.parts:
            for j, v in f.profile(C).items():
                out[j] = out.get(j, 0) + v
        return out


class ScaledFunction(CohFunction):
    def __init__(self, base: CohFunction, k: int):
        if k < 0:
            raise ValueError("multiplicities are nonnegative")
        super().__init__(base.algebra)
        self.base, self.k = base, k

    def _profile(self, C):
        return {j: self.k * v for j, v in self.base.profile(C).items()}


class ShiftedFunction(CohFunction):
    """chi o Sigma^k."""

    def __init__(self, base: CohFunction, k: int):
        super().__init__(base.algebra)
        self.base, self.k = base, k

    def _profile(self, C):
        return {j - self.k: v for j, v in self.base.profile(C).items()}


class ComboFunction(CohFunction):
    """Finite nonnegative combination of irreducible labels."""

    def __init__(self, algebra: CoeffAlgebra, terms: Mapping[IrreducibleLabel, int]):
        super().__init__(algebra)
        if any(m < 0 for m in terms.values()):
            raise ValueError("multiplicities are nonnegative")
        self._terms = {lab: int(m) for lab, m in sorted(terms.items()) if m}

    def terms(self):
        return dict(self._terms)

    def _profile(self, C):
        out: dict[int, int] = {}
        for lab, m in self._terms.items():
            for j, v in lab.function(self.algebra).profile(C).items():
                out[j] = out.get(j, 0) + m * v
        return out


def combo(algebra: CoeffAlgebra, terms: Mapping[IrreducibleLabel, int]) -> ComboFunction:
    return ComboFunction(algebra, terms)


@dataclass
class EndData:
    algebra: FinDimAlgebra
    rad: np.ndarray
    local_residue_k: bool  # End/rad has dimension 1
    semisimple: SemisimpleData | None
    reps: list  # component dicts of basis endomorphisms

    @property
    def quotient_dim(self) -> int:
        return self.algebra.dim - self.rad.shape[0]


def end_data_of_complex(X: PerfectComplex) -> EndData:
    """End(X) in the homotopy category as a structure table, with radical data."""
    F = X.algebra.field
    H = HomComplex(X, X)
    coh = H.cohomology(0)
    reps = [H.to_components(0, coh.reps[a]) for a in range(coh.dim)]
    d = coh.dim
    mult = F.zeros((d, d, d))
    for a in range(d):
        L = H.postcompose_matrix(0, reps[a], X)
        prods = F.matmul(L, coh.reps.T)  # column b: e_a o e_b
        mult[a] = F.matmul(coh.proj, prods).T
    unit = F.matmul(coh.proj, H.vector(identity_map(X)).reshape(-1, 1)).reshape(-1)
    E = FinDimAlgebra(F, mult, unit)
    rad = radical(E)
    local = E.dim - rad.shape[0] == 1
    ss = None if local else semisimple_data(E, rad)
    return EndData(E, rad, local, ss, reps)


class ObjectFunction(CohFunction):
    """chi_X(C) = length over End(X) of Hom(C, X)."""

    def __init__(self, X: PerfectComplex, minimize: bool = True):
        super().__init__(X.algebra)
        self.X = X
        A = X.algebra
        self.model = minimal_model(X) if minimize and A.is_finite_dim and A.is_local else X
        self._end: EndData | None = None
        self._stack: dict[int, np.ndarray] = {}

    @property
    def end(self) -> EndData:
        with self._lock:
            if self._end is None:
                self._end = end_data_of_complex(self.model)
            return self._end

    def k_profile(self, C: PerfectComplex) -> dict[int, int]:
        """{j: dim_k Hom(Sigma^j C, X)}."""
        H = HomComplex(C, self.model)
        return {-n: v for n in H.degree_range if (v := H.cohomology_dim(n))}

    def _stacked_end(self, deg: int) -> np.ndarray:
        """Basis endomorphisms in degree ``deg`` premultiplied into the structure constants."""
        with self._lock:
            hit = self._stack.get(deg)
        if hit is None:
            ops = ops_for(self.algebra)
            r = self.model.rank(deg)
            G = np.stack([c.get(deg, ops.zeros(r, r)) for c in self.end.reps])
            hit = np.einsum("axyv,vut->axyut", G, ops.mult)
            with self._lock:
                self._stack[deg] = hit
        return hit

    def _action(self, H: HomComplex, n: int, coh) -> np.ndarray:
        """Action matrices of the End basis on H^n Hom(C, X) in the reps basis."""
        F = self.algebra.field
        e, h = len(self.end.reps), coh.dim
        out = F.zeros((e, h, H.dim(n)))
        for i, r, c, off in H.blocks(n):
            size = r * c * H.d
            G = self._stacked_end(i + n)
            Fi = coh.reps[:, off:off + size].reshape(h, r, c, H.d)
            prod = np.tensordot(G, Fi, axes=([2, 3], [1, 3])).transpose(0, 3, 1, 4, 2)
            out[:, :, off:off + size] = F.reduce(prod.reshape(e, h, size))
        acts = F.matmul(out.reshape(e * h, -1), coh.proj.T).reshape(e, h, h)
        return np.ascontiguousarray(acts.transpose(0, 2, 1))

    def _profile(self, C):
        if self.model.is_zero or C.is_zero:
            return {}
        end = self.end
        if end.local_residue_k:
            return self.k_profile(C)
        F = self.algebra.field
        H = HomComplex(C, self.model)
        out = {}
        for n in H.degree_range:
            coh = H.cohomology(n)
            if coh.dim == 0:
                continue
            M = AlgebraModule(F, self._action(H, n, coh))
            out[-n] = module_length(end.algebra, M, end.rad, end.semisimple)
        return out


def chi_of_complex(X: PerfectComplex) -> ObjectFunction:
    return ObjectFunction(X)


def _generator_action(A: CoeffAlgebra, T: np.ndarray, F: Field):
    """Returns entry -> matrix giving the action of an algebra element on the module."""
    m = T.shape[0]
    if A.kind == DUAL:
        return lambda e: F.reduce(F.eye(m) * e[0] + T * e[1])
    powers = [F.eye(m)]

    def power(t):
        while len(powers) <= t:
            powers.append(F.matmul(powers[-1], T))
        return powers[t]

    if A.kind == POLY:
        def act(e):
            out = F.zeros((m, m))
            for t, c in enumerate(e):
                if c:
                    out = out + power(t) * c
            return F.reduce(out)
        return act

    def act_q(e):
        out = F.zeros((m, m))
        for t, c in enumerate(e):
            out = out + power(t) * c
        return F.reduce(out)
    return act_q


class ModuleFunction(CohFunction):
    """chi of a finite-dimensional module M, as a stalk in degree ``degree``.

    M is given by the matrix T of the algebra generator (eps or x) acting on k^m.
    """

    def __init__(self, A: CoeffAlgebra, T, degree: int = 0):
        super().__init__(A)
        F = A.field
        self.T = F.array(T).reshape(len(T), len(T)) if not isinstance(T, np.ndarray) else F.reduce(T)
        self.m = self.T.shape[0]
        self.degree = degree
        self.act = _generator_action(A, self.T, F)
        self._check_relation()
        self._end = None

    def _check_relation(self):
        A, F, T = self.algebra, self.algebra.field, self.T
        if A.kind == DUAL:
            bad = F.nonzero_mask(F.matmul(T, T)).any() if self.m else False
        elif A.kind == POLY:
            bad = False
        else:
            bad = F.nonzero_mask(self.act(A.modulus)).any() if self.m else False
        if bad:
            raise ValueError("generator matrix does not satisfy the defining relation")

    @property
    def end(self):
        """End_A(M) = commutant of T, with radical data."""
        with self._lock:
            if self._end is None:
                F = self.algebra.field
                m = self.m
                # Phi T - T Phi = 0 as a linear system in vec(Phi) (row-major)
                sys_ = np.kron(F.eye(m), self.T.T) - np.kron(self.T, F.eye(m))
                basis = nullspace(F, F.reduce(sys_))
                mats = [basis[a].reshape(m, m) for a in range(basis.shape[0])]
                d = len(mats)
                mult = F.zeros((d, d, d))
                for a in range(d):
                    for b in range(d):
                        prod = F.matmul(mats[a], mats[b]).reshape(-1)
                        mult[a, b] = solve(F, basis.T, prod)
                unit = solve(F, basis.T, F.eye(m).reshape(-1))
                E = FinDimAlgebra(F, mult, unit)
                rad = radical(E)
                local = E.dim - rad.shape[0] == 1
                self._end = (E, rad, local, None if local else semisimple_data(E, rad), mats)
            return self._end

    def hom_matrix(self, C: PerfectComplex, n: int) -> np.ndarray:
        """k-matrix of D^n : Hom(C^{s-n}, M) -> Hom(C^{s-n-1}, M), blocks act(d[a, b])."""
        F = self.algebra.field
        s, m = self.degree, self.m
        src, tgt = C.rank(s - n), C.rank(s - n - 1)
        out = F.zeros((tgt * m, src * m))
        if not src or not tgt:
            return out
        d = C.d(s - n - 1)  # C^{s-n-1} -> C^{s-n}, shape (src, tgt, ...)
        for a in range(src):
            for b in range(tgt):
                out[b * m:(b + 1) * m, a * m:(a + 1) * m] = self.act(d[a, b])
        return out

    def _profile(self, C):
        F = self.algebra.field
        s, m = self.degree, self.m
        if m == 0 or C.is_zero:
            return {}
        E, rad, local, ss, mats = self.end
        out = {}
        for deg in C.degrees:
            n = s - deg
            N = C.rank(deg) * m
            D = self.hom_matrix(C, n)
            Dprev = self.hom_matrix(C, n - 1)
            if local:
                v = N - rank_of(F, D) - rank_of(F, Dprev)
            else:
                v = self._length(E, rad, ss, mats, D, Dprev, C.rank(deg))
            if v:
                out[-n] = v
        return out

    def _length(self, E, rad, ss, mats, D, Dprev, r):
        F = self.algebra.field
        N = D.shape[1]
        Z = nullspace(F, D) if D.shape[0] else F.eye(N)
        B = row_basis(F, Dprev.T) if Dprev.size else F.zeros((0, N))
        if B.shape[0]:
            keep = complement_columns(F, solve(F, Z.T, B.T).T, Z.shape[0])
        else:
            keep = list(range(Z.shape[0]))
        reps = Z[keep]
        if reps.shape[0] == 0:
            return 0
        W = F.zeros((0, N))
        outside = complement_columns(F, Z, N)
        if outside:
            W = F.zeros((len(outside), N))
            for k, c in enumerate(outside):
                W[k, c] = F.one
        coords = solve(F, np.vstack([B, reps, W]).T, F.eye(N))
        proj = coords[B.shape[0]:B.shape[0] + reps.shape[0]]
        acts = []
        for phi in mats:
            big = np.kron(F.eye(r), phi)
            acts.append(F.matmul(proj, F.matmul(F.reduce(big), reps.T)))
        M = AlgebraModule(F, np.array(acts, dtype=F.dtype).reshape(len(acts), reps.shape[0], reps.shape[0]))
        return module_length(E, M, rad, ss)


def chi_of_module(A: CoeffAlgebra, T, degree: int = 0) -> ModuleFunction:
    return ModuleFunction(A, T, degree)


def simple_module_function(A: CoeffAlgebra, degree: int = 0) -> ModuleFunction:
    """chi_k for the residue field of k[eps] (eps acts by zero)."""
    return ModuleFunction(A, A.field.zeros((1, 1)), degree)


class ResidueFunction(CohFunction):
    """chi_{k(p)} over k[x] by base change; ranks over Frac(k[x]) for p = (0)."""

    def __init__(self, A: CoeffAlgebra, prime: tuple, degree: int = 0):
        if A.kind != POLY:
            raise IncompatibleAlgebra("residue functions are defined over k[x]")
        super().__init__(A)
        p = A.field.p
        self.prime = P.monic(P.normalize(prime, p), p) if prime else ()
        A.residue_field(self.prime)  # validates irreducibility
        self.degree = degree

    def rank_of_diff(self, C: PerfectComplex, i: int) -> int:
        if C.rank(i) == 0 or C.rank(i + 1) == 0:
            return 0
        m = C.d(i)
        pm = PolyMatrix(self.algebra.field.p, m.shape[0], m.shape[1], tuple(m.reshape(-1)))
        if not self.prime:
            return poly_matrix_rank(pm)
        return rank(pm.reduce_mod(self.prime))

    def _profile(self, C):
        out = {}
        s = self.degree
        for deg in C.degrees:
            v = C.rank(deg) - self.rank_of_diff(C, deg) - self.rank_of_diff(C, deg - 1)
            if v:
                out[deg - s] = v
        return out


@lru_cache(maxsize=None)
def _label_function(label: IrreducibleLabel, A: CoeffAlgebra) -> CohFunction:
    if isinstance(label, ObjectLabel):
        if A.kind != DUAL:
            raise IncompatibleAlgebra("object labels live over the dual numbers")
        return ObjectFunction(string_complex(A, label.n, label.r))
    if isinstance(label, SimpleLabel):
        if A.kind != DUAL:
            raise IncompatibleAlgebra("the simple label lives over the dual numbers")
        return simple_module_function(A, label.shift)
    if isinstance(label, ResidueLabel):
        return ResidueFunction(A, label.prime, label.shift)
    raise TypeError(f"unknown label {label!r}")
