"""Finite-dimensional algebras given by structure constants, their modules,
Jacobson radicals and composition lengths.

Subspaces are stored as arrays whose rows span them.  Module actions act on
column vectors: ``action[a] @ v`` is ``e_a . v``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from ..exactlin import Field, nullspace, rank_of, row_basis, solve
from ..exactlin.matrix import complement_columns


class AlgebraError(ValueError):
    pass


def _mod(F: Field, a: np.ndarray) -> np.ndarray:
    return F.reduce(a)


@dataclass(eq=False)
class FinDimAlgebra:
    """Associative unital algebra: mult[a, b, t] is the e_t-coefficient of e_a e_b."""

    field: Field
    mult: np.ndarray
    unit: np.ndarray
    check: bool = True

    def __post_init__(self):
        F = self.field
        self.mult = F.array(self.mult) if self.mult.dtype != F.dtype else F.reduce(self.mult)
        self.unit = F.array(self.unit) if self.unit.dtype != F.dtype else F.reduce(self.unit)
        d = self.dim
        if self.mult.shape != (d, d, d) or self.unit.shape != (d,):
            raise AlgebraError("structure table has inconsistent shape")
        if self.check and d:
            bad = self.associativity_violation()
            if bad is not None:
                raise AlgebraError(f"multiplication is not associative on basis triple {bad}")
            if not (np.array_equal(self.left_matrix(self.unit), F.eye(d))
                    and np.array_equal(self.right_matrix(self.unit), F.eye(d))):
                raise AlgebraError("unit is not two-sided")

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    def associativity_violation(self) -> tuple[int, int, int] | None:
        F = self.field
        left = _mod(F, np.einsum("abs,sct->abct", self.mult, self.mult))
        right = _mod(F, np.einsum("bcs,ast->abct", self.mult, self.mult))
        diff = F.nonzero_mask(left - right)
        if diff.any():
            a, b, c, _ = np.argwhere(diff)[0]
            return int(a), int(b), int(c)
        return None

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return _mod(self.field, np.einsum("a,b,abt->t", x, y, self.mult))

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        """Column u is x * e_u."""
        return _mod(self.field, np.einsum("a,aut->tu", x, self.mult))

    def right_matrix(self, x: np.ndarray) -> np.ndarray:
        """Column u is e_u * x."""
        return _mod(self.field, np.einsum("b,ubt->tu", x, self.mult))

    @cached_property
    def left_regular(self) -> np.ndarray:
        """left_regular[a] = matrix of left multiplication by e_a."""
        return _mod(self.field, np.transpose(self.mult, (0, 2, 1)).copy())

    def power(self, x: np.ndarray, e: int) -> np.ndarray:
        out = self.unit.copy()
        base = x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def regular_module(self) -> "AlgebraModule":
        return AlgebraModule(self.field, self.left_regular.copy())

    def is_nilpotent(self, x: np.ndarray) -> bool:
        L = self.left_matrix(x)
        F = self.field
        M = L
        for _ in range(self.dim):
            M = F.matmul(M, L)
        return not F.nonzero_mask(M).any()

    def span_products(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Row basis of span{x y : x in rows(left), y in rows(right)}."""
        F = self.field
        if left.shape[0] == 0 or right.shape[0] == 0:
            return F.zeros((0, self.dim))
        prods = _mod(F, np.einsum("ia,jb,abt->ijt", left, right, self.mult)).reshape(-1, self.dim)
        return row_basis(F, prods)

    def is_two_sided_ideal(self, rows: np.ndarray) -> bool:
        F = self.field
        basis = F.eye(self.dim)
        r = rank_of(F, rows)
        for prods in (self.span_products(basis, rows), self.span_products(rows, basis)):
            if prods.shape[0] and rank_of(F, np.vstack([rows, prods])) != r:
                return False
        return True

    def quotient(self, ideal: np.ndarray) -> tuple["FinDimAlgebra", np.ndarray, np.ndarray]:
        """E / ideal as (algebra, projection E->S matrix, lift S->E matrix)."""
        F = self.field
        d = self.dim
        ideal = row_basis(F, ideal) if ideal.shape[0] else F.zeros((0, d))
        comp = complement_columns(F, ideal, d)
        k = len(comp)
        lift = F.zeros((d, k))
        for j, c in enumerate(comp):
            lift[c, j] = F.one
        # coordinates relative to [ideal rows ; complement unit vectors]
        full = np.vstack([ideal, lift.T]) if ideal.shape[0] else lift.T.copy()
        coords = solve(F, full.T, F.eye(d))  # column j: coords of e_j
        proj = coords[ideal.shape[0]:, :]
        # structure constants of the quotient
        prods = _mod(F, np.einsum("ua,vb,abt->uvt", lift.T, lift.T, self.mult))
        qmult = _mod(F, np.einsum("uvt,st->uvs", prods, proj))
        qunit = F.matmul(proj, self.unit.reshape(-1, 1)).reshape(-1)
        return FinDimAlgebra(F, qmult, qunit, check=False), proj, lift

    def centre(self) -> np.ndarray:
        F = self.field
        d = self.dim
        comm = self.mult - np.transpose(self.mult, (1, 0, 2))  # [a, b, t]
        system = _mod(F, np.transpose(comm, (1, 2, 0)).reshape(d * d, d))
        return nullspace(F, system)


@dataclass(eq=False)
class AlgebraModule:
    """A module given by one matrix per algebra basis element."""

    field: Field
    action: np.ndarray  # shape (dim_E, m, m)

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    def act(self, x: np.ndarray) -> np.ndarray:
        return _mod(self.field, np.einsum("a,aij->ij", x, self.action))

    def check(self, E: FinDimAlgebra) -> None:
        F = self.field
        if self.action.shape[0] != E.dim:
            raise AlgebraError("action has the wrong number of matrices")
        if self.dim == 0:
            return
        lhs = _mod(F, np.einsum("aij,bjk->abik", self.action, self.action))
        rhs = _mod(F, np.einsum("abt,tik->abik", E.mult, self.action))
        if F.nonzero_mask(lhs - rhs).any():
            raise AlgebraError("action does not respect the multiplication table")
        if not np.array_equal(self.act(E.unit), F.eye(self.dim)):
            raise AlgebraError("unit does not act as the identity")

    def direct_sum(self, other: "AlgebraModule") -> "AlgebraModule":
        F = self.field
        m, n = self.dim, other.dim
        out = F.zeros((self.action.shape[0], m + n, m + n))
        out[:, :m, :m] = self.action
        out[:, m:, m:] = other.action
        return AlgebraModule(F, out)

    def submodule(self, gens: np.ndarray) -> np.ndarray:
        """Row basis of the submodule generated by the rows of ``gens``."""
        F = self.field
        basis = row_basis(F, gens) if gens.shape[0] else F.zeros((0, self.dim))
        while True:
            if basis.shape[0] == 0:
                return basis
            imgs = _mod(F, np.einsum("aij,kj->aki", self.action, basis)).reshape(-1, self.dim)
            new = row_basis(F, np.vstack([basis, imgs]))
            if new.shape[0] == basis.shape[0]:
                return new
            basis = new

    def restrict(self, sub: np.ndarray) -> "AlgebraModule":
        """The submodule spanned by rows of ``sub`` (assumed invariant) as a module."""
        F = self.field
        k = sub.shape[0]
        imgs = _mod(F, np.einsum("aij,kj->aik", self.action, sub))  # columns: images of sub rows
        out = F.zeros((self.action.shape[0], k, k))
        for a in range(self.action.shape[0]):
            x = solve(F, sub.T, imgs[a])
            if x is None:
                raise AlgebraError("subspace is not invariant")
            out[a] = x
        return AlgebraModule(F, out)

    def quotient(self, sub: np.ndarray) -> "AlgebraModule":
        F = self.field
        m = self.dim
        comp = complement_columns(F, sub, m)
        k = len(comp)
        lift = F.zeros((m, k))
        for j, c in enumerate(comp):
            lift[c, j] = F.one
        full = np.vstack([sub, lift.T]) if sub.shape[0] else lift.T.copy()
        coords = solve(F, full.T, F.eye(m))
        proj = coords[sub.shape[0]:, :]
        out = F.zeros((self.action.shape[0], k, k))
        for a in range(self.action.shape[0]):
            out[a] = F.matmul(proj, F.matmul(self.action[a], lift))
        return AlgebraModule(F, out)


# ---------------------------------------------------------------------------
# radical


def _dickson_radical(E: FinDimAlgebra) -> np.ndarray:
    F = E.field
    tr = _mod(F, np.einsum("cuu->c", E.mult))
    gram = _mod(F, np.einsum("abc,c->ab", E.mult, tr))
    return nullspace(F, gram)


def _ciw_radical(E: FinDimAlgebra) -> np.ndarray:
    """Radical over F_p for p <= dim via the trace-power sequence I_0 > I_1 > ... > I_l."""
    F = E.field
    p = F.p
    d = E.dim
    Ls = np.asarray(E.left_regular, dtype=np.int64)
    ideal = F.eye(d)
    levels = int(math.floor(math.log(d, p) + 1e-9)) if d > 1 else 0
    for i in range(levels + 1):
        if ideal.shape[0] == 0:
            break
        pi = p ** i
        modulus = pi * p
        g = F.zeros((ideal.shape[0], d))
        prods = _mod(F, np.einsum("ka,abt->kbt", ideal, E.mult))  # (k, b, t): ideal_k * e_b
        for k in range(ideal.shape[0]):
            for b in range(d):
                x = prods[k, b]
                L = np.einsum("t,tij->ij", np.asarray(x, dtype=np.int64), Ls) % p
                M = L if pi == 1 else _matpow_mod(L, pi, modulus)
                t = int(np.trace(M)) % modulus
                if t % pi:
                    raise AssertionError("trace-power congruence failed; radical sequence invalid")
                g[k, b] = (t // pi) % p
        combos = nullspace(F, g.T)
        ideal = row_basis(F, F.matmul(combos, ideal)) if combos.shape[0] else F.zeros((0, d))
    return ideal


def _matpow_mod(L: np.ndarray, e: int, modulus: int) -> np.ndarray:
    out = np.eye(L.shape[0], dtype=np.int64)
    base = L % modulus
    while e:
        if e & 1:
            out = (out @ base) % modulus
        base = (base @ base) % modulus
        e >>= 1
    return out


def _restrict_scalars(E: FinDimAlgebra) -> FinDimAlgebra:
    """E over F_q viewed as an F_p-algebra with basis t^i e_a (index a*deg + i)."""
    F = E.field
    Fp = Field.prime(F.p)
    deg = F.degree
    d = E.dim
    D = d * deg
    mult = np.zeros((D, D, D), dtype=np.int64)
    tpow = [F.element([0] * i + [1]) for i in range(2 * deg)]
    for a in range(d):
        for b in range(d):
            for c in range(d):
                m = E.mult[a, b, c]
                if not m:
                    continue
                for i in range(deg):
                    for j in range(deg):
                        coeffs = F.to_prime_coords(m * tpow[i + j])
                        for l, v in enumerate(coeffs):
                            mult[a * deg + i, b * deg + j, c * deg + l] = v
    unit = np.zeros(D, dtype=np.int64)
    for c in range(d):
        for l, v in enumerate(F.to_prime_coords(E.unit[c])):
            unit[c * deg + l] = v
    return FinDimAlgebra(Fp, mult, unit, check=False)


def radical(E: FinDimAlgebra) -> np.ndarray:
    """Row basis of the Jacobson radical of E."""
    F = E.field
    d = E.dim
    if d == 0:
        return F.zeros((0, 0))
    if F.kind == "rationals" or (F.kind == "prime" and F.p > d):
        return _dickson_radical(E)
    if F.kind == "prime":
        return _ciw_radical(E)
    Ep = _restrict_scalars(E)
    rp = radical(Ep)
    deg = F.degree
    vecs = F.zeros((rp.shape[0], d))
    for k in range(rp.shape[0]):
        for a in range(d):
            vecs[k, a] = F.element([int(v) for v in rp[k, a * deg:(a + 1) * deg]])
    return row_basis(F, vecs) if vecs.shape[0] else F.zeros((0, d))


def brute_force_radical(E: FinDimAlgebra) -> np.ndarray:
    """Oracle for tiny algebras over finite fields: {x : x y nilpotent for all y}."""
    import itertools

    F = E.field
    elems = [np.array(list(c), dtype=F.dtype) if F.dtype is np.int64 else F.array(list(c))
             for c in itertools.product(list(F.elements()), repeat=E.dim)]
    members = [x for x in elems if all(E.is_nilpotent(E.mul(x, y)) for y in elems)]
    return row_basis(F, np.array(members, dtype=F.dtype)) if members else F.zeros((0, E.dim))


# ---------------------------------------------------------------------------
# semisimple structure and length


def _min_poly(S: FinDimAlgebra, x: np.ndarray, one: np.ndarray) -> list:
    """Monic minimal polynomial of x inside the unital subalgebra with identity ``one``."""
    F = S.field
    powers = [one]
    while True:
        nxt = S.mul(powers[-1], x)
        A = np.array(powers, dtype=F.dtype).T
        c = solve(F, A, nxt)
        if c is not None:
            return [F.element(-v) for v in c] + [F.one]
        powers.append(nxt)


def _roots(F: Field, coeffs: list) -> list:
    if F.is_finite:
        out = []
        for lam in F.elements():
            acc = F.zero
            for a in reversed(coeffs):
                acc = F.element(acc * lam + a)
            if F.is_zero(acc):
                out.append(lam)
        return out
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain="QQ")
    roots = poly.ground_roots()
    if sum(roots.values()) != poly.degree():
        raise NotImplementedError("centre does not split over Q; non-split simple components are unsupported")
    return [F.element(r.p) / F.element(r.q) for r in roots]


def _split_basis(S: FinDimAlgebra, Z: np.ndarray) -> np.ndarray:
    """Basis of the split part of the centre: Frobenius-fixed over F_q, everything over Q."""
    F = S.field
    if not F.is_finite or Z.shape[0] == 0:
        return Z
    q = F.order
    k = Z.shape[0]
    images = np.array([S.power(Z[i], q) for i in range(k)], dtype=F.dtype)
    # Frobenius is F-linear on the commutative algebra Z; express images in the Z basis
    coords = solve(F, Z.T, images.T)  # column i: coords of z_i^q
    fixed = nullspace(F, F.reduce(coords - F.eye(k)))
    return F.matmul(fixed, Z) if fixed.shape[0] else F.zeros((0, S.dim))


def primitive_central_idempotents(S: FinDimAlgebra) -> list[np.ndarray]:
    """Primitive central idempotents of a semisimple algebra S."""
    F = S.field
    if S.dim == 0:
        return []
    Z = S.centre()
    split = _split_basis(S, Z)
    idems = [S.unit.copy()]
    for k in range(split.shape[0]):
        f = split[k]
        refined = []
        for e in idems:
            g = S.mul(f, e)
            coeffs = _min_poly(S, g, e)
            roots = _roots(F, coeffs)
            if len(roots) <= 1:
                refined.append(e)
                continue
            for lam in roots:
                out = e.copy()
                for mu in roots:
                    if mu == lam:
                        continue
                    factor = F.reduce(g - e * mu)
                    out = S.mul(out, factor)
                    out = F.reduce(out * F.inv(F.element(lam - mu)))
                refined.append(out)
        idems = refined
    return idems


@dataclass
class SemisimpleData:
    idempotents: list  # lifted to E coordinates
    simple_dims: list  # k-dimension of the simple module of each block


def semisimple_data(E: FinDimAlgebra, rad: np.ndarray | None = None) -> SemisimpleData:
    F = E.field
    rad = radical(E) if rad is None else rad
    S, proj, lift = E.quotient(rad)
    idems = primitive_central_idempotents(S)
    Z = S.centre()
    eye = F.eye(S.dim)
    dims = []
    for e in idems:
        zdim = rank_of(F, np.array([S.mul(Z[i], e) for i in range(Z.shape[0])], dtype=F.dtype))
        sdim = rank_of(F, np.array([S.mul(eye[i], e) for i in range(S.dim)], dtype=F.dtype))
        n2, rem = divmod(sdim, zdim)
        n = math.isqrt(n2)
        if rem or n * n != n2:
            raise NotImplementedError("simple block is not a full matrix algebra over its centre")
        dims.append(n * zdim)
    lifted = [F.matmul(lift, e.reshape(-1, 1)).reshape(-1) for e in idems]
    return SemisimpleData(lifted, dims)


def module_length(E: FinDimAlgebra, M: AlgebraModule, rad: np.ndarray | None = None,
                  semisimple: SemisimpleData | None = None) -> int:
    """Composition length of M over E, layer by layer along the radical filtration."""
    F = E.field
    if M.dim == 0:
        return 0
    rad = radical(E) if rad is None else rad
    if E.dim - rad.shape[0] == 1:
        return M.dim
    ss = semisimple_data(E, rad) if semisimple is None else semisimple
    rad_action = _mod(F, np.einsum("ra,aij->rij", rad, M.action)) if rad.shape[0] else None
    current = F.eye(M.dim)
    total = 0
    while current.shape[0]:
        if rad_action is not None:
            imgs = _mod(F, np.einsum("rij,kj->rki", rad_action, current)).reshape(-1, M.dim)
            nxt = row_basis(F, imgs)
        else:
            nxt = F.zeros((0, M.dim))
        base = nxt.shape[0]
        for e, sdim in zip(ss.idempotents, ss.simple_dims):
            img = F.matmul(current, M.act(e).T)  # rows: e . v for v in current
            span = rank_of(F, np.vstack([nxt, img])) if base else rank_of(F, img)
            count, rem = divmod(span - base, sdim)
            if rem:
                raise AlgebraError("layer dimension is not a multiple of the simple dimension")
            total += count
        current = nxt
    return total


def composition_length_brute(E: FinDimAlgebra, M: AlgebraModule) -> int:
    """Oracle for tiny modules over finite fields: peel minimal cyclic submodules."""
    import itertools

    F = E.field
    length = 0
    while M.dim:
        best = None
        elems = list(F.elements())
        for c in itertools.product(elems, repeat=M.dim):
            lead = next((v for v in c if not F.is_zero(v)), None)
            if lead is None or lead != F.one:  # one generator per line
                continue
            sub = M.submodule(F.array([list(c)]))
            if best is None or sub.shape[0] < best.shape[0]:
                best = sub
                if best.shape[0] == 1:
                    break
        M = M.quotient(best)
        length += 1
    return length


# ---------------------------------------------------------------------------


def end_algebra_as_table(field: Field, basis: Sequence, compose: Callable, coords: Callable,
                         identity) -> FinDimAlgebra:
    """Structure table of span(basis) under ``compose``.

    ``coords(x)`` expresses an element in the basis; ``identity`` must lie in
    the span.  Non-associative input is rejected with the violating triple.
    """
    d = len(basis)
    mult = field.zeros((d, d, d))
    for a in range(d):
        for b in range(d):
            mult[a, b] = field.array(coords(compose(basis[a], basis[b])))
    unit = field.array(coords(identity))
    return FinDimAlgebra(field, mult, unit)
