"""Univariate polynomials over F_p as tuples of ints, lowest degree first.

The zero polynomial is the empty tuple.  Every function returns normalized
tuples (no trailing zeros, coefficients in [0, p)).
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

Poly = tuple


def normalize(f: Sequence[int], p: int) -> Poly:
    c = [int(a) % p for a in f]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    return len(f) - 1  # -1 for the zero polynomial


def add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return normalize([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def neg(f: Poly, p: int) -> Poly:
    return normalize([-a for a in f], p)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    return add(f, neg(g, p), p)


def scale(f: Poly, c: int, p: int) -> Poly:
    return normalize([a * c for a in f], p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return normalize(out, p)


def divmod_(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    for k in range(len(f) - len(g), -1, -1):
        c = r[k + dg] * inv % p
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] = (r[k + j] - c * b) % p
    return normalize(q, p), normalize(r[:dg] if dg else [], p)


def mod(f: Poly, g: Poly, p: int) -> Poly:
    return divmod_(f, g, p)[1]


def monic(f: Poly, p: int) -> Poly:
    if not f:
        return f
    return scale(f, pow(f[-1], -1, p), p)


def xgcd(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """Return (d, s, t) with s*f + t*g = d (d not normalized to monic)."""
    r0, r1 = f, g
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    return r0, s0, t0


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    return monic(xgcd(f, g, p)[0], p)


def powmod(f: Poly, e: int, m: Poly, p: int) -> Poly:
    out: Poly = (1,)
    base = mod(f, m, p)
    while e:
        if e & 1:
            out = mod(mul(out, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return out


def monic_polys(p: int, deg: int) -> Iterator[Poly]:
    for c in itertools.product(range(p), repeat=deg):
        yield tuple(c) + (1,)


def factor_witness(f: Poly, p: int) -> Poly | None:
    """A monic proper factor of f by trial division, or None if f is irreducible."""
    f = normalize(f, p)
    d = degree(f)
    if d < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    for k in range(1, d // 2 + 1):
        for g in monic_polys(p, k):
            if not mod(f, g, p):
                return g
    return None


def is_irreducible(f: Poly, p: int) -> bool:
    return factor_witness(f, p) is None


def smallest_factor(f: Poly, p: int) -> Poly:
    """Smallest-degree monic irreducible factor of f (degree >= 1)."""
    w = factor_witness(f, p)
    return monic(f, p) if w is None else w


def eval_at(f: Poly, x, one):
    """Horner evaluation; ``x`` may be any ring element supporting + and *."""
    acc = one * 0
    for a in reversed(f):
        acc = acc * x + one * a
    return acc


def from_roots(roots: Sequence[int], p: int) -> Poly:
    out: Poly = (1,)
    for r in roots:
        out = mul(out, normalize((-r, 1), p), p)
    return out


def to_str(f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        a = f[i]
        if not a:
            continue
        mon = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        coef = str(a) if (a != 1 or i == 0) else ""
        terms.append(coef + ("*" if coef and mon else "") + mon)
    return "+".join(terms)
