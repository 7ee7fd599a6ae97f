"""JSON complex files.

Format: {"algebra", "field", "ranks": {deg: count}, "diffs": {deg: [[entry]]}}.
A dual-number entry is [a, b] (a + b eps); a polynomial entry is a
coefficient list, low degree first.  Rational coordinates are written as
integers when integral and as "p/q" strings otherwise.  Degree keys are
emitted in increasing numeric order so that dumps are canonical.
"""
from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from ..coeffalg import DUAL, POLY, CoeffAlgebra
from ..exactlin import Field
from ..exactlin import poly as P
from .amat import ops_for
from .complex import PerfectComplex, validate


class ComplexFileError(ValueError):
    pass


def _scalar_out(F: Field, x):
    if F.kind == "prime":
        return int(x)
    if F.kind == "rationals":
        x = Fraction(x)
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return list(F.to_prime_coords(x))


def _scalar_in(F: Field, x):
    if F.kind == "rationals" and isinstance(x, str):
        return Fraction(x)
    return F.element(x)


def _entry_out(A: CoeffAlgebra, e):
    if A.kind == POLY:
        return list(e)
    coords = [_scalar_out(A.field, c) for c in e]
    if A.kind == DUAL:
        return coords
    while coords and coords[-1] == 0:
        coords.pop()
    return coords


def _entry_in(A: CoeffAlgebra, e):
    if A.kind == POLY:
        return P.normalize(e, A.field.p)
    vals = [_scalar_in(A.field, c) for c in e]
    d = A.dim
    if len(vals) > d:
        if A.kind == DUAL:
            raise ComplexFileError(f"dual-number entry {e} has more than two coordinates")
        red = P.mod(P.normalize([int(v) for v in vals], A.field.p), A.modulus, A.field.p)
        vals = [A.field.element(v) for v in red]
    return vals + [A.field.zero] * (d - len(vals))


def to_dict(X: PerfectComplex) -> dict:
    A = X.algebra
    diffs = {}
    for i, m in X.diffs.items():
        rows = []
        for r in range(m.shape[0]):
            rows.append([_entry_out(A, m[r, c]) for c in range(m.shape[1])])
        diffs[str(i)] = rows
    return {
        "algebra": A.describe(),
        "field": A.field.describe(),
        "ranks": {str(i): r for i, r in X.ranks.items()},
        "diffs": diffs,
    }


def dumps(X: PerfectComplex) -> str:
    return json.dumps(to_dict(X), separators=(", ", ": "))


def from_dict(doc: dict, check: bool = True) -> PerfectComplex:
    try:
        F = Field.parse(doc["field"])
        A = CoeffAlgebra.parse(doc["algebra"], F)
        ranks = {int(k): int(v) for k, v in doc["ranks"].items()}
        ops = ops_for(A)
        diffs = {}
        for k, rows in doc.get("diffs", {}).items():
            i = int(k)
            rt, rs = ranks.get(i + 1, 0), ranks.get(i, 0)
            if len(rows) != rt or any(len(r) != rs for r in rows):
                raise ComplexFileError(f"differential {i} must be {rt} x {rs}")
            m = ops.zeros(rt, rs)
            for r, row in enumerate(rows):
                for c, e in enumerate(row):
                    if A.kind == POLY:
                        m[r, c] = _entry_in(A, e)
                    else:
                        m[r, c] = F.array(_entry_in(A, e)) if F.dtype is np.int64 else _entry_in(A, e)
            diffs[i] = m
        X = PerfectComplex(A, ranks, diffs)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ComplexFileError):
            raise
        raise ComplexFileError(f"malformed complex file: {exc}") from exc
    if check:
        bad = validate(X)
        if bad is not None:
            raise ComplexFileError(str(bad))
    return X


def loads(text: str, check: bool = True) -> PerfectComplex:
    return from_dict(json.loads(text), check=check)


def load(path, check: bool = True) -> PerfectComplex:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), check=check)


def dump(X: PerfectComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(X) + "\n")
