"""Exact coefficient fields: F_p, F_p[x]/(f) and Q.

Prime-field matrices are int64 numpy arrays reduced into [0, p).  Extension
fields and the rationals use object arrays holding :class:`ExtElem` or
:class:`fractions.Fraction` values.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from . import poly as P

INT64_LIMIT = 1 << 16  # triple products summed over thousands of terms stay inside int64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class ExtElem:
    """Element of F_p[x]/(f), stored as a reduced coefficient tuple."""

    __slots__ = ("field", "c")

    def __init__(self, field: "Field", coeffs: Sequence[int]):
        self.field = field
        self.c = tuple(coeffs)

    def _coerce(self, other) -> "ExtElem | None":
        if isinstance(other, ExtElem):
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.element(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, P.add(self.c, o.c, self.field.p))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtElem(self.field, P.sub(self.c, o.c, self.field.p))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ExtElem(self.field, P.neg(self.c, self.field.p))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return ExtElem(self.field, P.mod(P.mul(self.c, o.c, p), self.field.modulus, p))

    __rmul__ = __mul__

    def inverse(self) -> "ExtElem":
        if not self.c:
            raise ZeroDivisionError("inverse of zero in extension field")
        p = self.field.p
        g, s, _ = P.xgcd(self.c, self.field.modulus, p)
        # g is a nonzero constant because the modulus is irreducible
        ginv = pow(g[0], -1, p)
        return ExtElem(self.field, P.scale(s, ginv, p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c and self.field == o.field

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.c))

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(str(a) if i == 0 else f"{a}*t" + (f"^{i}" if i > 1 else ""))
        return "+".join(terms)


@dataclass(frozen=True)
class Field:
    """An exact field.  Build with :meth:`prime`, :meth:`extension` or :meth:`rationals`."""

    kind: str
    p: int = 0
    modulus: tuple = ()

    # -- constructors -------------------------------------------------
    @staticmethod
    def prime(p: int) -> "Field":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return Field("prime", p)

    @staticmethod
    def extension(p: int, f: Sequence[int]) -> "Field":
        """F_p[t]/(f) with f given low degree first; f must be monic irreducible."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        f = P.normalize(f, p)
        if len(f) < 2 or f[-1] != 1:
            raise ValueError("extension modulus must be monic of degree >= 1")
        witness = P.factor_witness(f, p)
        if witness is not None:
            raise ValueError(f"modulus {f} is reducible over F_{p}; factor {witness}")
        return Field("extension", p, f)

    @staticmethod
    def rationals() -> "Field":
        return Field("rationals")

    # -- basic data ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.modulus) - 1 if self.kind == "extension" else 1

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int | None:
        if self.kind == "rationals":
            return None
        return self.p ** self.degree

    @property
    def is_finite(self) -> bool:
        return self.kind != "rationals"

    @cached_property
    def dtype(self):
        if self.kind == "prime" and self.p < INT64_LIMIT:
            return np.int64
        return object

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    def element(self, x):
        if self.kind == "prime":
            return int(x) % self.p
        if self.kind == "rationals":
            return Fraction(x)
        if isinstance(x, ExtElem):
            return x
        if isinstance(x, (list, tuple)):
            return ExtElem(self, P.mod(P.normalize(x, self.p), self.modulus, self.p))
        return ExtElem(self, P.normalize((int(x),), self.p))

    __call__ = element

    def __repr__(self):
        if self.kind == "prime":
            return f"F_{self.p}"
        if self.kind == "rationals":
            return "Q"
        return f"F_{self.p}[t]/({P.to_str(self.modulus, 't')})"

    def describe(self) -> str:
        """Canonical string used in serialized files."""
        if self.kind == "prime":
            return str(self.p)
        if self.kind == "rationals":
            return "Q"
        return f"{self.p}:" + ",".join(map(str, self.modulus))

    @staticmethod
    def parse(spec: str) -> "Field":
        spec = str(spec).strip()
        if spec.upper() == "Q":
            return Field.rationals()
        if ":" in spec:
            p, f = spec.split(":", 1)
            return Field.extension(int(p), [int(c) for c in f.split(",")])
        return Field.prime(int(spec))

    # -- scalar arithmetic --------------------------------------------
    def inv(self, a):
        if self.kind == "prime":
            a = int(a) % self.p
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, -1, self.p)
        if self.kind == "rationals":
            return 1 / Fraction(a)
        return self.element(a).inverse()

    def is_zero(self, a) -> bool:
        if self.kind == "prime":
            return int(a) % self.p == 0
        return not a

    # -- arrays -------------------------------------------------------
    def array(self, data) -> np.ndarray:
        if self.dtype is np.int64:
            return np.asarray(data, dtype=np.int64) % self.p
        arr = np.asarray(data, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        flat = out.reshape(-1)
        for i, x in enumerate(arr.reshape(-1)):
            flat[i] = self.element(x)
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is np.int64:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.reshape(-1)[:] = [self.zero] * out.size
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.kind == "prime":
            return arr % self.p
        return arr

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[-1] == 0 or b.shape[0] == 0:
            return self.zeros(a.shape[:-1] + b.shape[1:])
        out = a @ b
        return out % self.p if self.kind == "prime" else out

    def nonzero_mask(self, arr: np.ndarray) -> np.ndarray:
        if self.dtype is np.int64:
            return arr % self.p != 0
        return np.vectorize(bool, otypes=[bool])(arr) if arr.size else np.zeros(arr.shape, bool)

    def random_array(self, rng: np.random.Generator, shape, bound: int = 5) -> np.ndarray:
        """Uniform over finite fields; small integers in [-bound, bound] over Q."""
        if self.kind == "prime":
            return self.array(rng.integers(0, self.p, size=shape))
        if self.kind == "rationals":
            return self.array(rng.integers(-bound, bound + 1, size=shape))
        coeffs = rng.integers(0, self.p, size=tuple(shape) + (self.degree,))
        out = np.empty(shape, dtype=object)
        for idx in np.ndindex(*shape):
            out[idx] = self.element(list(coeffs[idx]))
        return out

    def elements(self) -> Iterator:
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite field")
        if self.kind == "prime":
            yield from range(self.p)
            return
        for c in itertools.product(range(self.p), repeat=self.degree):
            yield self.element(list(c))

    def to_prime_coords(self, a) -> tuple:
        """Coordinates of an extension element over the prime field (length = degree)."""
        a = self.element(a)
        if self.kind == "prime":
            return (a,)
        c = list(a.c) + [0] * (self.degree - len(a.c))
        return tuple(c)
