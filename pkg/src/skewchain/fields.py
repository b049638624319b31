"""Exact commutative base fields.

Field values are plain Python objects (``gmpy2.mpq`` rationals, ``int`` residues, or
tuples for the extensions); every field object knows how to combine them.
Keeping values dumb and the arithmetic on the field keeps the algebra code
in :mod:`skewchain.rings` generic over all supported fields.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as _Fraction
from math import isqrt
from typing import Any

from gmpy2 import mpq

RATIONAL_TYPES = (int, _Fraction, type(mpq(0)))


def parse_fraction(lit: Any) -> mpq:
    if isinstance(lit, bool):
        raise ValueError(f"not a rational literal: {lit!r}")
    if isinstance(lit, RATIONAL_TYPES):
        return mpq(lit)
    if isinstance(lit, str):
        return mpq(_Fraction(lit.strip()))
    raise ValueError(f"not a rational literal: {lit!r}")


def format_fraction(x: mpq) -> str | int:
    if x.denominator == 1:
        return int(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_sqrt(x: mpq) -> mpq | None:
    """Exact square root of a non-negative rational, or None."""
    if x < 0:
        return None
    n, d = int(x.numerator), int(x.denominator)
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return mpq(rn, rd)
    return None


def _is_squarefree(d: int) -> bool:
    d = abs(d)
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


class BaseField:
    """Interface shared by the concrete fields below."""

    ordered = False

    def from_int(self, n: int):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def conj(self, a):
        return a

    def sign(self, a) -> int:
        raise TypeError(f"{self} is not an ordered field")

    def sqrt(self, a):
        """Exact square root within the field, or None."""
        return None

    def to_complex(self, a) -> complex:
        raise TypeError(f"no numeric approximation for {self}")


@dataclass(frozen=True)
class Rationals(BaseField):
    ordered = True

    def from_int(self, n):
        return mpq(n)

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def is_zero(self, a):
        return not a

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / b

    def sign(self, a):
        return (a > 0) - (a < 0)

    def sqrt(self, a):
        return rational_sqrt(a)

    def coerce(self, x):
        return mpq(x)

    def parse(self, lit):
        return parse_fraction(lit)

    def format(self, a):
        return format_fraction(a)

    def random(self, rng: random.Random, bound: int = 10):
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        return mpq(num, den)

    def to_complex(self, a):
        return complex(float(a))

    def descriptor(self):
        return {"kind": "rationals"}

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class QuadraticField(BaseField):
    """Q(sqrt d) for a squarefree integer d > 1; values are pairs (u, v) = u + v*sqrt(d)."""

    d: int
    ordered = True

    def __post_init__(self):
        if self.d <= 1 or not _is_squarefree(self.d):
            raise ValueError(f"d must be a squarefree integer > 1, got {self.d}")

    def from_int(self, n):
        return (mpq(n), mpq(0))

    def is_zero(self, a):
        return not a[0] and not a[1]

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return (a[0] * b[0] + self.d * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def norm(self, a) -> mpq:
        # (u + v sqrt d)(u - v sqrt d)
        return a[0] * a[0] - self.d * a[1] * a[1]

    def inv(self, a):
        n = self.norm(a)
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return (a[0] / n, -a[1] / n)

    def sign(self, a):
        u, v = a
        su, sv = (u > 0) - (u < 0), (v > 0) - (v < 0)
        if sv == 0:
            return su
        if su == 0 or su == sv:
            return sv
        # opposite signs: compare u^2 with d v^2
        return su if u * u > self.d * v * v else sv

    def sqrt(self, a):
        u, v = a
        if not v:
            r = rational_sqrt(u)
            if r is not None:
                return (r, mpq(0))
            r = rational_sqrt(u / self.d)
            return None if r is None else (mpq(0), r)
        # (x + y sqrt d)^2 = a  ->  x^2 + d y^2 = u, 2xy = v
        disc = rational_sqrt(u * u - self.d * v * v)
        if disc is None:
            return None
        for x2 in ((u + disc) / 2, (u - disc) / 2):
            x = rational_sqrt(x2)
            if x:
                cand = (x, v / (2 * x))
                if self.mul(cand, cand) == (u, v):
                    return cand if self.sign(cand) >= 0 else self.neg(cand)
        return None

    def coerce(self, x):
        if isinstance(x, tuple):
            return (mpq(x[0]), mpq(x[1]))
        return (mpq(x), mpq(0))

    def parse(self, lit):
        if isinstance(lit, list):
            if len(lit) != 2:
                raise ValueError(f"quadratic literal needs [u, v], got {lit!r}")
            return (parse_fraction(lit[0]), parse_fraction(lit[1]))
        return (parse_fraction(lit), mpq(0))

    def format(self, a):
        if not a[1]:
            return format_fraction(a[0])
        return [format_fraction(a[0]), format_fraction(a[1])]

    def random(self, rng, bound=10):
        q = Rationals()
        return (q.random(rng, bound), q.random(rng, bound))

    def to_complex(self, a):
        return complex(float(a[0]) + float(a[1]) * self.d ** 0.5)

    def descriptor(self):
        return {"kind": "quadratic", "d": self.d}

    def __str__(self):
        return f"Q(sqrt{self.d})"


@dataclass(frozen=True)
class PrimeField(BaseField):
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def from_int(self, n):
        return n % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def is_zero(self, a):
        return a == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def sqrt(self, a):
        for x in range(self.p):
            if x * x % self.p == a:
                return x
        return None

    def coerce(self, x):
        if isinstance(x, RATIONAL_TYPES) and not isinstance(x, int):
            return int(x.numerator) * pow(int(x.denominator), -1, self.p) % self.p
        return int(x) % self.p

    def parse(self, lit):
        if isinstance(lit, bool) or not isinstance(lit, int):
            raise ValueError(f"GF({self.p}) literal must be an integer, got {lit!r}")
        return lit % self.p

    def format(self, a):
        return a

    def random(self, rng, bound=10):
        return rng.randrange(self.p)

    def descriptor(self):
        return {"kind": "gf", "p": self.p}

    def __str__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class ComplexExtension(BaseField):
    """K(i) with i^2 = -1 over an ordered field K; values are pairs (re, im)."""

    base: BaseField

    def __post_init__(self):
        if not self.base.ordered:
            raise ValueError("complex extension needs an ordered (real) base field")

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero)

    def is_zero(self, a):
        return self.base.is_zero(a[0]) and self.base.is_zero(a[1])

    def add(self, a, b):
        k = self.base
        return (k.add(a[0], b[0]), k.add(a[1], b[1]))

    def sub(self, a, b):
        k = self.base
        return (k.sub(a[0], b[0]), k.sub(a[1], b[1]))

    def neg(self, a):
        k = self.base
        return (k.neg(a[0]), k.neg(a[1]))

    def mul(self, a, b):
        k = self.base
        re = k.sub(k.mul(a[0], b[0]), k.mul(a[1], b[1]))
        im = k.add(k.mul(a[0], b[1]), k.mul(a[1], b[0]))
        return (re, im)

    def abs_sq(self, a):
        k = self.base
        return k.add(k.mul(a[0], a[0]), k.mul(a[1], a[1]))

    def inv(self, a):
        k = self.base
        n = self.abs_sq(a)
        if k.is_zero(n):
            raise ZeroDivisionError("inverse of zero")
        ni = k.inv(n)
        return (k.mul(a[0], ni), k.neg(k.mul(a[1], ni)))

    def conj(self, a):
        return (a[0], self.base.neg(a[1]))

    def coerce(self, x):
        return (self.base.coerce(x), self.base.zero)

    def make(self, re, im):
        return (self.base.coerce(re), self.base.coerce(im))

    def parse(self, lit):
        if not isinstance(lit, list) or len(lit) != 2:
            raise ValueError(f"complex literal needs [re, im], got {lit!r}")
        return (self.base.parse(lit[0]), self.base.parse(lit[1]))

    def format(self, a):
        return [self.base.format(a[0]), self.base.format(a[1])]

    def random(self, rng, bound=10):
        return (self.base.random(rng, bound), self.base.random(rng, bound))

    def to_complex(self, a):
        return self.base.to_complex(a[0]) + 1j * self.base.to_complex(a[1])

    def descriptor(self):
        return {"kind": "complex", "base": self.base.descriptor()}

    def __str__(self):
        return f"{self.base}(i)"


QQ = Rationals()
GAUSSIAN = ComplexExtension(QQ)


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(desc: Any) -> BaseField:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ValueError(f"field descriptor must be an object with 'kind', got {desc!r}")
    kind = desc["kind"]
    allowed = {"rationals": {"kind"}, "quadratic": {"kind", "d"}, "gf": {"kind", "p"},
               "complex": {"kind", "base"}}
    if kind not in allowed:
        raise ValueError(f"unknown field kind {kind!r}")
    extra = set(desc) - allowed[kind]
    if extra:
        raise ValueError(f"unknown keys in field descriptor: {sorted(extra)}")
    if kind == "rationals":
        return QQ
    if kind == "quadratic":
        return QuadraticField(int(desc["d"]))
    if kind == "gf":
        return PrimeField(int(desc["p"]))
    return ComplexExtension(field_from_descriptor(desc["base"]))
