"""Rings as finite-dimensional algebras over a base field, and skew partial fields.

Every ring is stored as a base field plus a multiplication table on a fixed
basis (``1, i, j, k`` for quaternions, the unit matrices ``E_ab`` for
``M(n, F)``).  Elements are coordinate tuples in that basis.  Units are
detected through the left-regular representation, so the same code decides
invertibility in the quaternions, in ``M(n, F)`` and in ``GF(3)[i, j, k]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache, lru_cache
from typing import Any

from . import linalg
from .fields import QQ, RATIONAL_TYPES, BaseField, PrimeField, field_from_descriptor
from .linalg import NotInvertible

# (a, b, c, sign): e_a * e_b = sign * e_c
_QUATERNION_TABLE = (
    (0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1),
    (1, 0, 1, 1), (1, 1, 0, -1), (1, 2, 3, 1), (1, 3, 2, -1),
    (2, 0, 2, 1), (2, 1, 3, -1), (2, 2, 0, -1), (2, 3, 1, 1),
    (3, 0, 3, 1), (3, 1, 2, 1), (3, 2, 1, -1), (3, 3, 0, -1),
)

RING_KINDS = ("field", "integers", "dyadic", "quaternions", "matrix")


class RingMismatch(TypeError):
    pass


@dataclass(frozen=True)
class Ring:
    """Ring descriptor.

    ``integers`` and ``dyadic`` are the subrings Z and Z[1/2] of Q, stored as
    rationals that must satisfy a denominator condition.
    """

    kind: str
    field: BaseField = QQ
    n: int = 1
    opposite: bool = False

    def __post_init__(self):
        if self.kind not in RING_KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind in ("integers", "dyadic") and self.field != QQ:
            raise ValueError(f"{self.kind} ring lives inside the rationals")
        if self.kind == "matrix" and self.n < 1:
            raise ValueError("matrix ring needs n >= 1")

    # -- structure -------------------------------------------------------

    @property
    def dim(self) -> int:
        if self.kind == "quaternions":
            return 4
        if self.kind == "matrix":
            return self.n * self.n
        return 1

    @property
    def is_commutative(self) -> bool:
        return self.dim == 1

    @property
    def is_division_ring(self) -> bool:
        """Every nonzero element is a unit (fields, and quaternions over an ordered field)."""
        if self.kind == "field":
            return True
        return self.kind == "quaternions" and self.field.ordered

    @property
    def is_gf3_quaternions(self) -> bool:
        return self.kind == "quaternions" and self.field == PrimeField(3)

    def table(self):
        return _table(self)

    def op(self) -> "Ring":
        """The opposite ring: same carrier, reversed multiplication."""
        return Ring(self.kind, self.field, self.n, not self.opposite)

    # -- element construction -------------------------------------------

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, (self.field.zero,) * self.dim)

    @property
    def one(self) -> "RingElement":
        return self.scalar(1)

    def scalar(self, x) -> "RingElement":
        F = self.field
        v = F.coerce(x)
        if self.kind == "matrix":
            coords = [F.zero] * self.dim
            for a in range(self.n):
                coords[a * self.n + a] = v
            return self.element(coords)
        return self.element((v,) + (F.zero,) * (self.dim - 1))

    def element(self, coords) -> "RingElement":
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError(f"{self} needs {self.dim} coordinates, got {len(coords)}")
        if self.kind == "integers" and any(c.denominator != 1 for c in coords):
            raise ValueError(f"{coords[0]} is not an integer")
        if self.kind == "dyadic" and any(not _is_power_of_two(c.denominator) for c in coords):
            raise ValueError(f"{coords[0]} is not a dyadic rational")
        return RingElement(self, coords)

    def quat(self, a, b=0, c=0, d=0) -> "RingElement":
        if self.kind != "quaternions":
            raise TypeError(f"{self} is not a quaternion ring")
        F = self.field
        return self.element((F.coerce(a), F.coerce(b), F.coerce(c), F.coerce(d)))

    def mat(self, rows) -> "RingElement":
        if self.kind != "matrix":
            raise TypeError(f"{self} is not a matrix ring")
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"expected a {self.n}x{self.n} block")
        return self.element(self.field.coerce(v) for r in rows for v in r)

    def __call__(self, x) -> "RingElement":
        if isinstance(x, RingElement):
            if x.ring != self:
                raise RingMismatch(f"{x.ring} element given to {self}")
            return x
        return self.scalar(x)

    # -- arithmetic on coordinates ----------------------------------------

    def mul_coords(self, x, y):
        F = self.field
        if self.dim == 1:
            return (F.mul(x[0], y[0]),)
        out = [F.zero] * self.dim
        for a, b, c, s in self.table():
            xa = x[a]
            if F.is_zero(xa):
                continue
            yb = y[b]
            if F.is_zero(yb):
                continue
            t = F.mul(xa, yb)
            out[c] = F.add(out[c], t) if s > 0 else F.sub(out[c], t)
        return tuple(out)

    def left_regular(self, x):
        """Matrix of y -> x*y over the base field (columns indexed by y's coordinates)."""
        F = self.field
        m = self.dim
        L = [[F.zero] * m for _ in range(m)]
        for a, b, c, s in self.table():
            if F.is_zero(x[a]):
                continue
            L[c][b] = F.add(L[c][b], x[a]) if s > 0 else F.sub(L[c][b], x[a])
        return L

    def is_unit(self, x: "RingElement") -> bool:
        return _inverse_coords(self, x.coords) is not None

    # -- misc ----------------------------------------------------------------

    def descriptor(self) -> dict:
        if self.is_gf3_quaternions:
            d: dict[str, Any] = {"kind": "gf3-quaternions"}
        elif self.kind in ("integers", "dyadic"):
            d = {"kind": self.kind}
        elif self.kind == "matrix":
            d = {"kind": "matrix", "n": self.n, "field": self.field.descriptor()}
        else:
            d = {"kind": self.kind, "field": self.field.descriptor()}
        if self.opposite:
            d["opposite"] = True
        return d

    def __str__(self):
        base = {
            "field": str(self.field),
            "integers": "Z",
            "dyadic": "Z[1/2]",
            "quaternions": f"H({self.field})",
            "matrix": f"M({self.n},{self.field})",
        }[self.kind]
        if self.is_gf3_quaternions:
            base = "GF(3)[i,j,k]"
        return base + ("^op" if self.opposite else "")


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


@cache
def _table(ring: Ring):
    if ring.kind == "quaternions":
        t = _QUATERNION_TABLE
    elif ring.kind == "matrix":
        n = ring.n
        t = tuple(
            (a * n + b, b * n + d, a * n + d, 1)
            for a in range(n) for b in range(n) for d in range(n)
        )
    else:
        t = ((0, 0, 0, 1),)
    if ring.opposite:
        t = tuple((b, a, c, s) for a, b, c, s in t)
    return t


@lru_cache(maxsize=65536)
def _inverse_coords(ring: Ring, coords):
    """Two-sided inverse via the left-regular representation, or None."""
    F = ring.field
    if ring.kind in ("integers", "dyadic"):
        (c,) = coords
        if not c:
            return None
        inv = 1 / c
        ok = (abs(c.numerator) == 1 and c.denominator == 1 if ring.kind == "integers"
              else _is_power_of_two(abs(c.numerator)) and _is_power_of_two(c.denominator))
        return (inv,) if ok else None
    if ring.dim == 1:
        return None if F.is_zero(coords[0]) else (F.inv(coords[0]),)
    try:
        Linv = linalg.inverse(F, ring.left_regular(coords))
    except NotInvertible:
        return None
    # L(x)^{-1} = L(x^{-1}); applying it to the coordinates of 1 recovers x^{-1}
    one = ring.one.coords
    return tuple(
        _dot(F, row, one) for row in Linv
    )


def _dot(F, row, vec):
    acc = F.zero
    for a, b in zip(row, vec):
        if not F.is_zero(a) and not F.is_zero(b):
            acc = F.add(acc, F.mul(a, b))
    return acc


@dataclass(frozen=True)
class RingElement:
    ring: Ring
    coords: tuple

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine {self.ring} with {other.ring}")
            return other
        if isinstance(other, RATIONAL_TYPES):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        return RingElement(self.ring, tuple(F.add(a, b) for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return RingElement(self.ring, tuple(F.neg(a) for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        return RingElement(self.ring, tuple(F.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.mul_coords(self.coords, other.coords))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.mul_coords(other.coords, self.coords))

    def __bool__(self):
        F = self.ring.field
        return not all(F.is_zero(c) for c in self.coords)

    def is_zero(self) -> bool:
        return not self

    def is_unit(self) -> bool:
        return self.ring.is_unit(self)

    def inverse(self) -> "RingElement":
        inv = _inverse_coords(self.ring, self.coords)
        if inv is None:
            raise NotInvertible(f"{self} is not a unit of {self.ring}")
        return RingElement(self.ring, inv)

    def conjugate(self) -> "RingElement":
        """Quaternion conjugate a - bi - cj - dk."""
        if self.ring.kind != "quaternions":
            raise TypeError(f"conjugate needs a quaternion ring, not {self.ring}")
        F = self.ring.field
        a, b, c, d = self.coords
        return RingElement(self.ring, (a, F.neg(b), F.neg(c), F.neg(d)))

    def norm_sq(self):
        """|p|^2 = a^2 + b^2 + c^2 + d^2, a base-field value."""
        if self.ring.kind != "quaternions":
            raise TypeError(f"norm needs a quaternion ring, not {self.ring}")
        F = self.ring.field
        acc = F.zero
        for c in self.coords:
            acc = F.add(acc, F.mul(c, c))
        return acc

    def to_op(self) -> "RingElement":
        """The same element read in the opposite ring."""
        return RingElement(self.ring.op(), self.coords)

    def literal(self):
        return format_element(self)

    def __repr__(self):
        return f"{format_element(self)!r}@{self.ring}"

    def __str__(self):
        F = self.ring.field
        if self.ring.kind == "quaternions":
            parts = []
            for c, unit in zip(self.coords, ("", "i", "j", "k")):
                if F.is_zero(c):
                    continue
                parts.append(f"{F.format(c)}{unit}")
            return "+".join(str(p) for p in parts) or "0"
        return str(format_element(self))


def opposite(ring: Ring) -> Ring:
    return ring.op()


def opposite_transfer(x: RingElement) -> RingElement:
    return x.to_op()


# -- literals -----------------------------------------------------------------


def parse_element(ring: Ring, lit: Any) -> RingElement:
    F = ring.field
    if ring.kind == "quaternions":
        if not isinstance(lit, list) or len(lit) != 4:
            raise ValueError(f"quaternion literal must be [a, b, c, d], got {lit!r}")
        return ring.element(F.parse(v) for v in lit)
    if ring.kind == "matrix":
        if not isinstance(lit, list) or len(lit) != ring.n or any(
            not isinstance(r, list) or len(r) != ring.n for r in lit
        ):
            raise ValueError(f"matrix-ring literal must be a {ring.n}x{ring.n} array, got {lit!r}")
        return ring.element(F.parse(v) for r in lit for v in r)
    return ring.element((F.parse(lit),))


def format_element(x: RingElement):
    ring, F = x.ring, x.ring.field
    if ring.kind == "quaternions":
        return [F.format(c) for c in x.coords]
    if ring.kind == "matrix":
        n = ring.n
        return [[F.format(x.coords[a * n + b]) for b in range(n)] for a in range(n)]
    return F.format(x.coords[0])


def ring_from_descriptor(desc: Any) -> Ring:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ValueError(f"ring descriptor must be an object with 'kind', got {desc!r}")
    kind = desc["kind"]
    allowed = {
        "field": {"field"}, "integers": set(), "dyadic": set(), "quaternions": {"field"},
        "matrix": {"n", "field"}, "gf3-quaternions": set(),
    }
    if kind not in allowed:
        raise ValueError(f"unknown ring kind {kind!r}")
    extra = set(desc) - allowed[kind] - {"kind", "opposite"}
    if extra:
        raise ValueError(f"unknown keys in ring descriptor: {sorted(extra)}")
    if kind == "gf3-quaternions":
        ring = gf3_quaternions()
    elif kind in ("integers", "dyadic"):
        ring = Ring(kind)
    elif kind == "matrix":
        ring = Ring("matrix", field_from_descriptor(desc["field"]), int(desc["n"]))
    else:
        ring = Ring(kind, field_from_descriptor(desc["field"]))
    return ring.op() if desc.get("opposite") else ring


# -- common rings ---------------------------------------------------------------


def field_ring(F: BaseField = QQ) -> Ring:
    return Ring("field", F)


def quaternions(F: BaseField = QQ) -> Ring:
    return Ring("quaternions", F)


def matrix_ring(n: int, F: BaseField = QQ) -> Ring:
    return Ring("matrix", F, n)


def gf3_quaternions() -> Ring:
    return Ring("quaternions", PrimeField(3))


# -- partial fields -----------------------------------------------------------------

GROUP_KINDS = ("units", "signs", "dyadic", "norm-one", "generated")


@dataclass(frozen=True)
class PartialField:
    """A skew partial field (R, G); ``group`` names how membership in G is decided."""

    ring: Ring
    group: str = "units"
    generators: tuple = field(default=())

    def __post_init__(self):
        if self.group not in GROUP_KINDS:
            raise ValueError(f"unknown group kind {self.group!r}")
        if self.group == "norm-one" and self.ring.kind != "quaternions":
            raise ValueError("norm-one group needs a quaternion ring")
        if self.group == "dyadic" and self.ring.dim != 1:
            raise ValueError("dyadic group needs a commutative rational ring")
        if self.group == "generated":
            for g in self.generators:
                if g.ring != self.ring:
                    raise RingMismatch("generator from another ring")

    def contains(self, x: RingElement) -> bool:
        """Membership of x in the group G."""
        if x.ring != self.ring:
            raise RingMismatch(f"{x.ring} element tested against {self.ring}")
        if not x:
            return False
        g = self.group
        if g == "units":
            return x.is_unit()
        if g == "signs":
            return x == self.ring.one or x == -self.ring.one
        if g == "dyadic":
            c = x.coords[0]
            return _is_power_of_two(abs(c.numerator)) and _is_power_of_two(c.denominator)
        if g == "norm-one":
            F = self.ring.field
            return x.norm_sq() == F.one
        return x.coords in _generated_group(self.ring, tuple(g.coords for g in self.generators))

    def is_element(self, x: RingElement) -> bool:
        """p in G or p = 0."""
        return not x or self.contains(x)

    def op(self) -> "PartialField":
        gens = tuple(g.to_op() for g in self.generators)
        return PartialField(self.ring.op(), self.group, gens)

    def descriptor(self) -> dict:
        d: dict[str, Any] = {"kind": self.group}
        if self.group == "generated":
            d["generators"] = [format_element(g) for g in self.generators]
        return d

    def __str__(self):
        return f"({self.ring}, {self.group})"


def in_group(pf: PartialField, x: RingElement) -> bool:
    return pf.contains(x)


def is_fundamental(pf: PartialField, p: RingElement) -> bool:
    """p is fundamental when 1 - p is also an element of the partial field."""
    if not pf.is_element(p):
        raise ValueError(f"{p} is not an element of {pf}")
    return pf.is_element(pf.ring.one - p)


@cache
def _generated_group(ring: Ring, gens, limit: int = 100000):
    one = ring.one.coords
    minus_one = (-ring.one).coords
    seen = {one, minus_one}
    frontier = list(seen)
    gens = list(gens) + [minus_one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = ring.mul_coords(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise ValueError("generated group is too large to enumerate")
        frontier = nxt
    return frozenset(seen)


def partial_field_from_descriptor(ring: Ring, desc: Any) -> PartialField:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ValueError(f"group descriptor must be an object with 'kind', got {desc!r}")
    kind = desc["kind"]
    extra = set(desc) - {"kind", "generators"}
    if extra or ("generators" in desc and kind != "generated"):
        raise ValueError(f"unknown keys in group descriptor: {sorted(set(desc) - {'kind'})}")
    gens = tuple(parse_element(ring, g) for g in desc.get("generators", ()))
    return PartialField(ring, kind, gens)


# -- named partial fields ---------------------------------------------------------------


def regular() -> PartialField:
    return PartialField(Ring("integers"), "signs")


def dyadic() -> PartialField:
    return PartialField(Ring("dyadic"), "dyadic")


def matrix_partial_field(n: int, F: BaseField = QQ) -> PartialField:
    """P(n, F) = (M(n, F), GL(n, F))."""
    return PartialField(matrix_ring(n, F), "units")


def quaternionic_unimodular(F: BaseField = QQ) -> PartialField:
    return PartialField(quaternions(F), "norm-one")


def gf3_quaternion_partial_field() -> PartialField:
    return PartialField(gf3_quaternions(), "units")
