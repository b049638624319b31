"""Labelled matrices over the rings of :mod:`skewchain.rings`.

Rows and columns carry labels (the ``X x Y`` convention); submatrices are
taken by label.  Inversion goes through the left-regular representation so
it is decisive over every supported ring, including ones with zero divisors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from . import linalg
from .fields import BaseField
from .linalg import NotInvertible
from .rings import Ring, RingElement, RingMismatch, field_ring, matrix_ring

Label = Hashable

__all__ = [
    "RMatrix", "NotInvertible", "pivot", "invert", "is_invertible", "unwrap", "wrap", "det",
    "regular_representation",
]


@dataclass(frozen=True, eq=False)
class RMatrix:
    ring: Ring
    rows: tuple
    cols: tuple
    entries: tuple  # tuple of row tuples of RingElement

    def __post_init__(self):
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            raise ValueError("duplicate row or column labels")
        if len(self.entries) != len(self.rows):
            raise ValueError("row count does not match labels")
        for row in self.entries:
            if len(row) != len(self.cols):
                raise ValueError("column count does not match labels")
            for x in row:
                if x.ring != self.ring:
                    raise RingMismatch(f"entry over {x.ring} in a matrix over {self.ring}")

    # -- construction ----------------------------------------------------------

    @classmethod
    def build(cls, ring: Ring, grid, rows: Sequence | None = None, cols: Sequence | None = None):
        """Build from nested lists of RingElements or scalars; labels default to 1..n."""
        grid = [[ring(x) for x in row] for row in grid]
        nr = len(grid)
        nc = len(grid[0]) if grid else (len(cols) if cols is not None else 0)
        rows = tuple(rows) if rows is not None else tuple(range(1, nr + 1))
        cols = tuple(cols) if cols is not None else tuple(range(1, nc + 1))
        return cls(ring, rows, cols, tuple(tuple(r) for r in grid))

    @classmethod
    def identity(cls, ring: Ring, labels: Sequence, cols: Sequence | None = None):
        labels = tuple(labels)
        cols = labels if cols is None else tuple(cols)
        one, zero = ring.one, ring.zero
        return cls(ring, labels, cols,
                   tuple(tuple(one if r == c else zero for c in cols) for r in labels))

    @classmethod
    def zeros(cls, ring: Ring, rows: Sequence, cols: Sequence):
        z = ring.zero
        return cls(ring, tuple(rows), tuple(cols), tuple(tuple(z for _ in cols) for _ in rows))

    # -- access ---------------------------------------------------------------------

    @cached_property
    def _row_index(self):
        return {r: i for i, r in enumerate(self.rows)}

    @cached_property
    def _col_index(self):
        return {c: i for i, c in enumerate(self.cols)}

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def __getitem__(self, key) -> RingElement:
        r, c = key
        return self.entries[self._row_index[r]][self._col_index[c]]

    def row(self, r) -> dict:
        return dict(zip(self.cols, self.entries[self._row_index[r]]))

    def column(self, c) -> dict:
        j = self._col_index[c]
        return {r: row[j] for r, row in zip(self.rows, self.entries)}

    def sub(self, rows: Iterable | None = None, cols: Iterable | None = None) -> "RMatrix":
        """The submatrix A[rows, cols], keeping the given label order."""
        rows = self.rows if rows is None else tuple(rows)
        cols = self.cols if cols is None else tuple(cols)
        try:
            ri = [self._row_index[r] for r in rows]
            ci = [self._col_index[c] for c in cols]
        except KeyError as exc:
            raise KeyError(f"unknown label {exc.args[0]!r}") from None
        return RMatrix(self.ring, rows, cols,
                       tuple(tuple(self.entries[i][j] for j in ci) for i in ri))

    def relabel(self, rows: Sequence | None = None, cols: Sequence | None = None) -> "RMatrix":
        return RMatrix(self.ring, self.rows if rows is None else tuple(rows),
                       self.cols if cols is None else tuple(cols), self.entries)

    def transpose(self) -> "RMatrix":
        return RMatrix(self.ring, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows
                       else tuple(() for _ in self.cols))

    def conjugate_transpose(self) -> "RMatrix":
        t = self.transpose()
        return t.map(lambda x: x.conjugate())

    def map(self, fn, ring: Ring | None = None) -> "RMatrix":
        ring = self.ring if ring is None else ring
        return RMatrix(ring, self.rows, self.cols,
                       tuple(tuple(fn(x) for x in row) for row in self.entries))

    def to_op(self) -> "RMatrix":
        return self.map(lambda x: x.to_op(), self.ring.op())

    def hstack(self, other: "RMatrix") -> "RMatrix":
        if other.rows != self.rows:
            raise ValueError("row labels differ")
        return RMatrix(self.ring, self.rows, self.cols + other.cols,
                       tuple(a + b for a, b in zip(self.entries, other.entries)))

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "RMatrix") -> "RMatrix":
        self._check_same_shape(other)
        return RMatrix(self.ring, self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        self._check_same_shape(other)
        return RMatrix(self.ring, self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)))

    def __neg__(self):
        return self.map(lambda x: -x)

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} times {other.ring}")
        if len(self.cols) != len(other.rows):
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = self.ring.zero
        out = []
        ocols = list(zip(*other.entries)) if other.rows else [() for _ in other.cols]
        for row in self.entries:
            new = []
            for col in ocols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new.append(acc)
            out.append(tuple(new))
        return RMatrix(self.ring, self.rows, other.cols, tuple(out))

    def _check_same_shape(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def same_entries(self, other: "RMatrix") -> bool:
        """Equal as label-indexed arrays, ignoring the order of labels."""
        if set(self.rows) != set(other.rows) or set(self.cols) != set(other.cols):
            return False
        return self == other.sub(self.rows, self.cols)

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "\n".join(
            f"  {r!s:>6}: " + "  ".join(f"{x!s:>8}" for x in row)
            for r, row in zip(self.rows, self.entries))
        head = "          " + "  ".join(f"{c!s:>8}" for c in self.cols)
        return f"RMatrix over {self.ring}\n{head}\n{body}"


def pivot(A: RMatrix, x, y) -> RMatrix:
    """Pivot over the entry (x, y), which must be a unit.

    Row label x is replaced by y and column label y by x, in place.
    """
    alpha = A[x, y]
    try:
        ainv = alpha.inverse()
    except NotInvertible:
        raise NotInvertible(f"pivot entry A[{x!r},{y!r}] = {alpha} is not a unit") from None
    xi, yi = A._row_index[x], A._col_index[y]
    xrow = A.entries[xi]
    top = tuple(ainv if j == yi else ainv * v for j, v in enumerate(xrow))
    out = []
    for i, row in enumerate(A.entries):
        if i == xi:
            out.append(top)
            continue
        b = row[yi]
        if not b:
            out.append(row)
            continue
        bainv = b * ainv
        out.append(tuple(
            -bainv if j == yi else (v - bainv * xrow[j] if xrow[j] else v)
            for j, v in enumerate(row)))
    rows = tuple(y if r == x else r for r in A.rows)
    cols = tuple(x if c == y else c for c in A.cols)
    return RMatrix(A.ring, rows, cols, tuple(out))


def regular_representation(A: RMatrix):
    """Block matrix over the base field whose (a, b) block is L(A[a, b])."""
    ring = A.ring
    m = ring.dim
    F = ring.field
    nr, nc = A.shape
    big = [[F.zero] * (nc * m) for _ in range(nr * m)]
    for a, row in enumerate(A.entries):
        for b, x in enumerate(row):
            if not x:
                continue
            L = ring.left_regular(x.coords)
            for c in range(m):
                target = big[a * m + c]
                for d in range(m):
                    target[b * m + d] = L[c][d]
    return big


def invert(A: RMatrix) -> RMatrix:
    """Two-sided inverse; rows of the result are labelled by A's columns and vice versa."""
    nr, nc = A.shape
    if nr != nc:
        raise NotInvertible(f"non-square {nr}x{nc} matrix")
    ring, F, m = A.ring, A.ring.field, A.ring.dim
    if ring.kind in ("integers", "dyadic"):
        inv = linalg.inverse(F, [[x.coords[0] for x in row] for row in A.entries])
        try:
            grid = [[ring.element((v,)) for v in row] for row in inv]
        except ValueError:
            raise NotInvertible(f"inverse leaves {ring}") from None
        return RMatrix(ring, A.cols, A.rows, tuple(tuple(r) for r in grid))
    if m == 1:
        inv = linalg.inverse(F, [[x.coords[0] for x in row] for row in A.entries])
        return RMatrix(ring, A.cols, A.rows,
                       tuple(tuple(ring.element((v,)) for v in row) for row in inv))
    big_inv = linalg.inverse(F, regular_representation(A))
    # each block of L(A)^{-1} is L(b) for the matching entry b of A^{-1};
    # b's coordinates are that block applied to the coordinates of 1
    one = ring.one.coords
    nz = [d for d, v in enumerate(one) if not F.is_zero(v)]
    grid = []
    for a in range(nr):
        row = []
        for b in range(nr):
            coords = []
            for c in range(m):
                acc = F.zero
                line = big_inv[a * m + c]
                for d in nz:
                    acc = F.add(acc, F.mul(line[b * m + d], one[d]))
                coords.append(acc)
            row.append(ring.element(coords))
        grid.append(tuple(row))
    return RMatrix(ring, A.cols, A.rows, tuple(grid))


def is_invertible(A: RMatrix) -> bool:
    nr, nc = A.shape
    if nr != nc:
        return False
    if nr == 0:
        return True
    ring, F = A.ring, A.ring.field
    if ring.kind in ("integers", "dyadic"):
        try:
            invert(A)
            return True
        except NotInvertible:
            return False
    if ring.dim == 1:
        return linalg.rank(F, [[x.coords[0] for x in row] for row in A.entries]) == nr
    if ring.is_division_ring:
        return _division_ring_rank(A) == nr
    return linalg.rank(F, regular_representation(A)) == nr * ring.dim


def _division_ring_rank(A: RMatrix) -> int:
    # every nonzero entry is a unit, so left row reduction never stalls
    rows = [list(r) for r in A.entries]
    ncols = len(A.cols)
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        prow = rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [v - f * w if w else v for v, w in zip(rows[i], prow)]
        r += 1
        if r == len(rows):
            break
    return r


def det(A: RMatrix):
    """Determinant over a commutative ring, returned as a base-field value."""
    if not A.ring.is_commutative:
        raise TypeError(f"determinant over noncommutative {A.ring}")
    return linalg.det(A.ring.field, [[x.coords[0] for x in row] for row in A.entries])


def _block_labels(labels, n):
    return tuple((lab, c) for lab in labels for c in range(1, n + 1))


def unwrap(A: RMatrix) -> RMatrix:
    """The unwrapping z_n: an r x s matrix over M(n, F) becomes rn x sn over F.

    Labels become pairs (label, index) with index 1..n.
    """
    if A.ring.kind != "matrix":
        raise TypeError(f"unwrap needs a matrix ring, not {A.ring}")
    n, F = A.ring.n, A.ring.field
    target = field_ring(F)
    nr, nc = A.shape
    grid = [[None] * (nc * n) for _ in range(nr * n)]
    for a, row in enumerate(A.entries):
        for b, x in enumerate(row):
            for c in range(n):
                for d in range(n):
                    grid[a * n + c][b * n + d] = target.element((x.coords[c * n + d],))
    return RMatrix(target, _block_labels(A.rows, n), _block_labels(A.cols, n),
                   tuple(tuple(r) for r in grid))


def _wrapped_labels(labels, n):
    groups = [labels[i:i + n] for i in range(0, len(labels), n)]
    if all(
        isinstance(l, tuple) and len(l) == 2 and l[0] == g[0][0] and l[1] == c
        for g in groups for c, l in enumerate(g, start=1)
    ):
        return tuple(g[0][0] for g in groups)
    return tuple(range(1, len(groups) + 1))


def wrap(n: int, D: RMatrix) -> RMatrix:
    """Inverse of :func:`unwrap`."""
    if not D.ring.is_commutative or D.ring.kind != "field":
        raise TypeError(f"wrap needs a matrix over a field, not {D.ring}")
    nr, nc = D.shape
    if nr % n or nc % n:
        raise ValueError(f"{nr}x{nc} matrix cannot be wrapped with block size {n}")
    F = D.ring.field
    target = matrix_ring(n, F)
    grid = []
    for a in range(nr // n):
        row = []
        for b in range(nc // n):
            row.append(target.element(
                D.entries[a * n + c][b * n + d].coords[0] for c in range(n) for d in range(n)))
        grid.append(tuple(row))
    return RMatrix(target, _wrapped_labels(D.rows, n), _wrapped_labels(D.cols, n), tuple(grid))


def field_matrix(A: RMatrix):
    """Raw base-field rows of a matrix over a one-dimensional ring."""
    if A.ring.dim != 1:
        raise TypeError(f"{A.ring} is not one-dimensional")
    return [[x.coords[0] for x in row] for row in A.entries]


def from_field_rows(F: BaseField, rows, row_labels=None, col_labels=None) -> RMatrix:
    ring = field_ring(F)
    grid = [[ring.element((v,)) for v in r] for r in rows]
    return RMatrix.build(ring, grid, row_labels, col_labels)
