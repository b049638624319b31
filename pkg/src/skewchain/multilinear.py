"""n-multilinear representations and their correspondence with P(n, F)-matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import linalg
from .chaingroup import ChainGroupRep, Verdict, to_strong, verify_strong
from .fields import BaseField
from .matrixlab import RMatrix, unwrap, wrap
from .matroid import Matroid
from .rings import matrix_partial_field


class MultilinearError(ValueError):
    pass


@dataclass(frozen=True)
class MultilinearRep:
    """Each element e gets an (n r) x n matrix whose columns span V(e)."""

    field: BaseField
    n: int
    blocks: Mapping  # element -> list of rows (raw field values)

    def __post_init__(self):
        dims = {len(b) for b in self.blocks.values()}
        if len(dims) > 1:
            raise MultilinearError(f"blocks have different heights {sorted(dims)}")
        for e, b in self.blocks.items():
            if any(len(row) != self.n for row in b):
                raise MultilinearError(f"block of {e!r} is not {self.n} columns wide")

    @property
    def ground(self) -> tuple:
        return tuple(self.blocks)

    @property
    def ambient(self) -> int:
        return len(next(iter(self.blocks.values()))) if self.blocks else 0

    def span_dim(self, X) -> int:
        cols = []
        for e in X:
            cols.extend(zip(*self.blocks[e]))
        if not cols:
            return 0
        return linalg.rank(self.field, cols)


def _gray_order(n: int):
    """Subsets of range(n) as bitmasks, each differing from the previous by one element."""
    for i in range(1 << n):
        yield i ^ (i >> 1)


def check_multilinear(rep: MultilinearRep, M: Matroid) -> Verdict:
    """dim(sum of V(e), e in X) = n r_M(X) for every X; the first failing X is reported."""
    if set(rep.ground) != set(M.ground):
        return Verdict(False, reason="ground sets differ")
    if rep.ambient != rep.n * M.rank:
        return Verdict(False, reason=f"ambient dimension {rep.ambient} is not n r = {rep.n * M.rank}")
    for e in rep.ground:
        if rep.span_dim([e]) != rep.n:
            return Verdict(False, reason=f"V({e!r}) has dimension below {rep.n}",
                           detail={"element": e})
    ground = M.ground
    for mask in _gray_order(len(ground)):
        X = M.sorted_elements(mask)
        want = rep.n * M.rank_of(mask)
        got = rep.span_dim(X)
        if got != want:
            return Verdict(False, reason=f"dim {got} != {want}", detail={"subset": X})
    return Verdict(True, detail={"subsets": 1 << len(ground)})


def from_matrix(A: RMatrix) -> MultilinearRep:
    """Column blocks of z_n(A)."""
    if A.ring.kind != "matrix":
        raise MultilinearError(f"need a matrix over M(n, F), got {A.ring}")
    n = A.ring.n
    Z = unwrap(A)
    blocks = {}
    for e in A.cols:
        idx = [Z._col_index[(e, c)] for c in range(1, n + 1)]
        blocks[e] = [[row[j].coords[0] for j in idx] for row in Z.entries]
    return MultilinearRep(A.ring.field, n, blocks)


def to_matrix(rep: MultilinearRep) -> ChainGroupRep:
    """Wrap the assembled block matrix and check it is a P(n, F)-matrix after pivoting."""
    n, F = rep.n, rep.field
    if rep.ambient % n:
        raise MultilinearError(f"ambient dimension {rep.ambient} is not a multiple of {n}")
    from .matrixlab import from_field_rows

    rows = [[] for _ in range(rep.ambient)]
    for e in rep.ground:
        for i, line in enumerate(rep.blocks[e]):
            rows[i].extend(line)
    D = from_field_rows(F, rows,
                        [(r, c) for r in range(1, rep.ambient // n + 1) for c in range(1, n + 1)],
                        [(e, c) for e in rep.ground for c in range(1, n + 1)])
    A = wrap(n, D)
    pf = matrix_partial_field(n, F)
    strong = to_strong(ChainGroupRep(pf, A, "weak"))
    verdict = verify_strong(strong.reduced, pf)
    if not verdict:
        raise MultilinearError(f"wrapped matrix is not a P({n}, {F})-matrix: {verdict.reason}")
    return strong
