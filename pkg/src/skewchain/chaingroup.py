"""Chain groups given by generator matrices over a skew partial field.

A :class:`ChainGroupRep` wraps an ``X x E`` generator matrix. In *strong* form the
columns ``X`` hold an identity block, so the matrix is ``[I D]`` up to column order
and ``D = A[X, E - X]`` is what pivoting acts on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Hashable, Iterable, Mapping

from .fields import ComplexExtension, PrimeField
from .matrixlab import NotInvertible, RMatrix, invert, is_invertible, pivot
from .matroid import Matroid, direct_sum
from .rings import (
    PartialField,
    Ring,
    RingElement,
    field_ring,
    matrix_ring,
)

ENUMERATION_LIMIT = 20000


class ChainGroupError(ValueError):
    pass


@dataclass(frozen=True)
class ChainGroupRep:
    pf: PartialField
    matrix: RMatrix
    form: str = "weak"

    def __post_init__(self):
        if self.form not in ("weak", "strong"):
            raise ValueError(f"form must be weak or strong, got {self.form!r}")
        if self.matrix.ring != self.pf.ring:
            raise ChainGroupError(f"matrix over {self.matrix.ring}, partial field over {self.pf.ring}")
        if self.form == "strong" and not _has_identity(self.matrix):
            raise ChainGroupError("strong form needs A[X, X] = I")

    @classmethod
    def from_matrix(cls, pf: PartialField, A: RMatrix) -> "ChainGroupRep":
        """Detect the form: strong when the row labels index an identity block."""
        return cls(pf, A, "strong" if _has_identity(A) else "weak")

    @classmethod
    def from_reduced(cls, pf: PartialField, D: RMatrix, order: Iterable | None = None):
        """The strong rep [I D]; ``order`` fixes the ground set order (default rows then cols)."""
        return cls(pf, _join(D, tuple(order) if order is not None else D.rows + D.cols), "strong")

    @property
    def ground(self) -> tuple:
        return self.matrix.cols

    @property
    def basis(self) -> tuple:
        return self.matrix.rows

    @property
    def reduced(self) -> RMatrix:
        """D with A = [I D]; strong form only."""
        if self.form != "strong":
            raise ChainGroupError("reduced matrix needs strong form")
        basis = set(self.matrix.rows)
        return self.matrix.sub(self.matrix.rows, [e for e in self.matrix.cols if e not in basis])

    def rows_as_chains(self) -> list:
        return [Chain(dict(zip(self.matrix.cols, row))) for row in self.matrix.entries]


@dataclass(frozen=True)
class Chain:
    coefficients: Mapping

    @property
    def support(self) -> frozenset:
        return frozenset(e for e, v in self.coefficients.items() if v)

    def is_primitive(self, pf: PartialField) -> bool:
        return all(pf.is_element(v) for v in self.coefficients.values())

    def __getitem__(self, e):
        return self.coefficients[e]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    path: tuple = ()
    entry: tuple | None = None  # (row, col, value)
    reason: str = ""
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _has_identity(A: RMatrix) -> bool:
    cols = set(A.cols)
    if not all(r in cols for r in A.rows):
        return False
    one, zero = A.ring.one, A.ring.zero
    return all(A[r, c] == (one if r == c else zero) for r in A.rows for c in A.rows)


def _join(D: RMatrix, order: tuple) -> RMatrix:
    """Assemble [I D] with columns in ``order``."""
    ring = D.ring
    if set(order) != set(D.rows) | set(D.cols):
        raise ChainGroupError("column order does not match the labels of D")
    one, zero = ring.one, ring.zero
    di = D._col_index
    entries = []
    for i, r in enumerate(D.rows):
        row = D.entries[i]
        entries.append(tuple(row[di[e]] if e in di else (one if e == r else zero) for e in order))
    return RMatrix(ring, D.rows, tuple(order), tuple(entries))


def to_strong(rep: ChainGroupRep) -> ChainGroupRep:
    """Left-multiply by A[X, B]^{-1} for the first basis B in ground order."""
    if rep.form == "strong":
        return rep
    A = rep.matrix
    r = len(A.rows)
    for B in combinations(A.cols, r):
        sub = A.sub(A.rows, B)
        if is_invertible(sub):
            inv = invert(sub)  # rows labelled by B
            return ChainGroupRep(rep.pf, inv @ A, "strong")
    raise ChainGroupError("degenerate matrix: no r-subset of columns is invertible")


# -- verification --------------------------------------------------------------------


def components(D: RMatrix) -> list:
    """Connected components of the bipartite support graph of D as (rows, cols) pairs."""
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for r in D.rows:
        parent[("r", r)] = ("r", r)
    for c in D.cols:
        parent[("c", c)] = ("c", c)
    for i, r in enumerate(D.rows):
        for j, c in enumerate(D.cols):
            if D.entries[i][j]:
                a, b = find(("r", r)), find(("c", c))
                if a != b:
                    parent[a] = b
    groups: dict = {}
    for key in parent:
        groups.setdefault(find(key), []).append(key)
    out = []
    for members in groups.values():
        rows = tuple(r for r in D.rows if ("r", r) in members)
        cols = tuple(c for c in D.cols if ("c", c) in members)
        out.append((rows, cols))
    # deterministic order: by first appearance in rows then cols
    pos = {("r", r): i for i, r in enumerate(D.rows)}
    pos.update({("c", c): len(D.rows) + j for j, c in enumerate(D.cols)})
    out.sort(key=lambda rc: min([pos[("r", r)] for r in rc[0]] + [pos[("c", c)] for c in rc[1]]))
    return out


def _bad_entry(D: RMatrix, pf: PartialField):
    for i, r in enumerate(D.rows):
        for j, c in enumerate(D.cols):
            x = D.entries[i][j]
            if x and not pf.contains(x):
                return (r, c, x)
    return None


def pivot_states(D: RMatrix, pf: PartialField):
    """Breadth-first walk over pivot-reachable matrices of one component, keyed by basis.

    Yields ``(basis, matrix, path)``; stops early at the first state with an entry outside
    G and {0}, after yielding it.
    """
    start = frozenset(D.rows)
    seen = {start: ()}
    queue = deque([(D, ())])
    while queue:
        M, path = queue.popleft()
        yield frozenset(M.rows), M, path
        if _bad_entry(M, pf) is not None:
            return
        for i, x in enumerate(M.rows):
            for j, y in enumerate(M.cols):
                if not M.entries[i][j]:
                    continue
                key = (frozenset(M.rows) - {x}) | {y}
                if key in seen:
                    continue
                seen[key] = path + ((x, y),)
                queue.append((pivot(M, x, y), seen[key]))


def verify_strong(D: RMatrix, pf: PartialField) -> Verdict:
    """Check that every matrix reachable from D by pivots has entries in G and {0}.

    D is the reduced matrix of [I D] (disjoint row and column labels). Pivots never
    connect different components of the support graph, so each is walked separately.
    """
    if D.ring != pf.ring:
        return Verdict(False, reason=f"matrix over {D.ring}, partial field over {pf.ring}")
    if set(D.rows) & set(D.cols):
        return Verdict(False, reason="row and column labels must be disjoint")
    states = 0
    for rows, cols in components(D):
        if not rows or not cols:
            continue
        block = D.sub(rows, cols)
        for _basis, M, path in pivot_states(block, pf):
            states += 1
            bad = _bad_entry(M, pf)
            if bad is not None:
                return Verdict(False, path=path, entry=bad,
                               reason=f"entry {bad[2]} at ({bad[0]!r}, {bad[1]!r}) is not in G",
                               detail={"states": states})
    return Verdict(True, detail={"states": states})


def verify_rep(rep: ChainGroupRep) -> Verdict:
    try:
        strong = to_strong(rep)
    except ChainGroupError as exc:
        return Verdict(False, reason=str(exc))
    return verify_strong(strong.reduced, rep.pf)


# -- matroid extraction -------------------------------------------------------------------


def _enumerate_bases(A: RMatrix) -> list:
    r = len(A.rows)
    return [B for B in combinations(A.cols, r) if is_invertible(A.sub(A.rows, B))]


def _enumerate_reduced(D: RMatrix) -> list:
    """Bases of [I D]: B is one iff the square D[X - B, B - X] is invertible."""
    rows, cols = D.rows, D.cols
    row_set = set(rows)
    out = []
    for B in combinations(rows + cols, len(rows)):
        new = [e for e in B if e not in row_set]
        if not new:
            out.append(B)
            continue
        kept = set(B)
        gone = [x for x in rows if x not in kept]
        if is_invertible(D.sub(gone, new)):
            out.append(B)
    return out


def matroid_of(rep: ChainGroupRep, method: str = "auto") -> Matroid:
    """The matroid whose bases are the column sets B with A[X, B] invertible.

    ``method``: ``"enumerate"`` tests every r-subset, ``"walk"`` collects the bases reachable
    by pivots (valid for verified strong reps), ``"auto"`` enumerates each component of a
    strong rep unless that is too large, then walks.
    """
    if method not in ("auto", "enumerate", "walk"):
        raise ValueError(f"unknown method {method!r}")
    A = rep.matrix
    if rep.form == "weak" and method == "enumerate":
        bases = _enumerate_bases(A)
        if not bases:
            raise ChainGroupError("degenerate matrix: no basis")
        return Matroid(A.cols, bases)
    strong = to_strong(rep)
    D = strong.reduced
    parts = []
    for rows, cols in components(D):
        block = D.sub(rows, cols)
        labels = rows + cols
        if not rows or not cols:
            parts.append(Matroid(labels, [rows]))
            continue
        n, r = len(labels), len(rows)
        use_walk = method == "walk" or (method == "auto" and comb(n, r) > ENUMERATION_LIMIT)
        if use_walk:
            bases = [basis for basis, _M, _p in pivot_states(block, rep.pf)]
        else:
            bases = _enumerate_reduced(block)
        parts.append(Matroid(labels, bases, validate=False))
    total = parts[0]
    for p in parts[1:]:
        total = direct_sum(total, p)
    out = total.reorder(A.cols)
    if len(A.cols) <= 12:
        out = Matroid(out.ground, out.bases, validate=True)
    return out


# -- duality, minors, scaling -------------------------------------------------------------


def dual_rep(rep: ChainGroupRep) -> ChainGroupRep:
    """[I D] becomes [-D^T I] over the opposite partial field."""
    if rep.form != "strong":
        raise ChainGroupError("dual_rep needs strong form; call to_strong first")
    D = rep.reduced
    op_ring = rep.pf.ring.op()
    Dt = D.transpose().map(lambda x: -x.to_op(), op_ring)
    return ChainGroupRep(rep.pf.op(), _join(Dt, rep.ground), "strong")


def _pivot_full(rep: ChainGroupRep, x, y) -> ChainGroupRep:
    D = pivot(rep.reduced, x, y)
    return ChainGroupRep(rep.pf, _join(D, rep.ground), "strong")


def _unit_in(entries: dict):
    for label, v in entries.items():
        if v and v.is_unit():
            return label
    if any(entries.values()):
        raise NotInvertible("only non-unit nonzero entries available for pivoting")
    return None


def delete(rep: ChainGroupRep, e) -> ChainGroupRep:
    rep = to_strong(rep)
    if e not in rep.ground:
        raise KeyError(f"unknown element {e!r}")
    if e in rep.basis:
        D = rep.reduced
        y = _unit_in(D.row(e))
        if y is None:  # coloop: its row is a unit vector
            keep_rows = tuple(r for r in D.rows if r != e)
            D2 = D.sub(keep_rows, D.cols)
            order = tuple(c for c in rep.ground if c != e)
            return ChainGroupRep(rep.pf, _join(D2, order), "strong")
        rep = _pivot_full(rep, e, y)
    D = rep.reduced
    order = tuple(c for c in rep.ground if c != e)
    return ChainGroupRep(rep.pf, _join(D.sub(D.rows, [c for c in D.cols if c != e]), order),
                         "strong")


def contract(rep: ChainGroupRep, e) -> ChainGroupRep:
    rep = to_strong(rep)
    if e not in rep.ground:
        raise KeyError(f"unknown element {e!r}")
    if e not in rep.basis:
        x = _unit_in(rep.reduced.column(e))
        if x is None:  # loop
            return delete(rep, e)
        rep = _pivot_full(rep, x, e)
    D = rep.reduced
    order = tuple(c for c in rep.ground if c != e)
    return ChainGroupRep(rep.pf, _join(D.sub([r for r in D.rows if r != e], D.cols), order),
                         "strong")


def minor(rep: ChainGroupRep, delete_set: Iterable = (), contract_set: Iterable = ()):
    dset, cset = list(delete_set), list(contract_set)
    if set(dset) & set(cset):
        raise ChainGroupError("delete and contract sets overlap")
    for e in dset + cset:
        if e not in rep.ground:
            raise KeyError(f"unknown element {e!r}")
    for e in cset:
        rep = contract(rep, e)
    for e in dset:
        rep = delete(rep, e)
    return rep


def scale_column(rep: ChainGroupRep, e, g: RingElement) -> ChainGroupRep:
    """Right-multiply column e by g; in strong form a basis row is rescaled to keep [I D]."""
    if not rep.pf.contains(g):
        raise ChainGroupError(f"{g} is not in the group of {rep.pf}")
    A = rep.matrix
    j = A._col_index[e]
    entries = [tuple(v * g if k == j else v for k, v in enumerate(row)) for row in A.entries]
    if rep.form == "strong" and e in A.rows:
        i = A._row_index[e]
        ginv = g.inverse()
        entries[i] = tuple(ginv * v for v in entries[i])
    return ChainGroupRep(rep.pf, RMatrix(A.ring, A.rows, A.cols, tuple(entries)), rep.form)


# -- homomorphisms ------------------------------------------------------------------------


@dataclass(frozen=True)
class Homomorphism:
    name: str
    target: PartialField
    fn: Callable[[RingElement], RingElement]

    def __call__(self, x):
        return self.fn(x)


def identity_hom(pf: PartialField) -> Homomorphism:
    return Homomorphism("identity", pf, lambda x: x)


def mod_p_hom(source: Ring, p: int) -> Homomorphism:
    """Q-type rings (localised at odd p) to GF(p); 1/2 goes to the inverse of 2."""
    if source.dim != 1 or not source.field.ordered:
        raise ChainGroupError(f"no reduction mod p from {source}")
    target = field_ring(PrimeField(p))

    def fn(x):
        q = x.coords[0]
        if int(q.denominator) % p == 0:
            raise ChainGroupError(f"{x} has a denominator divisible by {p}")
        return target.element((target.field.coerce(q),))

    return Homomorphism(f"gf:{p}", PartialField(target, "units"), fn)


def phi_hom(source: Ring) -> Homomorphism:
    """Quaternions into 2x2 matrices over the complexified base field."""
    from .quat import phi

    if source.kind != "quaternions":
        raise ChainGroupError(f"phi needs quaternions, not {source}")
    target = matrix_ring(2, ComplexExtension(source.field))
    return Homomorphism("phi", PartialField(target, "units"), lambda x: phi(x, target))


def parse_hom(spec: str, rep: ChainGroupRep) -> Homomorphism:
    if spec == "identity":
        return identity_hom(rep.pf)
    if spec == "phi":
        return phi_hom(rep.pf.ring)
    if spec.startswith("gf:"):
        return mod_p_hom(rep.pf.ring, int(spec[3:]))
    raise ValueError(f"unknown homomorphism {spec!r} (use identity, phi or gf:<p>)")


def apply_hom(rep: ChainGroupRep, hom: Homomorphism) -> ChainGroupRep:
    """Entrywise image; nonzero entries must land in G' (zero stays zero)."""
    target = hom.target
    grid = []
    for r, row in zip(rep.matrix.rows, rep.matrix.entries):
        new = []
        for c, x in zip(rep.matrix.cols, row):
            y = hom(x)
            if x and not target.contains(y):
                raise ChainGroupError(f"image of entry ({r!r}, {c!r}) = {y} is outside {target}")
            new.append(y)
        grid.append(tuple(new))
    A = RMatrix(target.ring, rep.matrix.rows, rep.matrix.cols, tuple(grid))
    return ChainGroupRep.from_matrix(target, A)


# -- cocircuit chains and Tutte's criterion ----------------------------------------------


def cocircuit_chains(rep: ChainGroupRep) -> dict:
    """One primitive chain per cocircuit, read off the rows of all pivot states."""
    strong = to_strong(rep)
    D = strong.reduced
    ground = strong.ground
    out: dict = {}
    for _basis, M, _path in pivot_states(D, rep.pf):
        full = _join(M, ground)
        for row in full.entries:
            chain = Chain(dict(zip(ground, row)))
            out.setdefault(chain.support, chain)
    return out


def _left_solve(a: RingElement, b: RingElement) -> RingElement:
    return a * b.inverse()


def tutte_check(M: Matroid, chains: Mapping, pf: PartialField) -> Verdict:
    """For every modular triple find p = 1, p', p'' in G with p a^X + p' a^X' + p'' a^X'' = 0."""
    norm = {frozenset(k): v for k, v in chains.items()}
    for X, chain in norm.items():
        if chain.support != X:
            raise ChainGroupError(f"chain support {sorted(chain.support)} differs from {sorted(X)}")
    ring = pf.ring
    zero = ring.zero
    triples = M.modular_triples() if M.rank >= 2 else []
    checked = 0
    for X, X1, X2 in triples:
        try:
            a, a1, a2 = norm[X], norm[X1], norm[X2]
        except KeyError as exc:
            raise ChainGroupError(f"no chain for cocircuit {sorted(exc.args[0])}") from None
        checked += 1
        triple = (X, X1, X2)
        try:
            e = min(X - X1, key=M.ground.index)
            f = min(X1 - X, key=M.ground.index)
            p2 = -_left_solve(a[e], a2[e])
            p1 = -_left_solve(p2 * a2[f], a1[f])
        except (NotInvertible, ValueError) as exc:
            return Verdict(False, reason=f"no coefficients: {exc}", detail={"triple": triple})
        coeffs = (ring.one, p1, p2)
        residue = {g: a.coefficients.get(g, zero) + p1 * a1.coefficients.get(g, zero)
                   + p2 * a2.coefficients.get(g, zero) for g in M.ground}
        if any(residue.values()):
            return Verdict(False, reason="combination does not vanish",
                           detail={"triple": triple, "coefficients": coeffs, "residue": residue})
        if not (pf.contains(p1) and pf.contains(p2)):
            return Verdict(False, reason="coefficients outside G",
                           detail={"triple": triple, "coefficients": coeffs})
    return Verdict(True, detail={"triples": checked})
