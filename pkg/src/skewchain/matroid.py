"""Matroids given by their bases, stored as bitmasks over an ordered ground set."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

MAX_ELEMENTS = 64
VALIDATE_LIMIT = 16


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _subsets(mask: int):
    """All submasks of ``mask``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class MatroidError(ValueError):
    pass


class Matroid:
    """A matroid on ``ground`` whose bases are given as element collections or bitmasks.

    Construction checks the basis exchange axiom when the ground set has at most
    ``VALIDATE_LIMIT`` elements (or when ``validate=True`` is forced).
    """

    def __init__(self, ground: Sequence, bases: Iterable, validate: bool | None = None):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise MatroidError("duplicate ground set labels")
        if len(self.ground) > MAX_ELEMENTS:
            raise MatroidError(f"at most {MAX_ELEMENTS} elements supported")
        self._index = {e: i for i, e in enumerate(self.ground)}
        masks = set()
        for b in bases:
            masks.add(b if isinstance(b, int) else self.mask(b))
        if not masks:
            raise MatroidError("a matroid needs at least one basis")
        self.bases = frozenset(masks)
        sizes = {_popcount(b) for b in self.bases}
        if len(sizes) != 1:
            raise MatroidError(f"bases of different sizes: {sorted(sizes)}")
        self.rank_ = sizes.pop()
        if validate is None:
            validate = len(self.ground) <= VALIDATE_LIMIT
        self.validated = validate
        if validate:
            bad = self._exchange_violation()
            if bad is not None:
                raise MatroidError(f"basis exchange fails for {bad}")

    # -- subsets ---------------------------------------------------------------------

    def mask(self, elements: Iterable) -> int:
        m = 0
        for e in elements:
            try:
                m |= 1 << self._index[e]
            except KeyError:
                raise MatroidError(f"unknown element {e!r}") from None
        return m

    def elements(self, mask: int) -> frozenset:
        return frozenset(e for i, e in enumerate(self.ground) if mask >> i & 1)

    def reorder(self, ground: Sequence) -> "Matroid":
        """The same matroid with its ground set listed in another order."""
        ground = tuple(ground)
        if len(ground) != len(self.ground) or set(ground) != set(self.ground):
            raise MatroidError("reorder needs a permutation of the ground set")
        target = {e: i for i, e in enumerate(ground)}
        # byte-wise lookup tables keep this linear in the number of bases
        tables = []
        for start in range(0, len(self.ground), 8):
            chunk = [1 << target[e] for e in self.ground[start:start + 8]]
            table = [0] * (1 << len(chunk))
            for byte in range(1, len(table)):
                low = byte & -byte
                table[byte] = table[byte ^ low] | chunk[low.bit_length() - 1]
            tables.append(table)
        bases = []
        for b in self.bases:
            m = 0
            for k, table in enumerate(tables):
                m |= table[(b >> (8 * k)) & (len(table) - 1)]
            bases.append(m)
        out = Matroid(ground, bases, validate=False)
        out.validated = self.validated
        return out

    def sorted_elements(self, mask: int) -> tuple:
        return tuple(e for i, e in enumerate(self.ground) if mask >> i & 1)

    @property
    def full(self) -> int:
        return (1 << len(self.ground)) - 1

    def _exchange_violation(self):
        for b1 in self.bases:
            for b2 in self.bases:
                diff = b1 & ~b2
                while diff:
                    low = diff & -diff
                    diff ^= low
                    cand = b2 & ~b1
                    ok = False
                    while cand:
                        y = cand & -cand
                        cand ^= y
                        if (b1 & ~low) | y in self.bases:
                            ok = True
                            break
                    if not ok:
                        return (self.sorted_elements(b1), self.sorted_elements(b2))
        return None

    # -- rank & friends ------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.rank_

    def rank_of(self, X: Iterable | int) -> int:
        m = X if isinstance(X, int) else self.mask(X)
        return max(_popcount(b & m) for b in self.bases)

    def is_basis(self, X: Iterable | int) -> bool:
        m = X if isinstance(X, int) else self.mask(X)
        return m in self.bases

    @cached_property
    def independent_sets(self) -> frozenset:
        found = set()
        for b in self.bases:
            if b in found:
                continue
            found.update(_subsets(b))
        return frozenset(found)

    def is_independent(self, X: Iterable | int) -> bool:
        m = X if isinstance(X, int) else self.mask(X)
        if _popcount(m) > self.rank_:
            return False
        return any(b & m == m for b in self.bases)

    @cached_property
    def circuit_masks(self) -> frozenset:
        indep = self.independent_sets
        n = len(self.ground)
        out = set()
        for k in range(1, self.rank_ + 2):
            for combo in combinations(range(n), k):
                m = 0
                for i in combo:
                    m |= 1 << i
                if m in indep:
                    continue
                if all(m & ~(1 << i) in indep for i in combo):
                    out.add(m)
        return frozenset(out)

    def circuits(self) -> set:
        return {self.elements(m) for m in self.circuit_masks}

    @cached_property
    def dual(self) -> "Matroid":
        full = self.full
        d = Matroid(self.ground, (full & ~b for b in self.bases), validate=False)
        d.validated = self.validated
        return d

    def cocircuits(self) -> set:
        return self.dual.circuits()

    @property
    def cocircuit_masks(self) -> frozenset:
        return self.dual.circuit_masks

    def loops(self) -> frozenset:
        union = 0
        for b in self.bases:
            union |= b
        return self.elements(self.full & ~union)

    def coloops(self) -> frozenset:
        inter = self.full
        for b in self.bases:
            inter &= b
        return self.elements(inter)

    # -- minors ------------------------------------------------------------------------

    def minor(self, delete: Iterable = (), contract: Iterable = ()) -> "Matroid":
        """M / contract \\ delete."""
        D, C = self.mask(delete), self.mask(contract)
        if D & C:
            raise MatroidError("delete and contract sets overlap")
        keep = self.full & ~(D | C)
        rc = self.rank_of(C)
        r_new = self.rank_of(keep | C) - rc
        ground = self.sorted_elements(keep)
        new_bases = set()
        for b in self.bases:
            if _popcount(b & C) == rc and _popcount(b & keep) == r_new:
                new_bases.add(b & keep)
        return Matroid(ground, (self.elements(b) for b in new_bases), validate=False)

    def delete(self, *elements) -> "Matroid":
        return self.minor(delete=elements)

    def contract(self, *elements) -> "Matroid":
        return self.minor(contract=elements)

    def restrict(self, X: Iterable) -> "Matroid":
        keep = self.mask(X)
        return self.minor(delete=self.elements(self.full & ~keep))

    # -- modular triples ---------------------------------------------------------------

    def modular_triples(self) -> list:
        """Unordered triples of distinct cocircuits whose union's complement S has r(M/S) = 2."""
        cocircuits = sorted(self.cocircuit_masks)
        r = self.rank_
        out = []
        rank_cache: dict[int, int] = {}
        for X1, X2, X3 in combinations(cocircuits, 3):
            S = self.full & ~(X1 | X2 | X3)
            rs = rank_cache.get(S)
            if rs is None:
                rs = rank_cache[S] = self.rank_of(S)
            if r - rs == 2:
                out.append((self.elements(X1), self.elements(X2), self.elements(X3)))
        return out

    # -- comparison ----------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        if set(self.ground) != set(other.ground):
            return False
        if self.ground == other.ground:
            return self.bases == other.bases
        return {self.elements(b) for b in self.bases} == {other.elements(b) for b in other.bases}

    def __hash__(self):
        return hash((frozenset(self.ground), len(self.bases), self.rank_))

    def basis_sets(self) -> set:
        return {self.elements(b) for b in self.bases}

    def relabel(self, mapping: dict) -> "Matroid":
        ground = tuple(mapping[e] for e in self.ground)
        # positions are unchanged, so masks carry over
        m = Matroid.__new__(Matroid)
        m.ground = ground
        m._index = {e: i for i, e in enumerate(ground)}
        m.bases = self.bases
        m.rank_ = self.rank_
        m.validated = self.validated
        return m

    def __repr__(self):
        return f"Matroid(rank={self.rank_}, elements={len(self.ground)}, bases={len(self.bases)})"


def uniform(r: int, n: int, labels: Sequence | None = None) -> Matroid:
    labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
    return Matroid(labels, combinations(labels, r))


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    if set(M1.ground) & set(M2.ground):
        raise MatroidError("direct sum needs disjoint ground sets")
    shift = len(M1.ground)
    bases = (b1 | (b2 << shift) for b1 in M1.bases for b2 in M2.bases)
    out = Matroid(M1.ground + M2.ground, bases, validate=False)
    out.validated = M1.validated and M2.validated
    return out


def from_circuit_hyperplanes(r: int, ground: Sequence, dependent: Iterable) -> Matroid:
    """Rank-r paving matroid whose only dependent r-sets are ``dependent``."""
    bad = {frozenset(d) for d in dependent}
    return Matroid(ground, (b for b in combinations(ground, r) if frozenset(b) not in bad))


# -- isomorphism --------------------------------------------------------------------------


def _element_invariants(M: Matroid):
    n = len(M.ground)
    inv = [[0] * (M.rank_ + 2) for _ in range(n)]
    for c in M.circuit_masks:
        k = _popcount(c)
        for i in range(n):
            if c >> i & 1:
                inv[i][k] += 1
    return [tuple(v) for v in inv]


def is_isomorphic(M1: Matroid, M2: Matroid):
    """Return a bijection {e1: e2} mapping bases onto bases, or None."""
    n = len(M1.ground)
    if n != len(M2.ground) or M1.rank_ != M2.rank_ or len(M1.bases) != len(M2.bases):
        return None
    if set(M1.ground) == set(M2.ground) and M1 == M2:
        return {e: e for e in M1.ground}
    inv1, inv2 = _element_invariants(M1), _element_invariants(M2)
    if sorted(inv1) != sorted(inv2):
        return None
    circ1 = M1.circuit_masks
    circ2 = M2.circuit_masks
    if len(circ1) != len(circ2):
        return None
    by_top: dict[int, list[int]] = {}
    for c in circ1:
        top = c.bit_length() - 1
        by_top.setdefault(top, []).append(c)

    # assign M1 elements in index order; a circuit is checked once its highest element is placed
    order = list(range(n))
    image = [-1] * n
    used = [False] * n

    def check(i):
        for c in by_top.get(i, ()):
            m = 0
            cc = c
            while cc:
                low = cc & -cc
                m |= 1 << image[low.bit_length() - 1]
                cc ^= low
            if m not in circ2:
                return False
        return True

    def search(pos):
        if pos == n:
            return True
        i = order[pos]
        for j in range(n):
            if used[j] or inv2[j] != inv1[i]:
                continue
            image[i] = j
            used[j] = True
            if check(i) and search(pos + 1):
                return True
            used[j] = False
        image[i] = -1
        return False

    if not search(0):
        return None
    mapping = {M1.ground[i]: M2.ground[image[i]] for i in range(n)}
    if M1.relabel(mapping) != M2:
        return None
    return mapping
