"""Quaternion matrices: the embedding phi, the pseudo-determinant delta, basis counting.

``phi`` sends a + bi + cj + dk to the complex 2x2 matrix
``[[a + bi, c + di], [-c + di, a - bi]]``. For a square quaternion matrix D,
``delta_sq(D) = |det z_2(phi(D))|`` and ``delta(D)`` is its square root.
All values stay in the base field (Q or Q(sqrt d)); comparisons are made on
squares so no root is taken unless it is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from .chaingroup import ChainGroupError, ChainGroupRep, contract, to_strong, verify_strong
from .fields import ComplexExtension
from .matrixlab import RMatrix, invert, pivot, unwrap
from .rings import Ring, RingElement, matrix_ring, quaternionic_unimodular, quaternions


class NotPerfectSquare(ArithmeticError):
    """The requested square root does not exist in the base field."""


def _require_quaternions(ring: Ring):
    if ring.kind != "quaternions":
        raise TypeError(f"expected quaternions, got {ring}")


def phi_ring(ring: Ring) -> Ring:
    return matrix_ring(2, ComplexExtension(ring.field))


def phi(q: RingElement, target: Ring | None = None) -> RingElement:
    _require_quaternions(q.ring)
    target = target or phi_ring(q.ring)
    K = q.ring.field
    a, b, c, d = q.coords
    return target.element((
        (a, b), (c, d),
        (K.neg(c), d), (a, K.neg(b)),
    ))


def phi_matrix(A: RMatrix) -> RMatrix:
    target = phi_ring(A.ring)
    return A.map(lambda x: phi(x, target), target)


def _complex_det(D: RMatrix):
    Z = unwrap(phi_matrix(D))
    C = Z.ring.field
    return C, linalg.det(C, [[x.coords[0] for x in row] for row in Z.entries])


def delta_sq(D: RMatrix):
    """|det z_2(phi(D))| as an exact base-field value."""
    _require_quaternions(D.ring)
    if D.shape[0] != D.shape[1]:
        raise ValueError(f"delta of a non-square {D.shape} matrix")
    if D.shape[0] == 0:
        return D.ring.field.one
    C, det = _complex_det(D)
    K = C.base
    re, im = det
    if K.is_zero(im):
        return re if K.sign(re) >= 0 else K.neg(re)
    root = K.sqrt(C.abs_sq(det))
    if root is None:
        raise NotPerfectSquare(f"|det| of {det} is not exact")
    return root


def delta(D: RMatrix):
    """sqrt(delta_sq(D)); raises NotPerfectSquare when the root leaves the base field."""
    K = D.ring.field
    value = delta_sq(D)
    root = K.sqrt(value)
    if root is None:
        raise NotPerfectSquare(f"delta^2 = {K.format(value)} has no exact square root")
    return root


@dataclass(frozen=True)
class CauchyBinet:
    lhs_sq: object  # delta(AA^dag)^2
    rhs: object  # sum over B of delta(A_B A_B^dag)
    terms: tuple
    base: object

    @property
    def rhs_sq(self):
        return self.base.mul(self.rhs, self.rhs)

    @property
    def ok(self) -> bool:
        return self.lhs_sq == self.rhs_sq


def cauchy_binet_check(A: RMatrix) -> CauchyBinet:
    """delta(AA^dag) against the sum of delta(A[X,B] A[X,B]^dag), compared as squares."""
    _require_quaternions(A.ring)
    r, s = A.shape
    if s < r:
        raise ValueError("need at least as many columns as rows")
    K = A.ring.field
    lhs_sq = delta_sq(A @ A.conjugate_transpose())
    total = K.zero
    terms = []
    for B in combinations(A.cols, r):
        AB = A.sub(A.rows, B)
        t = delta(AB @ AB.conjugate_transpose())
        terms.append((B, t))
        total = K.add(total, t)
    return CauchyBinet(lhs_sq, total, tuple(terms), K)


# -- quaternionic unimodular reps ------------------------------------------------------------


def _as_integer(K, value) -> int:
    x = value[0] if isinstance(value, tuple) else value
    if isinstance(value, tuple) and value[1]:
        raise ChainGroupError(f"irrational count {K.format(value)}")
    if x.denominator != 1:
        raise ChainGroupError(f"non-integer count {K.format(value)}")
    return int(x.numerator)


def count_bases(rep: ChainGroupRep, check: bool = True) -> int:
    """delta(AA^dag), the number of bases of a strong QU-matrix.

    With ``check`` the matrix is first verified to be a strong QU-matrix, since
    for other matrices the value counts nothing.
    """
    A = rep.matrix
    _require_quaternions(A.ring)
    if check:
        verdict = verify_strong(to_strong(rep).reduced, quaternionic_unimodular(A.ring.field))
        if not verdict:
            raise ChainGroupError(f"not a strong QU-matrix: {verdict.reason}")
    K = A.ring.field
    return _as_integer(K, delta(A @ A.conjugate_transpose()))


@dataclass(frozen=True)
class ProjectionData:
    P: RMatrix
    rep: ChainGroupRep

    def principal(self, F: Iterable) -> RMatrix:
        F = [e for e in self.P.rows if e in set(F)]
        return self.P.sub(F, F)

    def delta_of(self, F: Iterable):
        return delta(self.principal(F))

    def contract_pivot(self, e) -> RMatrix:
        """(P)^{ee} restricted to E - e."""
        rest = [x for x in self.P.rows if x != e]
        return pivot(self.P, e, e).sub(rest, rest)


def projection(rep: ChainGroupRep) -> ProjectionData:
    """P_A = A^dag (A A^dag)^{-1} A, indexed by the ground set."""
    A = rep.matrix
    _require_quaternions(A.ring)
    At = A.conjugate_transpose()
    try:
        G = invert(A @ At)
    except ArithmeticError:
        raise ChainGroupError("matrix does not have full row rank") from None
    P = At @ G @ A
    return ProjectionData(P.relabel(A.cols, A.cols), rep)


def projection_of_contraction(rep: ChainGroupRep, e) -> RMatrix:
    return projection(contract(to_strong(rep), e)).P


def marginal(rep: ChainGroupRep, F: Iterable):
    """delta(P[F, F]): the share of bases containing F."""
    F = list(F)
    unknown = [e for e in F if e not in rep.ground]
    if unknown:
        raise KeyError(f"unknown elements {unknown}")
    return projection(rep).delta_of(F)


# -- graphs ----------------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple  # ((u, v), ...), edge labels 1..m

    @classmethod
    def from_edges(cls, vertices: int | Sequence, edges: Iterable):
        verts = tuple(range(1, vertices + 1)) if isinstance(vertices, int) else tuple(vertices)
        edges = tuple((u, v) for u, v in edges)
        for u, v in edges:
            if u not in verts or v not in verts:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
        return cls(verts, edges)

    @property
    def labels(self) -> tuple:
        return tuple(range(1, len(self.edges) + 1))

    def components(self) -> list:
        parent = {v: v for v in self.vertices}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in self.edges:
            parent[find(u)] = find(v)
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(a, m + b) for a in range(1, m + 1) for b in range(1, n + 1)])


def graph_to_qu(graph: Graph) -> ChainGroupRep:
    """Signed incidence matrix with one vertex row dropped per component, in strong form."""
    if not graph.edges:
        raise ValueError("graph has no edges")
    pf = quaternionic_unimodular()
    H = pf.ring
    dropped = {comp[0] for comp in graph.components()}
    rows = [v for v in graph.vertices if v not in dropped]
    grid = []
    for v in rows:
        line = []
        for a, b in graph.edges:
            if a == b:
                line.append(0)
            else:
                line.append(1 if v == a else (-1 if v == b else 0))
        grid.append(line)
    if not rows:
        raise ValueError("graph has rank zero")
    A = RMatrix.build(H, grid, [("v", v) for v in rows], graph.labels)
    return to_strong(ChainGroupRep(pf, A, "weak"))
