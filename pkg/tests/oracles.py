"""Independent reference computations for tests.

Nothing here imports the package's arithmetic: rationals are ``fractions.Fraction``,
quaternions are 4-tuples multiplied by the Hamilton formula, and graphs are
handled by brute force.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def frac_rank(rows) -> int:
    A = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][c] != 0:
                f = A[i][c] / A[rank][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
    return rank


def hamilton(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def spanning_trees(n_vertices: int, edges) -> list:
    """All spanning forests with one tree per component, as sets of edge indices (1-based)."""
    parent0 = list(range(n_vertices + 1))

    def components(es):
        parent = parent0[:]

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        merged = 0
        for u, v in es:
            ru, rv = find(u), find(v)
            if ru == rv:
                return None
            parent[ru] = rv
            merged += 1
        return merged

    full = components_count(n_vertices, edges)
    target = n_vertices - full
    out = []
    for combo in combinations(range(len(edges)), target):
        if components([edges[i] for i in combo]) == target:
            out.append(frozenset(i + 1 for i in combo))
    return out


def components_count(n_vertices: int, edges) -> int:
    parent = list(range(n_vertices + 1))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(1, n_vertices + 1)})


def bases_by_rank(rows, labels, r) -> set:
    """Column sets of size r whose columns have full rank over Q."""
    out = set()
    for B in combinations(range(len(labels)), r):
        sub = [[row[j] for j in B] for row in rows]
        if frac_rank(sub) == r:
            out.add(frozenset(labels[j] for j in B))
    return out


def block_bases(rows, n, labels, r) -> set:
    """Bases of the matroid whose element e owns the n consecutive columns of block e."""
    out = set()
    for B in combinations(range(len(labels)), r):
        cols = [n * b + c for b in B for c in range(n)]
        sub = [[row[j] for j in cols] for row in rows]
        if frac_rank(sub) == n * r:
            out.add(frozenset(labels[b] for b in B))
    return out


def _qconj(q):
    return (q[0], -q[1], -q[2], -q[3])


def _qinv(q):
    n = sum(c * c for c in q)
    return tuple(c / n for c in _qconj(q))


def quaternion_rank(rows, tol: float = 1e-9) -> int:
    """Row rank of a matrix of float quaternion 4-tuples by left Gaussian elimination."""
    A = [list(r) for r in rows]
    rank, ncols = 0, len(A[0]) if A else 0
    for c in range(ncols):
        piv = max(range(rank, len(A)), key=lambda i: sum(x * x for x in A[i][c]), default=None)
        if piv is None or sum(x * x for x in A[piv][c]) < tol:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = _qinv(A[rank][c])
        A[rank] = [hamilton(inv, x) for x in A[rank]]
        for i in range(len(A)):
            if i != rank and sum(x * x for x in A[i][c]) >= tol:
                f = A[i][c]
                A[i] = [tuple(a - b for a, b in zip(x, hamilton(f, y))) for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def quaternion_bases(rows, labels, r) -> set:
    """Column sets of size r whose columns have full quaternion rank (float arithmetic)."""
    out = set()
    for B in combinations(range(len(labels)), r):
        if quaternion_rank([[row[j] for j in B] for row in rows]) == r:
            out.add(frozenset(labels[j] for j in B))
    return out
