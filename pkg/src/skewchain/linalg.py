"""Gaussian elimination over an exact commutative field.

Matrices here are lists of row lists holding raw field values; ``F`` is the
field object from :mod:`skewchain.fields` that performs the arithmetic.
"""

from __future__ import annotations


class NotInvertible(ArithmeticError):
    """Raised when an exact inverse does not exist."""


def identity(F, n):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def rref(F, M):
    """Reduced row echelon form; returns (rows, pivot columns). ``M`` is left untouched."""
    A = [list(row) for row in M]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not F.is_zero(A[i][c])), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, v) for v in A[r]]
        for i in range(nrows):
            if i != r and not F.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(F, M) -> int:
    A = [list(row) for row in M]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not F.is_zero(A[i][c])), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = F.inv(A[r][c])
        pivot_row = A[r]
        for i in range(r + 1, nrows):
            if not F.is_zero(A[i][c]):
                f = F.mul(A[i][c], inv)
                A[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[i], pivot_row)]
        r += 1
    return r


def det(F, M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    A = [list(row) for row in M]
    result = F.one
    for c in range(n):
        p = next((i for i in range(c, n) if not F.is_zero(A[i][c])), None)
        if p is None:
            return F.zero
        if p != c:
            A[c], A[p] = A[p], A[c]
            result = F.neg(result)
        pivot = A[c][c]
        result = F.mul(result, pivot)
        inv = F.inv(pivot)
        for i in range(c + 1, n):
            if not F.is_zero(A[i][c]):
                f = F.mul(A[i][c], inv)
                A[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[i], A[c])]
    return result


def inverse(F, M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise NotInvertible("non-square matrix")
    aug = [list(row) + e for row, e in zip(M, identity(F, n))]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise NotInvertible("singular matrix")
    return [row[n:] for row in R]


def matmul(F, A, B):
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = F.zero
            for k in range(inner):
                a = row[k]
                if not F.is_zero(a):
                    b = B[k][j]
                    if not F.is_zero(b):
                        acc = F.add(acc, F.mul(a, b))
            new.append(acc)
        out.append(new)
    return out
