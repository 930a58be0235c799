"""Exact linear algebra over Q: determinants, rank, solving, and a phase-one simplex.

Everything works on lists of ints or Fractions; nothing touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

Matrix = Sequence[Sequence]


def det(M: Matrix):
    """Determinant by Bareiss elimination (exact, stays integral for integer input)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num / prev if isinstance(num, Fraction) else _exact_div(num, prev)
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        assert r == 0
        return q
    return Fraction(a) / b


def transpose(M: Matrix) -> list[list]:
    return [list(col) for col in zip(*M)]


def columns(M: Matrix, idx: Sequence[int]) -> list[list]:
    return [[row[j] for j in idx] for row in M]


def rref(M: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    A = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1]) if M else 0


def independent_rows(M: Matrix) -> list[int]:
    """Indices of a maximal linearly independent set of rows (greedy, in order)."""
    _, piv = rref(transpose(M))
    return piv


def solve(M: Matrix, b: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(M)
    aug = [list(M[i]) + [b[i]] for i in range(n)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [R[i][n] for i in range(n)]


def inverse(M: Matrix) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(M[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def adjugate(M: Matrix) -> list[list[int]]:
    """Integer adjugate, so that adj(M) @ M = det(M) * I."""
    n = len(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj


def maximal_minors(M: Matrix):
    """Yield (column index tuple, determinant) for every k x k column submatrix of a k x s matrix."""
    k = len(M)
    s = len(M[0]) if k else 0
    for sigma in combinations(range(s), k):
        yield sigma, det(columns(M, sigma))


def normal_vector(vectors: Sequence[Sequence[int]]) -> list[int]:
    """Integer normal to the span of k-1 vectors in R^k (generalized cross product)."""
    k = len(vectors) + 1
    out = []
    for j in range(k):
        minor = [[v[c] for c in range(k) if c != j] for v in vectors]
        out.append((-1) ** j * det(minor) if minor else (-1) ** j)
    return out


def find_feasible(A: Matrix, b: Sequence) -> Optional[list[Fraction]]:
    """A point x >= 0 with A x = b, or None when infeasible (phase-one simplex, Bland's rule)."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        r = [Fraction(x) for x in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            r, bi = [-x for x in r], -bi
        rows.append(r + [Fraction(int(i == j)) for j in range(m)] + [bi])
    width = n + m
    basis = [n + i for i in range(m)]
    obj = [-sum((rows[i][j] for i in range(m)), Fraction(0)) for j in range(n)]
    obj += [Fraction(0)] * m + [-sum((rows[i][-1] for i in range(m)), Fraction(0))]
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        assert best is not None, "phase one cannot be unbounded"
        p = best[1]
        piv = rows[p][enter]
        rows[p] = [x / piv for x in rows[p]]
        for i in range(m):
            if i != p and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[p])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, rows[p])]
        basis[p] = enter
    if obj[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][-1]
    return x


def positive_certificate(A: Matrix) -> Optional[list[Fraction]]:
    """y with y^T A >= 1 in every column, or None if no such y exists."""
    k = len(A)
    s = len(A[0]) if k else 0
    eq = []
    for c in range(s):
        col = [A[r][c] for r in range(k)]
        eq.append(col + [-x for x in col] + [-int(c == j) for j in range(s)])
    x = find_feasible(eq, [1] * s)
    if x is None:
        return None
    return [x[r] - x[k + r] for r in range(k)]
