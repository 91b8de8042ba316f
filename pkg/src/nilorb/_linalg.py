"""Exact linear algebra over the rationals and the integers.

Everything here works on tuples/lists of ``fractions.Fraction`` (or plain
ints for lattice work).  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import List, Sequence, Tuple

Vector = Tuple[Fraction, ...]


def vec(xs: Sequence) -> Vector:
    return tuple(Fraction(x) for x in xs)


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def smul(c, x: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in x)


def dot(x: Vector, y: Vector) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def is_zero(x: Vector) -> bool:
    return all(a == 0 for a in x)


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    """Solve A x = b exactly.  A must be square and invertible."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [inv * v for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def invert(matrix: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    n = len(matrix)
    cols = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        cols.append(solve(matrix, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(map(Fraction, r)) for r in matrix]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [inv * v for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return r


def solve_in_span(basis: Sequence[Vector], constraints: Sequence[Tuple[Vector, Fraction]]) -> Vector:
    """Find v in span(basis) with dot(v, c) = t for every constraint (c, t).

    The constraint system must determine v uniquely within the span; extra
    (consistent) constraints are allowed and checked.
    """
    k = len(basis)
    a = [[dot(b, c) for b in basis] for c, _ in constraints]
    rhs = [Fraction(t) for _, t in constraints]
    idx: List[int] = []
    rows: List[List[Fraction]] = []
    for i, row in enumerate(a):
        if rank(rows + [row]) > len(rows):
            idx.append(i)
            rows.append(row)
        if len(idx) == k:
            break
    if len(idx) < k:
        raise ValueError("constraints do not determine the vector")
    xs = solve(rows, [rhs[i] for i in idx])
    v = tuple(
        sum((xs[j] * basis[j][i] for j in range(k)), Fraction(0)) for i in range(len(basis[0]))
    )
    for c, t in constraints:
        if dot(v, c) != t:
            raise ValueError("inconsistent constraint system")
    return v


def _diagonalize(a: List[List[int]], u: List[List[int]], v: List[List[int]]) -> int:
    """Diagonalize a by unimodular row ops (tracked in u) and column ops (in v).

    Returns the number of nonzero diagonal entries.
    """
    m, n = len(a), len(a[0]) if a else 0
    s = 0
    while s < min(m, n):
        best = None
        for i in range(s, m):
            for j in range(s, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        a[s], a[i0] = a[i0], a[s]
        u[s], u[i0] = u[i0], u[s]
        for row in a:
            row[s], row[j0] = row[j0], row[s]
        for row in v:
            row[s], row[j0] = row[j0], row[s]
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            u[s] = [-x for x in u[s]]
        clean = True
        for i in range(s + 1, m):
            if a[i][s] != 0:
                q = a[i][s] // a[s][s]
                a[i] = [x - q * y for x, y in zip(a[i], a[s])]
                u[i] = [x - q * y for x, y in zip(u[i], u[s])]
                if a[i][s] != 0:
                    clean = False
        for j in range(s + 1, n):
            if a[s][j] != 0:
                q = a[s][j] // a[s][s]
                for row in a:
                    row[j] -= q * row[s]
                for row in v:
                    row[j] -= q * row[s]
                if a[s][j] != 0:
                    clean = False
        if clean:
            s += 1
    return s


def integer_kernel(matrix: Sequence[Sequence[int]]) -> List[List[int]]:
    """Basis of {x in Z^m : x A = 0} for an integer m x n matrix A.

    The kernel of an integer matrix is a saturated sublattice, so the basis
    generates it with index 1.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    _diagonalize(a, u, v)
    return [list(u[i]) for i in range(m) if all(x == 0 for x in a[i])]


def elementary_divisors(matrix: Sequence[Sequence[int]]) -> List[int]:
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    r = _diagonalize(a, u, v)
    return sorted(abs(a[i][i]) for i in range(r))


def maximal_minor_gcd(matrix: Sequence[Sequence[int]]) -> int:
    """gcd of all maximal minors of an integer matrix with rows <= cols."""
    rows = [list(map(int, r)) for r in matrix]
    k = len(rows)
    n = len(rows[0]) if rows else 0
    if k == 0:
        return 0
    g = 0
    for cols in combinations(range(n), k):
        sub = [[rows[i][j] for j in cols] for i in range(k)]
        g = gcd(g, _det_int(sub))
        if g == 1:
            return 1
    return g


def _det_int(a: List[List[int]]) -> int:
    # Bareiss fraction-free determinant.
    a = [row[:] for row in a]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
