"""Exact integer and rational linear algebra.

Matrices are plain lists of rows of Python ints (or ``Fraction`` where
noted).  Nothing here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

Rat = Fraction
IntMat = list[list[int]]


def identity(n: int) -> IntMat:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def transpose(A: Sequence[Sequence], ncols: Optional[int] = None) -> list[list]:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def integer_direction(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector with the same direction as a rational vector."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def clear_denominators(row: Sequence) -> tuple[list[int], int]:
    """Scale a rational row to integers; returns the row and the (positive) factor."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row], 1
    return [int(x * den) for x in row], den


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
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
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def row_echelon(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    A = [[Fraction(x) for x in r] for r in M]
    if not A:
        return [], []
    ncols = len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
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
    return A[:r], pivots


def _int_rank(M: Sequence[Sequence[int]]) -> int:
    # fraction-free elimination; row swaps only, so exact on integers
    A = [list(r) for r in M]
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, len(A)):
            f = A[i][c]
            if f:
                row = [p * x - f * y for x, y in zip(A[i], A[r])]
                g = 0
                for x in row:
                    g = gcd(g, x)
                A[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(A):
            break
    return r


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    if all(type(x) is int for row in M for x in row):
        return _int_rank(M)
    return len(row_echelon(M)[1])


def nullspace(M: Sequence[Sequence], ncols: Optional[int] = None) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} over Q."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = row_echelon(M) if M else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


# --------------------------------------------------------------------------
# Smith and Hermite normal forms


def _snf(M: Sequence[Sequence[int]]):
    A = [list(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(src, dst, k):
        # row dst += k * row src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        # col dst += k * col src
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]
        Vinv[src] = [a - k * b for a, b in zip(Vinv[src], Vinv[dst])]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
            best = None
            for i in range(t + 1, m):
                if A[i][t] and (best is None or abs(A[i][t]) < abs(A[best[0]][best[1]])):
                    best = (i, t)
            for j in range(t + 1, n):
                if A[t][j] and (best is None or abs(A[t][j]) < abs(A[best[0]][best[1]])):
                    best = (t, j)
            if best is not None:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
            best = (t, t)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V, Vinv


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[IntMat, IntMat, IntMat]:
    """Return (U, D, V) with U*M*V = D, U and V unimodular, D diagonal with d1 | d2 | ..."""
    U, D, V, _ = _snf(M)
    return U, D, V


def hermite_normal_form(M: Sequence[Sequence[int]]) -> IntMat:
    """Row-style HNF of the lattice spanned by the rows of M (zero rows dropped).

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``, so two matrices span the same lattice iff their HNFs agree.
    """
    A = [list(r) for r in M if any(r)]
    if not A:
        return []
    n = len(A[0])
    r = 0
    for c in range(n):
        if r == len(A):
            break
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c]]
            if not nz:
                break
            i = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[i] = A[i], A[r]
            done = True
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if r < len(A) and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
            r += 1
    return [row for row in A[:r]]


def solve_integer(M: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[int]]:
    """Integer solution z of M z = b, or None when no integer solution exists."""
    m = len(M)
    if len(b) != m:
        raise ValueError("right-hand side length does not match the row count")
    n = len(M[0]) if m else 0
    if n == 0:
        return [] if not any(b) else None
    U, D, V, _ = _snf(M)
    c = [dot(row, b) for row in U]
    w = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d:
                return None
            w[i] = c[i] // d
    return [dot(row, w) for row in V]
