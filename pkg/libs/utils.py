"""Integer linear algebra shared by the lattice, point counting and oracle libs.

Vectors are tuples of Python ints, matrices are lists of rows. Everything is
exact; sympy does the heavy lifting where it offers a stable API (Smith normal
form, nullspaces, inverses), unimodular row reduction is done here with
2x2 extended gcd steps because sympy's normal forms do not return the
transformation matrices.
"""

from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from libs import BadRank

Vector = Tuple[int, ...]


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def neg(v: Sequence[int]) -> Vector:
    return tuple(-x for x in v)


def content(v: Sequence[int]) -> int:
    """gcd of all coordinates, 0 for the zero vector."""
    return reduce(gcd, v, 0)


def check_lengths(vectors, rank: int) -> None:
    for v in vectors:
        if len(v) != rank:
            raise BadRank("Vector {} has length {}, expected {}.".format(tuple(v), len(v), rank))


def identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def exgcd_matrix(a: int, b: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Return 2x2 integer matrix M of determinant 1 with M @ [a, b] = [gcd(a, b), 0]."""
    x, y, g = (int(v) for v in ZZ.gcdex(ZZ(a), ZZ(b)))
    if g == 0:
        return ((1, 0), (0, 1))

    return ((x, y), (-b // g, a // g))


def _combine_rows(rows, i, j, m) -> None:
    (p, q), (r, s) = m
    ri, rj = rows[i], rows[j]
    rows[i] = [p * x + q * y for x, y in zip(ri, rj)]
    rows[j] = [r * x + s * y for x, y in zip(ri, rj)]


def hermite_form(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[List[List[int]], List[List[int]]]:
    """Row Hermite normal form.

    Return (H, S) with H = S @ A, S unimodular, H in row echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    """
    a = [list(r) for r in rows]
    m = len(a)
    s = identity(m)

    pivot_row = 0
    for col in range(ncols):
        if pivot_row == m:
            break

        for i in range(pivot_row + 1, m):
            if a[i][col] != 0:
                t = exgcd_matrix(a[pivot_row][col], a[i][col])
                _combine_rows(a, pivot_row, i, t)
                _combine_rows(s, pivot_row, i, t)

        p = a[pivot_row][col]
        if p == 0:
            continue

        if p < 0:
            a[pivot_row] = [-x for x in a[pivot_row]]
            s[pivot_row] = [-x for x in s[pivot_row]]
            p = -p

        for i in range(pivot_row):
            q = a[i][col] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[pivot_row])]
                s[i] = [x - q * y for x, y in zip(s[i], s[pivot_row])]

        pivot_row += 1

    return a, s


def hermite_reduce(vectors: Sequence[Sequence[int]], rank: int) -> List[Vector]:
    """Hermite reduced basis of the lattice spanned by independent vectors."""
    h, _ = hermite_form(vectors, rank)
    return [tuple(r) for r in h if any(r)]


def unimodular_completion(rays: Sequence[Sequence[int]], rank: int):
    """Return S unimodular with <S[a], rays[b]> = delta_ab for a < r and
    <S[k], rays[b]> = 0 for k >= r, or None if the rays do not extend to a
    basis of Z^rank.
    """
    r = len(rays)
    if r > rank:
        return None

    # Rays as columns: A is rank x r.
    a = [[ray[row] for ray in rays] for row in range(rank)]
    h, s = hermite_form(a, r)

    for i in range(rank):
        for j in range(r):
            if h[i][j] != int(i == j):
                return None

    return [tuple(row) for row in s]


def elementary_divisors(vectors: Sequence[Sequence[int]], rank: int) -> List[int]:
    """Diagonal of the Smith normal form of the matrix with given rows."""
    if not vectors:
        return []

    snf = smith_normal_form(Matrix([list(v) for v in vectors]), domain=ZZ)
    return [abs(int(snf[i, i])) for i in range(min(len(vectors), rank))]


def inverse_rows(rows: Sequence[Sequence[int]]) -> List[Vector]:
    """Exact inverse of a unimodular integer matrix."""
    if not rows:
        return []

    inv = Matrix([list(r) for r in rows]).inv()
    return [tuple(int(inv[i, j]) for j in range(inv.cols)) for i in range(inv.rows)]


def nullspace(columns: Sequence[Sequence[int]], rank: int):
    """Rational nullspace of the matrix whose columns are given."""
    m = Matrix([[c[row] for c in columns] for row in range(rank)])
    return [list(v) for v in m.nullspace()]
