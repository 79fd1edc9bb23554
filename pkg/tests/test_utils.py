from sympy import Matrix

from libs import utils as lu
from tests import utils


def _det2(m):
    (p, q), (r, s) = m
    return p * s - q * r


def test_exgcd_matrix():
    for a, b, g in [(12, 18, 6), (0, 5, 5), (5, 0, 5), (0, -5, 5), (-4, 6, 2),
                    (6, -4, 2), (7, 3, 1), (1, 0, 1), (-1, -1, 1)]:
        m = lu.exgcd_matrix(a, b)
        assert _det2(m) == 1, (a, b)
        assert utils.apply_matrix(m, (a, b)) == (g, 0), (a, b)
        assert all(type(e) is int for row in m for e in row)

    assert lu.exgcd_matrix(0, 0) == ((1, 0), (0, 1))


def test_hermite_form():
    for rows in ([[2, 4], [1, 3]],
                 [[0, 3], [0, 6]],
                 [[1, 1, 0], [0, 1, 1], [1, 0, 1]],
                 [[4, 6, 2], [2, 3, 1]]):
        ncols = len(rows[0])
        h, s = lu.hermite_form(rows, ncols)
        assert Matrix(s) * Matrix(rows) == Matrix(h)
        assert abs(Matrix(s).det()) == 1

        # Echelon with positive pivots, entries above a pivot reduced.
        last = -1
        for i, row in enumerate(h):
            if not any(row):
                assert all(not any(r) for r in h[i:])
                break
            col = next(j for j, x in enumerate(row) if x)
            assert col > last
            assert row[col] > 0
            assert all(0 <= h[k][col] < row[col] for k in range(i))
            last = col


def test_unimodular_completion():
    s = lu.unimodular_completion([(1, 2)], 2)
    assert lu.dot(s[0], (1, 2)) == 1
    assert lu.dot(s[1], (1, 2)) == 0
    assert abs(Matrix(s).det()) == 1

    assert lu.unimodular_completion([(2, 0)], 2) is None
    assert lu.unimodular_completion([(1, 0), (0, 1), (1, 1)], 2) is None
