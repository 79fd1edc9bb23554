"""F1-varieties X(Lambda) of hermitian lattices.

Phi is a half set of the non zero lattice vectors of norm <= 1. A point of
X(Lambda) over R_n is an element sum_{v in Phi} v (x) zeta_v of Lambda (x) R_n,
zeta_v in mu(R_n) + {0}. Grouping by powers of T, such a point is an ordered
choice of non zero signed subset sums of pairwise disjoint parts of Phi, so

    #X(Lambda)(R_n) = 1 + sum_k #T(k) C(n, k)

where T(k) is the set of realizable ordered k-tuples.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, isqrt
from typing import List, Sequence, Set, Tuple

from sympy import Matrix, Rational

import settings
from libs import BadRank, OutOfRange, TooLarge, InvalidGram, InvalidPhi
from libs import utils
from libs.f1_points import ZERO, check_index, mu_elements
from libs.logger import logger
from libs.utils import Vector
from libs.zeta_engine import CountPolynomial, ZetaFunction, interpolate_count_poly, zeta


@dataclass(frozen=True)
class GramForm:
    rank: int
    gram: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.gram)
        object.__setattr__(self, 'gram', rows)

        if len(rows) != self.rank or any(len(r) != self.rank for r in rows):
            raise BadRank("Gram matrix must be {0}x{0}.".format(self.rank))

        for i in range(self.rank):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidGram("Gram matrix is not symmetric at ({}, {}).".format(i, j))

        m = self.as_matrix()
        for k in range(1, self.rank + 1):
            if m[:k, :k].det() <= 0:
                raise InvalidGram("Leading minor of order {} is not positive.".format(k))

    def as_matrix(self) -> Matrix:
        return Matrix([[Rational(c.numerator, c.denominator) for c in row] for row in self.gram])

    def norm2(self, v: Sequence[int]) -> Fraction:
        return sum(self.gram[i][j] * v[i] * v[j]
                   for i in range(self.rank) for j in range(self.rank))


@dataclass(frozen=True)
class PhiSystem:
    rank: int
    vectors: Tuple[Vector, ...] = ()

    def __post_init__(self):
        vectors = tuple(tuple(int(c) for c in v) for v in self.vectors)
        utils.check_lengths(vectors, self.rank)

        seen = set()
        for v in vectors:
            if not any(v):
                raise InvalidPhi("Zero vector in Phi.")
            if v in seen:
                raise InvalidPhi("Vector {} repeated in Phi.".format(list(v)))
            if utils.neg(v) in seen:
                raise InvalidPhi("Vectors {} and {} are antipodal.".format(list(v), list(utils.neg(v))))
            seen.add(v)

        object.__setattr__(self, 'vectors', vectors)

    @property
    def t(self) -> int:
        return len(self.vectors)


def _ceil_sqrt(r: Fraction) -> int:
    b = isqrt(r.numerator // r.denominator)
    while b * b * r.denominator < r.numerator:
        b += 1

    return b


def ball_points(g: GramForm) -> List[Vector]:
    """Non zero v in Z^m with v^T G v <= 1, searched in the box
    |v_i| <= ceil(sqrt((G^-1)_ii)).
    """
    inv = g.as_matrix().inv()
    bounds = [_ceil_sqrt(Fraction(int(inv[i, i].p), int(inv[i, i].q))) for i in range(g.rank)]

    points = []
    for v in product(*[range(-b, b + 1) for b in bounds]):
        if any(v) and g.norm2(v) <= 1:
            points.append(v)

    logger.debug("{} lattice points in the unit ball, box {}.".format(len(points), bounds))
    return points


def _is_positive(v: Vector) -> bool:
    for c in v:
        if c:
            return c > 0

    return False


def choose_phi(points: Sequence[Sequence[int]], rank: int = None) -> PhiSystem:
    vectors = sorted(set(tuple(v) for v in points if _is_positive(tuple(v))))
    if rank is None:
        if not points:
            raise BadRank("Rank of an empty point set must be given.")
        rank = len(points[0])

    return PhiSystem(rank=rank, vectors=tuple(vectors))


def gram_phi(g: GramForm) -> PhiSystem:
    return choose_phi(ball_points(g), rank=g.rank)


def rank1_gram(norm) -> GramForm:
    """Z with ||1|| = norm."""
    norm = Fraction(norm)
    return GramForm(rank=1, gram=((norm * norm,),))


def _add(a: Vector, b: Vector, sign: int) -> Vector:
    return tuple(x + sign * y for x, y in zip(a, b))


def signed_sums(phi_subset: Sequence[Sequence[int]]) -> Set[Vector]:
    if not phi_subset:
        return set()

    rank = len(phi_subset[0])
    sums = {(0,) * rank}
    for v in phi_subset:
        sums = {_add(acc, tuple(v), sign) for acc in sums for sign in (1, -1)}

    sums.discard((0,) * rank)
    return sums


@lru_cache(maxsize=None)
def tuple_count(phi: PhiSystem, k: int) -> int:
    """#T(k): ordered k-tuples (v_1..v_k), v_j a non zero signed sum of Phi_j,
    Phi_1..Phi_k pairwise disjoint.

    Each vector of Phi is left out or put, with a sign, into one of the k slots;
    distinct partial slot sums are kept, so equal tuples reached by different
    assignments are counted once.
    """
    if not 0 <= k <= phi.t:
        raise OutOfRange("k = {} not in [0, {}].".format(k, phi.t))

    zero = (0,) * phi.rank
    states = {(zero,) * k}
    for v in phi.vectors:
        grown = set(states)
        for st in states:
            for slot in range(k):
                for sign in (1, -1):
                    grown.add(st[:slot] + (_add(st[slot], v, sign),) + st[slot + 1:])
        states = grown

    return sum(1 for st in states if all(any(c) for c in st))


def count_points_formula(phi: PhiSystem, n: int) -> int:
    check_index(n)
    return 1 + sum(tuple_count(phi, k) * comb(n, k) for k in range(1, phi.t + 1))


def count_points_oracle(phi: PhiSystem, n: int) -> int:
    """Number of distinct sum_{v in Phi} v (x) zeta_v, as m x n coefficient arrays."""
    check_index(n)
    if (2 * n + 1) ** phi.t > settings.HERMITIAN_ORACLE_BUDGET:
        raise TooLarge("{} assignments exceed the enumeration budget.".format((2 * n + 1) ** phi.t))

    choices = [ZERO] + mu_elements(n)
    points = set()
    for assignment in product(choices, repeat=phi.t):
        x = [[0] * n for _ in range(phi.rank)]
        for v, z in zip(phi.vectors, assignment):
            if z is ZERO:
                continue
            for i, c in enumerate(v):
                x[i][z.exponent] += z.sign * c

        points.add(tuple(tuple(row) for row in x))

    return len(points)


def count_poly(phi: PhiSystem) -> CountPolynomial:
    """N(x) with N(2n+1) = #X(Lambda)(R_n), interpolated at n = 1..t+2."""
    samples = [(2 * n + 1, count_points_formula(phi, n)) for n in range(1, phi.t + 3)]
    return interpolate_count_poly(samples, phi.t)


def standard_phi(t: int) -> PhiSystem:
    """Phi_t = {1, ..., t} in Z."""
    return PhiSystem(rank=1, vectors=tuple((i,) for i in range(1, t + 1)))


def rank1_count_poly(t: int) -> CountPolynomial:
    """Counting polynomial of Z with the rank 1 metric giving Phi_t."""
    if not 0 <= t <= 6:
        raise OutOfRange("t must be in [0, 6], got {}.".format(t))

    return count_poly(standard_phi(t))


def zeta_rank1(t: int) -> ZetaFunction:
    return zeta(rank1_count_poly(t))
