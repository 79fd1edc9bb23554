"""F1^n-points of toric F1-varieties.

R_n = Z[T]/(T^n - 1) has roots of unity mu(R_n) = {+-T^i}. A point of the
chart U_tau with values in R_n is a monoid homomorphism S_tau -> mu(R_n) + {0},
given by its values on the generators of `dual_monoid(tau)`.

Charts glue along common faces. A point is identified across charts by its
canonical form: the support cone sigma (rays whose affine generator vanishes)
and the values of the point on the Hermite reduced basis of sigma^perp cap M
(the unit generators of `dual_monoid(sigma)`). The canonical form of a point is
an `OrbitPoint`, so gluing is a set union.
"""

import cmath
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, List, Sequence, Tuple, Union

import settings
from libs import NotInMonoid, OutOfRange
from libs import lattice_fan as lf
from libs.lattice_fan import Cone, Fan, MonoidPresentation
from libs.logger import logger


@dataclass(frozen=True, order=True)
class MuElement:
    """The root of unity sign * T^exponent of R_n."""
    sign: int
    exponent: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange("Cyclotomic index must be >= 1, got {}.".format(self.n))
        if self.sign not in (1, -1):
            raise OutOfRange("Sign must be +1 or -1, got {}.".format(self.sign))
        object.__setattr__(self, 'exponent', self.exponent % self.n)

    def __mul__(self, other):
        return MuElement(self.sign * other.sign, self.exponent + other.exponent, self.n)

    def __pow__(self, k: int):
        sign = self.sign if k % 2 else 1
        return MuElement(sign, self.exponent * k, self.n)

    def embed(self, k: int) -> complex:
        """Image under sigma_k: T -> exp(2 pi i k / n)."""
        return self.sign * cmath.exp(2j * cmath.pi * k * self.exponent / self.n)

    def __str__(self):
        s = '-' if self.sign < 0 else '+'
        return '{}T^{}'.format(s, self.exponent)


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return '0'


ZERO = Zero()

MuOrZero = Union[MuElement, Zero]


@dataclass(frozen=True)
class ChartPoint:
    chart: MonoidPresentation
    affine_values: Tuple[MuOrZero, ...]
    unit_values: Tuple[MuElement, ...]
    n: int

    @property
    def cone(self) -> Cone:
        return self.chart.cone


@dataclass(frozen=True, order=True)
class OrbitPoint:
    """Point of the torus orbit of `support`, by its values on the Hermite
    reduced basis of support^perp cap M.
    """
    support: Cone
    torus_values: Tuple[MuElement, ...]
    n: int


def check_index(n: int) -> None:
    if n < 1:
        raise OutOfRange("Cyclotomic index must be >= 1, got {}.".format(n))


def mu_elements(n: int) -> List[MuElement]:
    check_index(n)
    return [MuElement(sign, i, n) for sign in (1, -1) for i in range(n)]


def chart_points(m: MonoidPresentation, n: int) -> List[ChartPoint]:
    mu = mu_elements(n)
    affine_choices = [ZERO] + mu
    points = []
    for av in product(affine_choices, repeat=len(m.affine_gens)):
        for uv in product(mu, repeat=len(m.unit_gens)):
            points.append(ChartPoint(chart=m, affine_values=av, unit_values=uv, n=n))

    return points


def orbit_points(f: Fan, n: int) -> List[OrbitPoint]:
    mu = mu_elements(n)
    points = []
    for sigma in f.cones:
        for values in product(mu, repeat=f.rank - sigma.dim):
            points.append(OrbitPoint(support=sigma, torus_values=values, n=n))

    return points


@lru_cache(maxsize=None)
def support_transform(chart: MonoidPresentation, zero_mask: Tuple[bool, ...]):
    """Return the support cone of chart points vanishing exactly on the affine
    generators flagged in `zero_mask`, and the exponents expressing each
    Hermite reduced basis vector of support^perp in the chart basis.
    """
    support = Cone(tuple(r for r, z in zip(chart.cone.rays, zero_mask) if z))
    torus_basis = lf.dual_monoid(support, chart.rank).unit_gens
    return support, tuple(chart.coordinates(b) for b in torus_basis)


def canonical_values(chart: MonoidPresentation,
                     affine_values: Sequence,
                     unit_values: Sequence,
                     is_zero: Callable,
                     power: Callable,
                     multiply: Callable,
                     one):
    """Canonical (support, torus values) of a chart point with values in any
    commutative monoid whose non zero elements form a group.

    Basis vectors of support^perp pair to zero with the vanishing rays, so only
    invertible values are raised to (possibly negative) powers.
    """
    mask = tuple(bool(is_zero(v)) for v in affine_values)
    support, exponents = support_transform(chart, mask)

    values = list(affine_values) + list(unit_values)
    torus_values = []
    for coords in exponents:
        acc = one
        for v, c in zip(values, coords):
            if c:
                acc = multiply(acc, power(v, c))
        torus_values.append(acc)

    return support, tuple(torus_values)


def canonical_point(p: ChartPoint) -> OrbitPoint:
    support, values = canonical_values(p.chart,
                                       p.affine_values,
                                       p.unit_values,
                                       is_zero=lambda v: v is ZERO,
                                       power=lambda v, c: v ** c,
                                       multiply=lambda a, b: a * b,
                                       one=MuElement(1, 0, p.n))
    return OrbitPoint(support=support, torus_values=values, n=p.n)


def glued_points(f: Fan, n: int) -> set:
    check_index(n)
    points = set()
    for tau in lf.maximal_cones(f):
        chart = lf.dual_monoid(tau, f.rank)
        for p in chart_points(chart, n):
            points.add(canonical_point(p))

    logger.debug("{} F1^{}-points on a fan with {} cones.".format(len(points), n, len(f.cones)))
    return points


def extend_point(p: OrbitPoint, n: int) -> OrbitPoint:
    """Image of a point under R_m -> R_n, T -> T^(n/m), for m = p.n dividing n."""
    if n % p.n:
        raise OutOfRange("{} does not divide {}.".format(p.n, n))

    scale = n // p.n
    values = tuple(MuElement(v.sign, v.exponent * scale, n) for v in p.torus_values)
    return OrbitPoint(support=p.support, torus_values=values, n=n)


def evaluate(p: ChartPoint, k: int, m: Sequence[int]) -> complex:
    """Value of chi^m at p under the embedding sigma_k of R_n into C."""
    if not 0 <= k < p.n:
        raise OutOfRange("Embedding index {} not in [0, {}).".format(k, p.n))

    if len(m) != p.chart.rank:
        raise NotInMonoid("Character {} is not in M of rank {}.".format(tuple(m), p.chart.rank))

    coords = p.chart.coordinates(m)
    r = len(p.affine_values)
    if any(c < 0 for c in coords[:r]):
        raise NotInMonoid("Character {} is not in S_tau of cone {}.".format(tuple(m), p.cone))

    sign = 1
    exponent = 0
    for v, c in zip(list(p.affine_values) + list(p.unit_values), coords):
        if not c:
            continue
        if v is ZERO:
            return 0j

        if c % 2:
            sign *= v.sign
        exponent += c * v.exponent

    return MuElement(sign, exponent, p.n).embed(k)


def in_compact(p: ChartPoint, k: int) -> bool:
    """True if p lies in the compact C_tau under sigma_k: |chi^m(p)| <= 1 for
    every generator m of S_tau.
    """
    bound = 1 + settings.COMPACT_TOLERANCE
    return all(abs(evaluate(p, k, m)) <= bound for m in p.chart.generators())
