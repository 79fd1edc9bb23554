"""Counting polynomials N(x) and zeta functions zeta_X(s) = prod (s - i)^a_i."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import Poly, QQ, ZZ, Symbol, Mul, Integer
from sympy.polys.polyfuncs import interpolate

import settings
from libs import PoleAt, NonIntegralCoefficient, InconsistentSamples, OutOfRange
from libs import lattice_fan as lf
from libs.lattice_fan import Cone, Fan
from libs.logger import logger

x = Symbol('x')
s = Symbol('s')


@dataclass(frozen=True)
class CountPolynomial:
    """N(x) in Z[x], coefficients a_0, a_1, ... from low to high degree."""
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(coeffs))

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(tuple(reversed(p.all_coeffs())))

    def as_poly(self) -> Poly:
        return Poly(list(reversed(self.coefficients)) or [0], x, domain=ZZ)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, value):
        return sum(c * value ** i for i, c in enumerate(self.coefficients))

    def __add__(self, other):
        return CountPolynomial.from_poly(self.as_poly() + other.as_poly())

    def __mul__(self, other):
        return CountPolynomial.from_poly(self.as_poly() * other.as_poly())

    def __pow__(self, k: int):
        return CountPolynomial.from_poly(self.as_poly() ** k)

    def __str__(self):
        return str(self.as_poly().as_expr())


ONE = CountPolynomial((1,))
X = CountPolynomial((0, 1))
X_MINUS_ONE = CountPolynomial((-1, 1))


@dataclass(frozen=True)
class ZetaFunction:
    """prod (s - i)^a_i, factors (i, a_i) with strictly increasing i, a_i != 0."""
    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        merged = {}
        for root, mult in self.factors:
            merged[root] = merged.get(root, 0) + mult
        object.__setattr__(self, 'factors', tuple(sorted((r, m) for r, m in merged.items() if m)))

    def __mul__(self, other):
        """Zeta function of a disjoint union."""
        return ZetaFunction(self.factors + other.factors)

    def tensor(self, other):
        """Zeta function of a product: prod (s - i - j)^(a_i b_j)."""
        return ZetaFunction(tuple((i + j, a * b)
                                  for i, a in self.factors
                                  for j, b in other.factors))

    def order_at(self, root: int) -> int:
        return dict(self.factors).get(root, 0)

    def evaluate(self, value):
        """Exact for int/Fraction arguments, float otherwise."""
        if isinstance(value, int):
            value = Fraction(value)

        result = 1
        for root, mult in self.factors:
            if value == root:
                if mult < 0:
                    raise PoleAt("Zeta function has a pole of order {} at s = {}.".format(-mult, root))
                return 0
            result *= (value - root) ** mult

        return result

    def as_expr(self):
        return Mul(*[(s - Integer(root)) ** mult for root, mult in self.factors])

    def __str__(self):
        return str(self.as_expr())


def chart_count_poly(c: Cone, d: int) -> CountPolynomial:
    """x^A (x-1)^B: A affine generators range over mu + {0} (or F_q), B unit
    generators over mu (or F_q^*).
    """
    m = lf.dual_monoid(c, d)
    return X ** len(m.affine_gens) * X_MINUS_ONE ** len(m.unit_gens)


def fan_count_poly(f: Fan) -> CountPolynomial:
    """Sum of (x-1)^(d - dim sigma) over the torus orbits, one per cone."""
    n = CountPolynomial()
    for sigma in f.cones:
        n = n + X_MINUS_ONE ** (f.rank - sigma.dim)

    return n


def orbit_filtration(f: Fan) -> List[CountPolynomial]:
    """Counting polynomials of Y_k - Y_(k-1), the union of the torus orbits of
    dimension d - k, for k = 0..d.
    """
    by_dim = lf.cones_by_dim(f)
    return [CountPolynomial((len(by_dim[k]),)) * X_MINUS_ONE ** (f.rank - k)
            for k in range(f.rank + 1)]


def zeta(n: CountPolynomial) -> ZetaFunction:
    return ZetaFunction(tuple((i, a) for i, a in enumerate(n.coefficients) if a))


def euler_char(n: CountPolynomial) -> int:
    return n(1)


def weil_series(n: CountPolynomial, q, terms: int) -> List[Fraction]:
    """First `terms` coefficients of Z(q, T) = exp(sum N(q^r) T^r / r).

    Uses k z_k = sum_{r=1..k} N(q^r) z_(k-r), from Z' = Z * (log Z)'.
    """
    q = Fraction(q)
    counts = [n(q ** r) for r in range(terms)]
    z = [Fraction(1)]
    for k in range(1, terms):
        z.append(sum(counts[r] * z[k - r] for r in range(1, k + 1)) / k)

    return z[:terms]


def _weil_ratio(n: CountPolynomial, value: float, eps: float) -> float:
    # prod (1 - q^(i-s))^a_i / (q-1)^chi with q = 1 + eps, chi = sum a_i.
    lq = math.log1p(eps)
    result = 1.0
    for i, a in enumerate(n.coefficients):
        if a:
            result *= (-math.expm1((i - value) * lq) / eps) ** a

    return result


def weil_limit(n: CountPolynomial, value: float, eps: float = None, levels: int = None) -> float:
    """lim_{q->1} Z(q, q^-s)^-1 (q-1)^-N(1), by Richardson extrapolation over
    eps, eps/2, ..., eps/2^levels.
    """
    if eps is None:
        eps = settings.WEIL_EPS
    if levels is None:
        levels = settings.WEIL_RICHARDSON_LEVELS

    if not 0 < eps < 0.1:
        raise OutOfRange("Step must be in (0, 0.1), got {}.".format(eps))

    for i, a in enumerate(n.coefficients):
        if value == i:
            if a < 0:
                raise PoleAt("Zeta function of {} has a pole at s = {}.".format(n, i))
            if a > 0:
                return 0.0

    table = [_weil_ratio(n, value, eps / 2 ** j) for j in range(levels + 1)]
    for level in range(1, levels + 1):
        w = 2 ** level
        table = [(w * table[j + 1] - table[j]) / (w - 1) for j in range(len(table) - 1)]

    logger.debug("Weil limit of {} at s = {}: {}".format(n, value, table[0]))
    return table[0]


def interpolate_count_poly(samples: Sequence[Tuple[int, int]], degree_bound: int) -> CountPolynomial:
    """Exact integer polynomial of degree <= degree_bound through the samples."""
    points = {}
    for xv, yv in samples:
        if xv in points and points[xv] != yv:
            raise InconsistentSamples("Two counts {} and {} at x = {}.".format(points[xv], yv, xv))
        points[xv] = yv

    if len(points) < degree_bound + 1:
        raise OutOfRange("Need {} distinct samples, got {}.".format(degree_bound + 1, len(points)))

    items = list(points.items())
    base, extra = items[:degree_bound + 1], items[degree_bound + 1:]

    p = Poly(interpolate(base, x), x, domain=QQ)
    coeffs = []
    for c in reversed(p.all_coeffs()):
        if c.q != 1:
            raise NonIntegralCoefficient("Coefficient {} of {} is not an integer.".format(c, p.as_expr()))
        coeffs.append(int(c.p))

    result = CountPolynomial(tuple(coeffs))
    for xv, yv in extra:
        if result(xv) != yv:
            raise InconsistentSamples("{} gives {} at x = {}, sample says {}.".format(result, result(xv), xv, yv))

    return result
