from fractions import Fraction

import pytest

from libs import PoleAt, NonIntegralCoefficient, InconsistentSamples, OutOfRange
from libs import lattice_fan as lf
from libs import zeta_engine as ze
from libs.zeta_engine import CountPolynomial, ZetaFunction
from libs.quadric_strata import quadric_count_poly
from tests import tdata
from tests import utils


def test_count_polynomial_arithmetic():
    assert CountPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert CountPolynomial((0, 0)).coefficients == ()
    assert CountPolynomial((0, 0)).degree == -1
    assert (ze.X + ze.ONE).coefficients == (1, 1)
    assert (ze.X_MINUS_ONE ** 2).coefficients == (1, -2, 1)
    assert (ze.X * ze.X_MINUS_ONE).coefficients == (0, -1, 1)
    assert ze.X_MINUS_ONE ** 0 == ze.ONE
    assert CountPolynomial((1, 1, 1))(2) == 7
    assert str(CountPolynomial((1, -1, 1))) == 'x**2 - x + 1'


def test_chart_count_poly():
    assert ze.chart_count_poly(lf.ZERO_CONE, 2).coefficients == (1, -2, 1)
    assert ze.chart_count_poly(lf.make_cone([(1, 0), (0, 1)]), 2).coefficients == (0, 0, 1)
    assert ze.chart_count_poly(lf.make_cone([(1, 0)]), 2).coefficients == (0, -1, 1)


def test_fan_count_poly():
    assert ze.fan_count_poly(lf.standard_fan('projective', 1)).coefficients == (1, 1)
    assert ze.fan_count_poly(lf.standard_fan('projective', 2)).coefficients == (1, 1, 1)
    assert ze.fan_count_poly(lf.standard_fan('torus', 2)).coefficients == (1, -2, 1)
    assert ze.fan_count_poly(lf.standard_fan('affine', 3)).coefficients == (0, 0, 0, 1)


def test_projective_zeta():
    s = ze.s
    for d in range(1, 5):
        n = ze.fan_count_poly(lf.standard_fan('projective', d))
        assert n.coefficients == (1, ) * (d + 1)

        z = ze.zeta(n)
        assert z.factors == tuple((i, 1) for i in range(d + 1))

        expected = 1
        for i in range(d + 1):
            expected *= (s - i)
        assert (z.as_expr() - expected).expand() == 0


def test_zeta_examples():
    assert ze.zeta(CountPolynomial((-1, 1))).factors == ((0, -1), (1, 1))
    assert ze.zeta(ze.X).factors == ((1, 1), )
    assert ze.zeta(ze.ONE).factors == ((0, 1), )
    assert ze.zeta(CountPolynomial()).factors == ()


def test_zeta_function():
    z = ZetaFunction(((1, 1), (0, -1), (1, 1), (3, 0)))
    assert z.factors == ((0, -1), (1, 2))
    assert z.order_at(1) == 2
    assert z.order_at(5) == 0
    assert z.evaluate(3) == Fraction(4, 3)
    assert z.evaluate(1) == 0
    assert abs(z.evaluate(2.5) - 2.25 / 2.5) < 1e-12

    with pytest.raises(PoleAt):
        z.evaluate(0)

    assert (z * ZetaFunction(((0, 1), ))).factors == ((1, 2), )


def test_zeta_of_product():
    # N is multiplicative on products, zeta turns products into tensor products.
    fans = utils.small_fans()
    for (name_f, f) in fans:
        for (name_g, g) in fans:
            nf = ze.fan_count_poly(f)
            ng = ze.fan_count_poly(g)
            nfg = ze.fan_count_poly(lf.fan_product(f, g))
            assert nfg == nf * ng, (name_f, name_g)
            assert ze.zeta(nfg) == ze.zeta(nf).tensor(ze.zeta(ng))


def test_zeta_of_product_examples():
    a1 = ze.zeta(ze.X)
    gm = ze.zeta(ze.X_MINUS_ONE)
    p1 = ze.zeta(ze.fan_count_poly(lf.standard_fan('projective', 1)))

    # A^1 x A^1
    assert a1.tensor(a1).factors == ((2, 1), )
    # A^1 x G_m: x^2 - x
    assert a1.tensor(gm).factors == ((1, -1), (2, 1))
    # P^1 x P^1: x^2 + 2x + 1, not the factor-wise product s^2 (s-1)^2.
    assert p1.tensor(p1).factors == ((0, 1), (1, 2), (2, 1))
    assert p1.tensor(p1) != p1 * p1


def test_zeta_of_disjoint_union():
    # P^1 = A^1 + point
    p1 = ze.fan_count_poly(lf.standard_fan('projective', 1))
    assert ze.zeta(p1) == ze.zeta(ze.X) * ze.zeta(ze.ONE)


def test_euler_char():
    assert ze.euler_char(ze.fan_count_poly(lf.standard_fan('projective', 2))) == 3
    for d in range(1, 4):
        assert ze.euler_char(ze.X_MINUS_ONE ** d) == 0
    assert ze.euler_char(quadric_count_poly()) == 6


def test_euler_char_counts_maximal_cones():
    fans = utils.complete_fans()
    fans.append(('projective(4)', lf.standard_fan('projective', 4)))
    assert len(fans) == 5

    for (name, f) in fans:
        assert ze.euler_char(ze.fan_count_poly(f)) == len(lf.maximal_cones(f)), name

    for d in range(1, 4):
        assert ze.euler_char(ze.fan_count_poly(lf.standard_fan('torus', d))) == 0


def test_orbit_filtration():
    for (name, f) in utils.corpus_fans():
        strata = ze.orbit_filtration(f)
        assert len(strata) == f.rank + 1

        total = CountPolynomial()
        for p in strata:
            total = total + p
        assert total == ze.fan_count_poly(f), name

    strata = ze.orbit_filtration(lf.standard_fan('projective', 2))
    assert [p.coefficients for p in strata] == [(1, -2, 1), (-3, 3), (3, )]


def test_weil_series():
    # Z(q, T) = 1 / ((1 - T)(1 - qT)) for P^1.
    p1 = ze.fan_count_poly(lf.standard_fan('projective', 1))
    for q in (2, 3):
        z = ze.weil_series(p1, q, 6)
        assert z == [sum(Fraction(q) ** i for i in range(k + 1)) for k in range(6)]

    # G_m: (1 - T) / (1 - qT)
    z = ze.weil_series(ze.X_MINUS_ONE, 5, 4)
    assert z == [1, 4, 20, 100]

    assert ze.weil_series(ze.ONE, 7, 3) == [1, 1, 1]


def test_weil_limit_examples():
    assert abs(ze.weil_limit(ze.ONE, 5) - 5.0) < 1e-6
    assert abs(ze.weil_limit(ze.X, 3) - 2.0) < 1e-6
    p1 = ze.fan_count_poly(lf.standard_fan('projective', 1))
    assert abs(ze.weil_limit(p1, 4) - 12.0) < 1e-5 * 12


def test_weil_limit_matches_zeta():
    for coefficients in tdata.weil_polys:
        n = CountPolynomial(coefficients)
        z = ze.zeta(n)
        for value in tdata.weil_points:
            expected = z.evaluate(value)
            got = ze.weil_limit(n, value, 1e-3)
            assert abs(got - expected) <= 1e-5 * abs(expected), (coefficients, value)


def test_weil_limit_errors():
    gm = ze.X_MINUS_ONE
    with pytest.raises(PoleAt):
        ze.weil_limit(gm, 0)

    assert ze.weil_limit(gm, 1) == 0.0

    with pytest.raises(OutOfRange):
        ze.weil_limit(gm, 3, eps=0.5)

    with pytest.raises(OutOfRange):
        ze.weil_limit(gm, 3, eps=0)


def test_interpolate_count_poly():
    assert ze.interpolate_count_poly([(2, 3), (3, 4)], 1).coefficients == (1, 1)
    assert ze.interpolate_count_poly([(2, 7), (3, 13), (5, 31)], 2).coefficients == (1, 1, 1)
    assert ze.interpolate_count_poly([(2, 7), (3, 13), (5, 31), (7, 57)], 2).coefficients == (1, 1, 1)
    assert ze.interpolate_count_poly([(3, 1)], 0) == ze.ONE
    # Degree bound is an upper bound.
    assert ze.interpolate_count_poly([(1, 1), (2, 2), (3, 3)], 2) == ze.X

    with pytest.raises(NonIntegralCoefficient):
        ze.interpolate_count_poly([(2, 1), (4, 2)], 1)

    with pytest.raises(InconsistentSamples):
        ze.interpolate_count_poly([(2, 3), (3, 4), (4, 6)], 1)

    with pytest.raises(InconsistentSamples):
        ze.interpolate_count_poly([(2, 3), (2, 4), (3, 5)], 1)

    with pytest.raises(OutOfRange):
        ze.interpolate_count_poly([(2, 3), (2, 3)], 1)


def test_interpolate_recovers_fan_polynomials():
    for (name, f) in utils.corpus_fans():
        n = ze.fan_count_poly(f)
        samples = [(p, n(p)) for p in tdata.primes]
        assert ze.interpolate_count_poly(samples, f.rank) == n, name
