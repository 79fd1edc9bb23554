from fractions import Fraction

import pytest

from libs import OutOfRange
from libs import stable_jhom as sj
from tests import tdata


def test_bernoulli():
    assert sj.bernoulli(0) == 1
    assert sj.bernoulli(1) == Fraction(-1, 2)
    assert sj.bernoulli(2) == Fraction(1, 6)
    assert sj.bernoulli(3) == 0
    assert sj.bernoulli(4) == Fraction(-1, 30)
    assert sj.bernoulli(6) == Fraction(1, 42)
    assert sj.bernoulli(12) == Fraction(-691, 2730)

    with pytest.raises(OutOfRange):
        sj.bernoulli(-2)


def test_w_bernoulli():
    for i, w in tdata.w.items():
        assert sj.w_bernoulli(i) == w

    for i in (0, 3):
        with pytest.raises(OutOfRange):
            sj.w_bernoulli(i)


def test_w_gcd_examples():
    assert sj.w_gcd(2, 10, 100) == 24
    assert sj.w_gcd(4, 10, 100) == 240
    assert sj.w_gcd(6, 12, 200) == 504

    with pytest.raises(OutOfRange):
        sj.w_gcd(3, 10, 100)

    with pytest.raises(OutOfRange):
        sj.w_gcd(2, 0, 100)


def test_w_gcd_equals_w_bernoulli():
    for i, w in tdata.w.items():
        assert sj.w_gcd(i, i + 8, 200) == w == sj.w_bernoulli(i)


def test_w_gcd_nonincreasing_in_nmax():
    for i in (2, 4):
        values = [sj.w_gcd(i, i + 8, nmax) for nmax in (3, 5, 10, 50, 200)]
        assert all(a % b == 0 for a, b in zip(values, values[1:]))
        assert values == sorted(values, reverse=True)
        assert values[-1] == sj.w_bernoulli(i)


def test_small_j_is_not_stable():
    # 2^(i+j) - 2^j is divisible by 2^j only.
    assert sj.w_gcd(4, 1, 200) != 240


def test_stable_w_gcd():
    for i, w in tdata.w.items():
        g, j = sj.stable_w_gcd(i)
        assert g == w
        assert j >= i + 8


def test_staudt_clausen():
    for i in range(2, 13, 2):
        assert sj.bernoulli(i).denominator == sj.staudt_clausen_denominator(i)

    assert sj.staudt_clausen_denominator(12) == 2730


def test_image_of_j_order():
    assert sj.image_of_j_order(1) == 2
    assert sj.image_of_j_order(3) == 24
    assert sj.image_of_j_order(5) == 1
    assert sj.image_of_j_order(7) == 240
    assert sj.image_of_j_order(8) == 2
    assert sj.image_of_j_order(9) == 2
    assert sj.image_of_j_order(11) == 504
    assert sj.image_of_j_order(15) == 480

    with pytest.raises(OutOfRange):
        sj.image_of_j_order(0)
