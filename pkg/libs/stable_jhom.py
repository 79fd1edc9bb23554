"""Orders of the image of the J-homomorphism.

w_i is the denominator of b_i / 2i (b_i the Bernoulli numbers). It is also
the gcd of the integers n^(i+j) - n^j, n > 1, once j is large enough.
"""

from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, gcd
from typing import Tuple

from sympy import divisors, isprime

import settings
from libs import OutOfRange


@lru_cache(maxsize=None)
def bernoulli(i: int) -> Fraction:
    """B_i from sum_{j=0..m} C(m+1, j) B_j = 0, so B_1 = -1/2."""
    if i < 0:
        raise OutOfRange("Bernoulli index must be >= 0, got {}.".format(i))
    if i == 0:
        return Fraction(1)
    if i > 1 and i % 2:
        return Fraction(0)

    total = sum(comb(i + 1, j) * bernoulli(j) for j in range(i))
    return -total / (i + 1)


def _check_even(i: int) -> None:
    if i < 2 or i % 2:
        raise OutOfRange("Index must be even and >= 2, got {}.".format(i))


def w_bernoulli(i: int) -> int:
    _check_even(i)
    return (bernoulli(i) / (2 * i)).denominator


def w_gcd(i: int, j: int, nmax: int) -> int:
    _check_even(i)
    if j < 1 or nmax < 3:
        raise OutOfRange("Need j >= 1 and nmax >= 3, got j = {}, nmax = {}.".format(j, nmax))

    return reduce(gcd, (n ** (i + j) - n ** j for n in range(2, nmax + 1)))


def stable_w_gcd(i: int, nmax: int = 200) -> Tuple[int, int]:
    """Return (gcd, j): increase j from i + W_GCD_START_OFFSET until the gcd of
    n^(i+j) - n^j stops changing, j <= W_GCD_MAX_J.
    """
    j = i + settings.W_GCD_START_OFFSET
    g = w_gcd(i, j, nmax)
    while j < settings.W_GCD_MAX_J:
        following = w_gcd(i, j + 1, nmax)
        if following == g:
            break
        j, g = j + 1, following

    return g, j


def staudt_clausen_denominator(i: int) -> int:
    """Product of the primes p with (p - 1) | i."""
    _check_even(i)
    return reduce(lambda a, b: a * b, (d + 1 for d in divisors(i) if isprime(d + 1)), 1)


def image_of_j_order(m: int) -> int:
    """Order of the (cyclic) image of J in the m-th stable homotopy group."""
    if m < 1:
        raise OutOfRange("Degree must be >= 1, got {}.".format(m))

    if m % 8 in (0, 1):
        return 2
    if m % 4 == 3:
        return w_bernoulli((m + 1) // 2)

    return 1
