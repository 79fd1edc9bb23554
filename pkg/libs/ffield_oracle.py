"""Brute force point counts over prime fields F_p.

Nothing here uses a counting formula: points are enumerated, canonicalized
and deduplicated. The counts are ground truth for the polynomials computed
in zeta_engine, hermitian_lattice and quadric_strata.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, Tuple

from sympy import isprime

import settings
from libs import QUADRIC_STRATA
from libs import NotPrime, FanError, TooLarge
from libs import lattice_fan as lf
from libs.f1_points import canonical_values
from libs.lattice_fan import Fan
from libs.logger import logger


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime("{} is not a prime <= {}.".format(self.p, settings.PRIME_FIELD_MAX))


def is_prime(p: int) -> bool:
    return isinstance(p, int) and 2 <= p <= settings.PRIME_FIELD_MAX and isprime(p)


def _order(p) -> int:
    if isinstance(p, PrimeField):
        return p.p

    return PrimeField(p).p


def toric_count_fq(f: Fan, p) -> int:
    """#P(Delta)(F_p): monoid maps S_tau -> (F_p, x) glued over all charts."""
    q = _order(p)

    qr = lf.check_fan(f)
    if not qr[0]:
        raise FanError(qr[1])

    points = set()
    for tau in lf.maximal_cones(f):
        chart = lf.dual_monoid(tau, f.rank)
        units = range(1, q)
        for av in product(range(q), repeat=len(chart.affine_gens)):
            for uv in product(units, repeat=len(chart.unit_gens)):
                points.add(canonical_values(chart, av, uv,
                                            is_zero=lambda v: v == 0,
                                            power=lambda v, c: pow(v, c, q),
                                            multiply=lambda a, b: a * b % q,
                                            one=1))

    logger.debug("{} points over F_{} on a fan with {} cones.".format(len(points), q, len(f.cones)))
    return len(points)


def normalize(v: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    """Projective representative: first non zero coordinate scaled to 1."""
    for c in v:
        if c:
            inv = pow(c, -1, p)
            return tuple(x * inv % p for x in v)

    raise ValueError("Zero vector has no projective class.")


def projective_representatives(d: int, p: int) -> Iterator[Tuple[int, ...]]:
    """One vector per point of P^d(F_p), first non zero coordinate 1."""
    for v in product(range(p), repeat=d + 1):
        for c in v:
            if c:
                if c == 1:
                    yield v
                break


def projective_count_fq(d: int, p) -> int:
    """#P^d(F_p) as the number of scaling orbits of non zero vectors."""
    q = _order(p)
    if q ** (d + 1) > settings.PROJECTIVE_ORACLE_BUDGET:
        raise TooLarge("{}^{} vectors exceed the enumeration budget.".format(q, d + 1))

    classes = set()
    for v in product(range(q), repeat=d + 1):
        if any(v):
            classes.add(normalize(v, q))

    return len(classes)


def _on_quadric(v, p) -> bool:
    x, y, z, t, u, w = v
    return (x * y - z * t + u * w) % p == 0


def quadric_count_fq(p) -> int:
    """#Q(F_p) for Q: xy - zt + uv = 0 in P^5."""
    q = _order(p)
    return sum(1 for v in projective_representatives(5, q) if _on_quadric(v, q))


def quadric_stratum_counts_fq(p) -> Dict[str, int]:
    """Points of Q(F_p) sorted into the strata S1..S4."""
    q = _order(p)
    counts = {name: 0 for name in QUADRIC_STRATA}
    for v in projective_representatives(5, q):
        if not _on_quadric(v, q):
            continue

        x, _, z, _, u, _ = v
        if x:
            counts['S1'] += 1
        elif z:
            counts['S2'] += 1
        elif u:
            counts['S3'] += 1
        else:
            counts['S4'] += 1

    return counts
