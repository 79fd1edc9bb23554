"""Stratified F1-structure of the quadric Q: xy - zt + uv = 0 in P^5.

Q is cut into locally closed pieces, each a toric variety:

    S1 = Q cap {x != 0}                 ~ A^4
    S2 = Q cap {x = 0, z != 0}          ~ A^3
    S3 = Q cap {x = z = 0, u != 0}      ~ A^2
    S4 = Q cap {x = z = u = 0}          ~ P^2

and X(R_n) is the disjoint union of the F1^n-points of the strata.
"""

from dataclasses import dataclass
from typing import List

from libs import QUADRIC_STRATA
from libs.f1_points import check_index, glued_points
from libs.lattice_fan import Fan, standard_fan
from libs.zeta_engine import CountPolynomial, fan_count_poly


@dataclass(frozen=True)
class Stratum:
    name: str
    description: str
    fan: Fan

    @property
    def count_poly(self) -> CountPolynomial:
        return fan_count_poly(self.fan)


def strata() -> List[Stratum]:
    fans = [
        ('x != 0', standard_fan('affine', 4)),
        ('x = 0, z != 0', standard_fan('affine', 3)),
        ('x = z = 0, u != 0', standard_fan('affine', 2)),
        ('x = z = u = 0', standard_fan('projective', 2)),
    ]
    return [Stratum(name=name, description=desc, fan=fan)
            for name, (desc, fan) in zip(QUADRIC_STRATA, fans)]


def quadric_count_poly() -> CountPolynomial:
    n = CountPolynomial()
    for stratum in strata():
        n = n + stratum.count_poly

    return n


def quadric_f1_count(n: int) -> int:
    """#X(R_n), enumerated stratum by stratum."""
    check_index(n)
    return sum(len(glued_points(stratum.fan, n)) for stratum in strata())
