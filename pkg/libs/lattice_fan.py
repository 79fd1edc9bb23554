"""Lattices, regular cones and fans of smooth toric varieties.

A fan is stored with all its faces; `make_fan()` takes maximal cones and
closes them under faces. Validation follows the library convention:
`check_fan()` returns `(True, )` or `(False, reason)`, predicates wrap it.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from libs import STANDARD_FAN_KINDS
from libs import DegenerateRay, NotRegular, BadRank, FanError, OutOfRange
from libs import utils
from libs.logger import logger
from libs.utils import Vector

LatticeVector = Vector


@dataclass(frozen=True, order=True)
class Cone:
    """Cone spanned by primitive rays, kept sorted lexicographically."""
    rays: Tuple[Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'rays', tuple(sorted(set(tuple(r) for r in self.rays))))

    @property
    def dim(self) -> int:
        return len(self.rays)

    def sort_key(self):
        return (self.dim, self.rays)

    def __str__(self):
        return '<' + ', '.join(str(list(r)) for r in self.rays) + '>'


ZERO_CONE = Cone()


@dataclass(frozen=True)
class Fan:
    rank: int
    cones: Tuple[Cone, ...]

    def __post_init__(self):
        object.__setattr__(self, 'cones', tuple(sorted(set(self.cones), key=Cone.sort_key)))

    def __contains__(self, cone):
        return cone in self.cones

    @property
    def maximal_cones(self) -> List[Cone]:
        return maximal_cones(self)


@dataclass(frozen=True)
class MonoidPresentation:
    """Generators of S_tau = tau^* cap M for a regular cone tau.

    `affine_gens[a]` pairs to 1 with `cone.rays[a]` and to 0 with the other
    rays; `unit_gens` span the annihilator of the cone, so S_tau is generated
    by affine_gens, unit_gens and -unit_gens.
    """
    rank: int
    cone: Cone
    affine_gens: Tuple[Vector, ...]
    unit_gens: Tuple[Vector, ...]

    @property
    def basis(self) -> Tuple[Vector, ...]:
        return self.affine_gens + self.unit_gens

    def coordinates(self, m: Sequence[int]) -> Vector:
        """Coordinates of m in the basis affine_gens + unit_gens of M."""
        utils.check_lengths([m], self.rank)
        return tuple(utils.dot(m, col) for col in _dual_columns(self.basis))

    def generators(self) -> List[Vector]:
        """All monoid generators, units with both signs."""
        return list(self.affine_gens) + list(self.unit_gens) + [utils.neg(u) for u in self.unit_gens]


@lru_cache(maxsize=None)
def _dual_columns(basis):
    # Columns of basis^-1: <m, col_k> is the k-th coordinate of m.
    inv = utils.inverse_rows(basis)
    return tuple(tuple(row[k] for row in inv) for k in range(len(basis)))


def primitive(v: Sequence[int]) -> Vector:
    g = utils.content(v)
    if g == 0:
        raise DegenerateRay("Zero vector {} is not a ray.".format(tuple(v)))

    return tuple(x // g for x in v)


def make_cone(rays: Sequence[Sequence[int]], rank: int = None) -> Cone:
    if rank is not None:
        utils.check_lengths(rays, rank)

    prims = tuple(primitive(r) for r in rays)
    if len(set(prims)) != len(prims):
        raise DegenerateRay("Rays {} coincide after primitivization.".format([tuple(r) for r in rays]))

    return Cone(prims)


def is_regular(c: Cone) -> bool:
    if not c.rays:
        return True

    rank = len(c.rays[0])
    if c.dim > rank:
        return False

    return all(e == 1 for e in utils.elementary_divisors(c.rays, rank))


def faces(c: Cone) -> set:
    result = set()
    for k in range(c.dim + 1):
        for rays in combinations(c.rays, k):
            result.add(Cone(rays))

    return result


def maximal_cones(f: Fan) -> List[Cone]:
    rays_of = [set(c.rays) for c in f.cones]
    return [c for c, rs in zip(f.cones, rays_of)
            if not any(rs < other for other in rays_of)]


def cones_by_dim(f: Fan) -> Dict[int, List[Cone]]:
    result = {k: [] for k in range(f.rank + 1)}
    for c in f.cones:
        result[c.dim].append(c)

    return result


def _is_improper_relation(coeffs, signs) -> bool:
    # signs: +1 coefficient must be >= 0, -1 must be <= 0, 0 is free.
    for flip in (1, -1):
        if all(s * flip * c >= 0 for c, s in zip(coeffs, signs) if s):
            return True

    return False


def meet_in_common_face(a: Cone, b: Cone, rank: int) -> bool:
    """True if a cap b is the cone spanned by the rays a and b share.

    a cap b is larger than the common face exactly when some relation
    sum(x_i u_i) + sum(c_k s_k) - sum(y_j w_j) = 0 holds with x, y >= 0 not
    all zero (u only in a, w only in b, s shared). Such a relation exists iff
    one exists with minimal support, i.e. a circuit of the ray matrix, so all
    circuits are enumerated and their sign patterns checked exactly.
    """
    common = set(a.rays) & set(b.rays)
    only_a = [r for r in a.rays if r not in common]
    only_b = [r for r in b.rays if r not in common]
    if not only_a or not only_b:
        return True

    columns = only_a + sorted(common) + only_b
    signs = [1] * len(only_a) + [0] * len(common) + [-1] * len(only_b)

    for size in range(2, min(len(columns), rank + 1) + 1):
        for idx in combinations(range(len(columns)), size):
            if all(signs[i] == 0 for i in idx):
                continue

            ns = utils.nullspace([columns[i] for i in idx], rank)
            if len(ns) != 1 or any(x == 0 for x in ns[0]):
                continue

            if _is_improper_relation(ns[0], [signs[i] for i in idx]):
                return False

    return True


def check_fan(f: Fan):
    """Return (True, ) for a valid regular fan, else (False, reason)."""
    if f.rank < 1:
        return (False, 'Lattice rank must be >= 1, got {}.'.format(f.rank))

    if ZERO_CONE not in f.cones:
        return (False, 'Zero cone missing.')

    for c in f.cones:
        for r in c.rays:
            if len(r) != f.rank:
                return (False, 'Ray {} of cone {} is not in rank {}.'.format(list(r), c, f.rank))
            if utils.content(r) != 1:
                return (False, 'Ray {} of cone {} is not primitive.'.format(list(r), c))

        if not is_regular(c):
            return (False, 'Cone {} is not regular.'.format(c))

    cone_set = set(f.cones)
    for c in f.cones:
        for face in faces(c):
            if face not in cone_set:
                return (False, 'Face {} of cone {} is missing.'.format(face, c))

    # Faces of cones meeting in a common face meet in a common face too.
    maximal = maximal_cones(f)
    for a, b in combinations(maximal, 2):
        if not meet_in_common_face(a, b, f.rank):
            return (False, 'Cones {} and {} do not meet in a common face.'.format(a, b))

    return (True, )


def is_valid_fan(f: Fan) -> bool:
    return check_fan(f)[0]


def is_complete(f: Fan) -> bool:
    """Wall criterion: full dimensional maximal cones, every wall in exactly
    two maximal cones, connected adjacency graph. Sufficient for the regular
    fans handled here.
    """
    maximal = maximal_cones(f)
    if any(c.dim != f.rank for c in maximal):
        return False

    walls = [c for c in f.cones if c.dim == f.rank - 1]
    adjacent = {c: set() for c in maximal}
    for w in walls:
        owners = [c for c in maximal if set(w.rays) <= set(c.rays)]
        if len(owners) != 2:
            return False

        adjacent[owners[0]].add(owners[1])
        adjacent[owners[1]].add(owners[0])

    seen = {maximal[0]}
    todo = [maximal[0]]
    while todo:
        for nb in adjacent[todo.pop()]:
            if nb not in seen:
                seen.add(nb)
                todo.append(nb)

    return len(seen) == len(maximal)


@lru_cache(maxsize=None)
def dual_monoid(c: Cone, rank: int) -> MonoidPresentation:
    utils.check_lengths(c.rays, rank)

    s = utils.unimodular_completion(c.rays, rank)
    if s is None:
        raise NotRegular("Cone {} is not regular in rank {}.".format(c, rank))

    affine = tuple(s[:c.dim])
    units = tuple(utils.hermite_reduce(s[c.dim:], rank))
    return MonoidPresentation(rank=rank, cone=c, affine_gens=affine, unit_gens=units)


def make_fan(rank: int, maximal: Sequence[Sequence[Sequence[int]]], validate: bool = True) -> Fan:
    """Build a fan from its maximal cones (given as ray lists)."""
    if rank < 1:
        raise BadRank("Lattice rank must be >= 1, got {}.".format(rank))

    cones = {ZERO_CONE}
    for rays in maximal:
        c = make_cone(rays, rank)
        if not is_regular(c):
            raise NotRegular("Cone {} is not regular.".format(c))
        cones |= faces(c)

    f = Fan(rank=rank, cones=tuple(cones))
    if validate:
        qr = check_fan(f)
        if not qr[0]:
            raise FanError(qr[1])

    logger.debug("Fan of rank {} with {} cones.".format(rank, len(f.cones)))
    return f


def _unit_vector(d, i, sign=1):
    return tuple(sign * int(j == i) for j in range(d))


def standard_fan(kind: str, d: int) -> Fan:
    if d < 1:
        raise BadRank("Lattice rank must be >= 1, got {}.".format(d))

    if kind not in STANDARD_FAN_KINDS:
        raise OutOfRange("Unknown fan kind: {}".format(kind))

    basis = [_unit_vector(d, i) for i in range(d)]
    if kind == 'projective':
        rays = basis + [tuple(-1 for _ in range(d))]
        maximal = [list(rs) for rs in combinations(rays, d)]
    elif kind == 'affine':
        maximal = [basis]
    else:
        maximal = []

    return make_fan(d, maximal, validate=False)


def fan_product(f: Fan, g: Fan) -> Fan:
    pad_f = (0,) * g.rank
    pad_g = (0,) * f.rank

    cones = []
    for a in f.cones:
        for b in g.cones:
            rays = [r + pad_f for r in a.rays] + [pad_g + r for r in b.rays]
            cones.append(Cone(tuple(rays)))

    return Fan(rank=f.rank + g.rank, cones=tuple(cones))
