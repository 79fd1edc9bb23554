import os
import random

from libs import lattice_fan as lf
from libs.hermitian_lattice import PhiSystem
from tests import tdata

rootdir = os.path.abspath(os.path.dirname(__file__)) + '/../'


def sample_file(*parts):
    """Absolute path of a file under samples/."""
    return os.path.join(rootdir, 'samples', *parts)


def read_sample(*parts):
    with open(sample_file(*parts), encoding='utf-8') as f:
        return f.read()


def fan_name(kind, d):
    return '{}({})'.format(kind, d)


def corpus_fans():
    """Return list of (name, fan) for all standard and product fans."""
    fans = [(fan_name(kind, d), lf.standard_fan(kind, d)) for (kind, d) in tdata.standard_fans]

    for (a, b) in tdata.product_fans:
        name = fan_name(*a) + 'x' + fan_name(*b)
        fans.append((name, lf.fan_product(lf.standard_fan(*a), lf.standard_fan(*b))))

    return fans


def small_fans():
    """Corpus fans of rank <= 2."""
    return [(name, f) for (name, f) in corpus_fans() if f.rank <= 2]


def complete_fans():
    return [(name, f) for (name, f) in corpus_fans() if lf.is_complete(f)]


def corpus_phis():
    return [PhiSystem(rank=rank, vectors=tuple(vectors)) for (rank, vectors) in tdata.phis]


def apply_matrix(m, v):
    """Integer matrix (list of rows) times vector."""
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def unimodular_matrices(rank, count, seed=0, steps=6):
    """Seeded random integer matrices of determinant +-1, built as products
    of elementary row operations.
    """
    rng = random.Random(seed)
    result = []
    for _ in range(count):
        m = [[int(i == j) for j in range(rank)] for i in range(rank)]
        for _ in range(steps):
            op = rng.choice(['add', 'swap', 'negate'])
            i = rng.randrange(rank)
            j = rng.randrange(rank)
            if op == 'add' and i != j:
                c = rng.choice([-2, -1, 1, 2])
                m[i] = [x + c * y for x, y in zip(m[i], m[j])]
            elif op == 'swap':
                m[i], m[j] = m[j], m[i]
            elif op == 'negate':
                m[i] = [-x for x in m[i]]
        result.append(m)

    return result
