"""Command line surface and JSON document formats.

Fan document:

    {"rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "cones": [[0, 1], [1, 2], [2, 0]]}

`cones` lists maximal cones only, as indexes into `rays`.

Phi document:

    {"rank": 1, "vectors": [[1], [2]]}

Every command prints one line of JSON (the machine readable report, keys
sorted) followed by human readable text.
"""

import json
from typing import List, Tuple

import settings
from libs import EXIT_CODES
from libs import F1Error, ParseError, FanError, DegenerateRay, NotRegular, BadRank
from libs import lattice_fan as lf
from libs import zeta_engine
from libs import f1_points, ffield_oracle, hermitian_lattice, quadric_strata, stable_jhom
from libs.lattice_fan import Fan
from libs.logger import logger

USAGE = """Usage:

    fan info <file>
    fan validate <file>
        Show cones, completeness, counting polynomial of a fan document, or
        just validate it.

    count fan <file> (--fq P | --f1n N | --poly)
    count quadric (--fq P | --f1n N | --poly)
    count lattice --phi <file> (--f1n N | --poly)
        --fq P      number of points over the prime field F_P (enumerated)
        --f1n N     number of points over F_1^N, i.e. with values in
                    R_N = Z[T]/(T^N - 1) (enumerated)
        --poly      counting polynomial N(x), coefficients from low to high

    zeta fan <file>
    zeta quadric
    zeta rank1 --t T
        Zeta function prod (s - i)^a_i as a list of (i, a_i).

    oracle compare fan <file> [--primes 2,3,5]
        Compare N(p) against brute force counts over F_p.

    imj --i I
        Order w_I of the image of J, from Bernoulli numbers and from the gcd
        of n^(I+j) - n^j.

    --debug
        Log debug messages to stderr.

Exit status: 0 success, 1 usage error, 2 invalid input or failed check.

Sample usage:

    python3 f1geom.py zeta fan samples/fans/p1.json
    python3 f1geom.py count quadric --fq 2
    python3 f1geom.py oracle compare fan samples/fans/p2.json --primes 2,3,5,7
    python3 f1geom.py imj --i 2
"""


class UsageError(Exception):
    pass


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("Invalid JSON at line {}, column {}: {}".format(e.lineno, e.colno, e.msg))


def _int_vectors(doc, field: str, rank: int) -> List[Tuple[int, ...]]:
    vectors = doc.get(field)
    if not isinstance(vectors, list):
        raise ParseError("Field '{}' must be a list.".format(field))

    result = []
    for i, v in enumerate(vectors):
        if not isinstance(v, list) or not all(_is_int(c) for c in v):
            raise ParseError("{}[{}]: must be a list of integers.".format(field, i))
        if len(v) != rank:
            raise ParseError("{}[{}]: has {} coordinates, rank is {}.".format(field, i, len(v), rank))
        result.append(tuple(v))

    return result


def _rank(doc) -> int:
    if not isinstance(doc, dict):
        raise ParseError("Document must be a JSON object.")

    rank = doc.get('rank')
    if not _is_int(rank) or rank < 1:
        raise ParseError("Field 'rank' must be an integer >= 1.")

    return rank


def parse_fan(text: str) -> Fan:
    doc = _load_json(text)
    rank = _rank(doc)
    rays = _int_vectors(doc, 'rays', rank)

    cones = doc.get('cones')
    if not isinstance(cones, list):
        raise ParseError("Field 'cones' must be a list.")

    maximal = []
    for i, cone in enumerate(cones):
        if not isinstance(cone, list) or not all(_is_int(c) and 0 <= c < len(rays) for c in cone):
            raise ParseError("cones[{}]: must be a list of ray indexes in [0, {}).".format(i, len(rays)))
        if len(set(cone)) != len(cone):
            raise ParseError("cones[{}]: repeats a ray index.".format(i))
        maximal.append([rays[c] for c in cone])

    try:
        seen = {}
        for i, r in enumerate(rays):
            p = lf.primitive(r)
            if p in seen:
                raise FanError("rays[{}] and rays[{}] span the same ray.".format(seen[p], i))
            seen[p] = i

        return lf.make_fan(rank, maximal)
    except (DegenerateRay, NotRegular, BadRank) as e:
        raise FanError(str(e))


def serialize_fan(f: Fan) -> str:
    """Canonical document: rays sorted, maximal cones as sorted index lists."""
    rays = sorted({r for c in f.cones for r in c.rays})
    index = {r: i for i, r in enumerate(rays)}
    cones = sorted(sorted(index[r] for r in c.rays) for c in lf.maximal_cones(f) if c.dim)

    doc = {
        'rank': f.rank,
        'rays': [list(r) for r in rays],
        'cones': cones,
    }
    return json.dumps(doc) + '\n'


def parse_phi(text: str) -> hermitian_lattice.PhiSystem:
    doc = _load_json(text)
    rank = _rank(doc)
    vectors = _int_vectors(doc, 'vectors', rank)

    try:
        return hermitian_lattice.PhiSystem(rank=rank, vectors=tuple(vectors))
    except F1Error as e:
        raise ParseError(str(e))


def _read(path: str) -> str:
    try:
        with open(path, encoding='utf-8') as f:
            return f.read()
    except OSError as e:
        raise UsageError("Cannot read {}: {}".format(path, e.strerror))


def _pop_option(args: List[str], name: str):
    """Remove `name value` from args, return value or None."""
    if name not in args:
        return None

    index = args.index(name)
    if index + 1 >= len(args):
        raise UsageError("Option {} needs a value.".format(name))

    value = args[index + 1]
    args.pop(index)
    args.pop(index)
    return value


def _pop_int(args: List[str], name: str):
    value = _pop_option(args, name)
    if value is None:
        return None

    try:
        return int(value)
    except ValueError:
        raise UsageError("Option {} needs an integer, got {}.".format(name, value))


def _report(report: dict, lines: List[str]) -> str:
    return '\n'.join([json.dumps(report, sort_keys=True)] + lines)


def _zeta_report(n: zeta_engine.CountPolynomial) -> dict:
    z = zeta_engine.zeta(n)
    return {
        'poly': list(n.coefficients),
        'zeta': [list(f) for f in z.factors],
        'euler_char': zeta_engine.euler_char(n),
    }


def compare_fan_counts(f: Fan, primes: List[int]):
    """Return (True, rows) if N(p) equals the F_p oracle for all primes,
    else (False, rows). Each row is (p, formula, oracle).
    """
    n = zeta_engine.fan_count_poly(f)
    rows = []
    for p in primes:
        rows.append((p, n(p), ffield_oracle.toric_count_fq(f, p)))
        logger.info("F_{}: formula {}, oracle {}.".format(*rows[-1]))

    return (all(formula == oracle for _, formula, oracle in rows), rows)


def cmd_fan(args):
    if len(args) != 2 or args[0] not in ('info', 'validate'):
        raise UsageError("Expected: fan info|validate <file>")

    f = parse_fan(_read(args[1]))
    if args[0] == 'validate':
        return (True, _report({'valid': True, 'cones': len(f.cones)},
                              ['Valid regular fan of rank {} with {} cones.'.format(f.rank, len(f.cones))]))

    n = zeta_engine.fan_count_poly(f)
    by_dim = lf.cones_by_dim(f)
    maximal = lf.maximal_cones(f)
    report = {
        'rank': f.rank,
        'cones_by_dim': [len(by_dim[k]) for k in range(f.rank + 1)],
        'maximal_cones': [[list(r) for r in c.rays] for c in maximal],
        'complete': lf.is_complete(f),
    }
    report.update(_zeta_report(n))

    lines = ['Rank: {}'.format(f.rank),
             'Cones by dimension: {}'.format(report['cones_by_dim']),
             'Maximal cones: {}'.format(', '.join(str(c) for c in maximal)),
             'Complete: {}'.format(report['complete']),
             'N(x) = {}'.format(n),
             'Euler characteristic N(1) = {}'.format(report['euler_char'])]
    return (True, _report(report, lines))


def _count(args, poly, fq=None, f1n=None):
    p = _pop_int(args, '--fq')
    nn = _pop_int(args, '--f1n')
    want_poly = '--poly' in args
    if want_poly:
        args.remove('--poly')

    if args or [p is not None, nn is not None, want_poly].count(True) != 1:
        raise UsageError("Expected exactly one of --fq P, --f1n N, --poly.")

    if want_poly:
        n = poly()
        return (True, _report({'poly': list(n.coefficients)}, ['N(x) = {}'.format(n)]))

    if p is not None:
        if fq is None:
            raise UsageError("--fq is not available here.")
        value = fq(p)
        return (True, _report({'fq': p, 'count': value}, ['#X(F_{}) = {}'.format(p, value)]))

    value = f1n(nn)
    return (True, _report({'f1n': nn, 'count': value}, ['#X(F_1^{}) = {}'.format(nn, value)]))


def cmd_count(args):
    if not args:
        raise UsageError("Expected: count fan|quadric|lattice ...")

    what = args.pop(0)
    if what == 'fan':
        if not args:
            raise UsageError("Expected: count fan <file> ...")
        f = parse_fan(_read(args.pop(0)))
        return _count(args,
                      poly=lambda: zeta_engine.fan_count_poly(f),
                      fq=lambda p: ffield_oracle.toric_count_fq(f, p),
                      f1n=lambda n: len(f1_points.glued_points(f, n)))

    if what == 'quadric':
        return _count(args,
                      poly=quadric_strata.quadric_count_poly,
                      fq=ffield_oracle.quadric_count_fq,
                      f1n=quadric_strata.quadric_f1_count)

    if what == 'lattice':
        path = _pop_option(args, '--phi')
        if path is None:
            raise UsageError("Expected: count lattice --phi <file> ...")
        phi = parse_phi(_read(path))
        return _count(args,
                      poly=lambda: hermitian_lattice.count_poly(phi),
                      f1n=lambda n: hermitian_lattice.count_points_formula(phi, n))

    raise UsageError("Unknown count target: {}".format(what))


def cmd_zeta(args):
    if not args:
        raise UsageError("Expected: zeta fan <file> | quadric | rank1 --t T")

    what = args.pop(0)
    if what == 'fan' and len(args) == 1:
        n = zeta_engine.fan_count_poly(parse_fan(_read(args[0])))
    elif what == 'quadric' and not args:
        n = quadric_strata.quadric_count_poly()
    elif what == 'rank1':
        t = _pop_int(args, '--t')
        if t is None or args:
            raise UsageError("Expected: zeta rank1 --t T")
        n = hermitian_lattice.rank1_count_poly(t)
    else:
        raise UsageError("Expected: zeta fan <file> | quadric | rank1 --t T")

    report = _zeta_report(n)
    return (True, _report(report, ['N(x) = {}'.format(n),
                                   'zeta(s) = {}'.format(zeta_engine.zeta(n))]))


def cmd_oracle(args):
    if len(args) < 3 or args[:2] != ['compare', 'fan']:
        raise UsageError("Expected: oracle compare fan <file> [--primes 2,3,5]")

    args = args[2:]
    primes = _pop_option(args, '--primes')
    if len(args) != 1:
        raise UsageError("Expected: oracle compare fan <file> [--primes 2,3,5]")

    if primes is None:
        primes = list(settings.ORACLE_PRIMES)
    else:
        try:
            primes = [int(p) for p in primes.split(',')]
        except ValueError:
            raise UsageError("--primes needs a comma separated list of integers.")

    f = parse_fan(_read(args[0]))
    qr = compare_fan_counts(f, primes)
    lines = []
    for p, formula, oracle in qr[1]:
        mark = 'ok' if formula == oracle else 'MISMATCH'
        lines.append('F_{}: N({}) = {}, enumerated {} [{}]'.format(p, p, formula, oracle, mark))

    report = {'agree': qr[0], 'counts': [list(row) for row in qr[1]]}
    return (qr[0], _report(report, lines))


def cmd_imj(args):
    i = _pop_int(args, '--i')
    if i is None or args:
        raise UsageError("Expected: imj --i I")

    w = stable_jhom.w_bernoulli(i)
    g, j = stable_jhom.stable_w_gcd(i)
    m = 2 * i - 1
    order = stable_jhom.image_of_j_order(m)
    report = {'i': i, 'w': w, 'gcd': g, 'j': j, 'agree': w == g,
              'degree': m, 'image_of_j': order}
    lines = ['w_{} = {} (denominator of b_{}/{})'.format(i, w, i, 2 * i),
             'gcd of n^(i+j) - n^j, j = {}: {}'.format(j, g),
             'Methods {}.'.format('agree' if w == g else 'DISAGREE'),
             'Image of J in degree {} has order {}.'.format(m, order)]
    return (w == g, _report(report, lines))


COMMANDS = {
    'fan': cmd_fan,
    'count': cmd_count,
    'zeta': cmd_zeta,
    'oracle': cmd_oracle,
    'imj': cmd_imj,
}


def run(argv: List[str]) -> Tuple[int, str]:
    """Return (exit status, output text)."""
    args = [a for a in argv if a != '--debug']
    if not args or args[0] not in COMMANDS:
        return (EXIT_CODES['usage'], USAGE)

    try:
        qr = COMMANDS[args[0]](args[1:])
    except UsageError as e:
        return (EXIT_CODES['usage'], '<<< ERROR >>> {}\n\n{}'.format(e, USAGE))
    except F1Error as e:
        logger.debug("{}: {}".format(type(e).__name__, e))
        return (EXIT_CODES['error'], '<<< ERROR >>> {}: {}'.format(type(e).__name__, e))

    if qr[0]:
        return (EXIT_CODES['success'], qr[1])

    return (EXIT_CODES['error'], qr[1])
