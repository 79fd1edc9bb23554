__version__ = "1.0.0"


# Exit status of the command line tool.
EXIT_CODES = {
    'success': 0,
    # Bad command line arguments, unknown sub-command.
    'usage': 1,
    # Invalid input document, or a mathematical check failed (e.g. a counting
    # formula disagrees with the brute force oracle).
    'error': 2,
}

# Kinds accepted by `lattice_fan.standard_fan()`.
#
#   - projective: P^d, rays e_1, ..., e_d, -(e_1 + ... + e_d)
#   - affine: A^d, one maximal cone spanned by e_1, ..., e_d
#   - torus: G_m^d, zero cone only
STANDARD_FAN_KINDS = ['projective', 'affine', 'torus']

# Names of the quadric strata, in the order they are removed from Q:
#   S1: x != 0, S2: x = 0, z != 0, S3: x = z = 0, u != 0, S4: x = z = u = 0.
QUADRIC_STRATA = ['S1', 'S2', 'S3', 'S4']


class F1Error(Exception):
    """Base class of all errors raised by f1geom libraries."""


class DegenerateRay(F1Error):
    """Zero vector used where a ray is expected."""


class NotRegular(F1Error):
    """Cone rays do not extend to a lattice basis."""


class BadRank(F1Error):
    """Lattice rank out of range, or vectors of mixed length."""


class OutOfRange(F1Error):
    """Parameter outside its documented range."""


class NotInMonoid(F1Error):
    """Character is not in the monoid S_tau of the chart."""


class PoleAt(F1Error):
    """Zeta function evaluated at one of its poles."""


class NonIntegralCoefficient(F1Error):
    """Interpolated counting polynomial has a non integral coefficient."""


class InconsistentSamples(F1Error):
    """Extra samples disagree with the interpolated polynomial."""


class TooLarge(F1Error):
    """Brute force enumeration exceeds the configured budget."""


class NotPrime(F1Error):
    """Finite field order is not a supported prime."""


class ParseError(F1Error):
    """Input document violates its JSON schema."""


class FanError(F1Error):
    """Input document describes no valid regular fan."""


class InvalidGram(F1Error):
    """Gram matrix is not symmetric positive definite."""


class InvalidPhi(F1Error):
    """Vectors do not form a half set (zero, repeated or antipodal vectors)."""
