# Log level: debug, info, warning, error.
log_level = 'info'

# Where to log: 'stderr' or 'syslog'.
# Reports are written to stdout, so logging to stderr never mixes with them.
LOG_TARGET = 'stderr'

LOG_FORMAT = '%(asctime)s %(levelname)s %(message)s'

# Syslog server address, used only if LOG_TARGET = 'syslog'.
# Log to local socket by default, /dev/log on Linux/OpenBSD, /var/run/log on FreeBSD.
SYSLOG_SERVER = '/dev/log'
SYSLOG_PORT = 514

# Syslog facility
SYSLOG_FACILITY = 'local5'

# ----------------
# Required by: libs/f1_points.py
#
# Character values of F1-points are products of roots of unity, computed in
# double precision. A point is in the compact C_tau if every generator
# character has modulus <= 1 + COMPACT_TOLERANCE.
COMPACT_TOLERANCE = 1e-9

# ----------------
# Required by: libs/zeta_engine.py
#
# Default step for the numeric limit q -> 1 of Z(q, q^-s)^-1 (q-1)^-N(1).
WEIL_EPS = 1e-3

# Number of Richardson extrapolation steps, each one halving the step and
# cancelling the next power of eps in the error. One step leaves a relative
# error of about 1e-5 at s = 10, two steps bring it below 1e-7.
WEIL_RICHARDSON_LEVELS = 2

# ----------------
# Required by: libs/hermitian_lattice.py
#
# Maximum number of assignments Phi -> mu(R_n) + {0}, i.e. (2n+1)^t, the
# brute force point counter is allowed to enumerate.
HERMITIAN_ORACLE_BUDGET = 10 ** 6

# ----------------
# Required by: libs/ffield_oracle.py
#
# Largest prime accepted as finite field order.
PRIME_FIELD_MAX = 10 ** 4

# Maximum number of vectors p^(d+1) enumerated while counting P^d(F_p).
PROJECTIVE_ORACLE_BUDGET = 10 ** 7

# ----------------
# Required by: libs/stable_jhom.py
#
# gcd of n^(i+j) - n^j is only equal to w_i if j is large enough. Start with
# j = i + W_GCD_START_OFFSET and increase j until the gcd stops changing,
# but never beyond W_GCD_MAX_J.
W_GCD_START_OFFSET = 8
W_GCD_MAX_J = 40

# ----------------
# Required by: libs/cli.py
#
# Primes used by `oracle compare` when no `--primes` is given.
ORACLE_PRIMES = [2, 3, 5]
