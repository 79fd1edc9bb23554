#!/usr/bin/env python3

# Purpose: Command line tool for F1-geometry computations: toric fans, point
#          counts over F_1^n and F_p, counting polynomials, zeta functions,
#          hermitian lattices and the image of J.

import os
import sys

os.environ['LC_ALL'] = 'C'

rootdir = os.path.abspath(os.path.dirname(__file__))
sys.path.insert(0, rootdir)

# Import config file (settings.py) and modules
import settings  # noqa: F401,E402
from libs import __version__  # noqa: E402
from libs.cli import run  # noqa: E402
from libs.logger import logger  # noqa: E402


def main():
    logger.debug("f1geom {}, arguments: {}".format(__version__, sys.argv[1:]))

    (status, output) = run(sys.argv[1:])
    print(output)
    sys.exit(status)


if __name__ == '__main__':
    main()
