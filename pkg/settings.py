############################################################################
# f1geom config file.
#
# All available settings and their default values are listed in
# libs/default_settings.py. Override any of them below the import, e.g.:
#
#   log_level = 'debug'
#   WEIL_RICHARDSON_LEVELS = 3
#
############################################################################
from libs.default_settings import *     # noqa: F401,F403

log_level = 'info'
