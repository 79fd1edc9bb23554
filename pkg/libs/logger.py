import sys
import logging
from logging.handlers import SysLogHandler
import settings

# Set application name.
logger = logging.getLogger('f1geom')

# Set log level.
if '--debug' in sys.argv:
    _log_level = logging.DEBUG
else:
    _log_level = getattr(logging, str(settings.log_level).upper())
logger.setLevel(_log_level)


if settings.LOG_TARGET == 'syslog':
    _formatter = logging.Formatter('%(name)s %(message)s')

    if settings.SYSLOG_SERVER.startswith('/'):
        # Log to a local socket
        _server = settings.SYSLOG_SERVER
    else:
        # Log to a network address
        _server = (settings.SYSLOG_SERVER, settings.SYSLOG_PORT)

    _handler = SysLogHandler(address=_server, facility=settings.SYSLOG_FACILITY)
else:
    _formatter = logging.Formatter(settings.LOG_FORMAT)
    _handler = logging.StreamHandler(sys.stderr)

_handler.setFormatter(_formatter)
logger.addHandler(_handler)
