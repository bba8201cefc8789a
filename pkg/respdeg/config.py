APP_NAME = 'respdeg'
APP_AUTHOR = 'respdeg'
CONFIG_FILE_NAME = 'respdeg.conf'

SEMANTICS_FUTURE = 'future'
SEMANTICS_INCLUDE_INITIAL = 'include-initial'

FORMATS = ('table', 'json', 'csv')

DEFAULT_SEMANTICS = SEMANTICS_FUTURE
DEFAULT_FORMAT = 'table'
DEFAULT_PRECISION = 4
DEFAULT_THREADS = 1
DEFAULT_MAX_AGENTS = 20         # report rows grow as 2^k
DEFAULT_ORACLE_BUDGET = 2 ** 20

# Current settings, overwritten by clientapi.initialize()
SEMANTICS = DEFAULT_SEMANTICS
PRECISION = DEFAULT_PRECISION
THREADS = DEFAULT_THREADS
MAX_AGENTS = DEFAULT_MAX_AGENTS
ORACLE_BUDGET = DEFAULT_ORACLE_BUDGET
FORCE = False

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
