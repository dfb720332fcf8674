"""
Environment driven settings.

POSETFORGE_CACHE
    Directory of the optional poset cache (default ``./.posetforge``).
POSETFORGE_MAX_EDGES_CAP
    Hard cap on catalog edge bounds (default 12).
POSETFORGE_N_JOBS
    Default number of joblib workers (default 1).
"""
import os

CACHE_DIR = os.environ.get('POSETFORGE_CACHE', os.path.join('.', '.posetforge'))
MAX_EDGES_CAP = int(os.environ.get('POSETFORGE_MAX_EDGES_CAP', 12))
N_JOBS = int(os.environ.get('POSETFORGE_N_JOBS', 1))

# bump whenever the on-disk poset format changes
FORMAT_VERSION = 1

DEFAULT_VERIFY_BOUND = 6
EXTENDED_VERIFY_BOUND = 7

# the disk cache is used only when asked for
CACHE_ENABLED = 'POSETFORGE_CACHE' in os.environ
