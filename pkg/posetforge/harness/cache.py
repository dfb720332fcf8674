"""On-disk cache of concrete posets

Entries live under ``<directory>/v<FORMAT_VERSION>/<kind>/<cert hex>.poset``
in the poset file format, graphs included. The cache only ever saves work:
an unreadable entry is reported and rebuilt.
"""
import binascii
import logging
import os
import tempfile

from posetforge.base import settings
from posetforge.base.errors import PosetFileError
from posetforge.posets.io import format_poset, parse_poset

LOGGER = logging.getLogger(__name__)


class PosetCache(object):

    """Concrete posets keyed by (graph certificate, kind, format version).

    Parameters
    ----------
    directory : str, optional (default=settings.CACHE_DIR)
        Root directory; created on the first write.

    Attributes
    ----------
    hits, misses : int
        Lookup statistics.
    """

    def __init__(self, directory=None):
        self.directory = directory if directory is not None \
            else settings.CACHE_DIR
        self.hits = 0
        self.misses = 0

    def path(self, cert, kind):
        """File holding the entry for (cert, kind)."""
        name = binascii.hexlify(bytes(cert)).decode('ascii') + '.poset'
        return os.path.join(self.directory, 'v%d' % settings.FORMAT_VERSION,
                            kind, name)

    def get(self, cert, kind):
        """Return the cached poset, or None."""
        path = self.path(cert, kind)
        if not os.path.exists(path):
            self.misses += 1
            return None
        try:
            with open(path) as f:
                poset, _ = parse_poset(f.read())
        except (IOError, OSError, PosetFileError) as e:
            LOGGER.warning("ignoring unreadable cache entry %s: %s", path, e)
            self.misses += 1
            return None
        if poset.kind != kind or not poset.is_concrete:
            LOGGER.warning("ignoring mismatched cache entry %s", path)
            self.misses += 1
            return None
        self.hits += 1
        return poset

    def put(self, cert, kind, poset):
        """Store poset; the file appears atomically."""
        path = self.path(cert, kind)
        directory = os.path.dirname(path)
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix='.tmp')
        try:
            with os.fdopen(fd, 'w') as f:
                f.write(format_poset(poset))
            os.replace(tmp, path)
        except Exception:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise
        LOGGER.debug("cached %s", path)

    def __repr__(self):
        return "PosetCache(%r)" % self.directory
