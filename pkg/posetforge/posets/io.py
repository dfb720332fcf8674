"""
Text format for weighted posets.

.. code-block:: text

   poset Q 3
   elem 0 rank=1
   elem 1 rank=2
   elem 2 rank=3
   w 0 1 2
   w 0 2 3
   w 1 2 3

Element ids are assigned in (rank, downset certificate, canonical position)
order, so isomorphic abstract posets serialise byte-identically. Weight lines
list the strictly comparable pairs in increasing (low, high) order. Abstract
files carry no graph= fields; v= and k= appear when known.
"""
import logging

import numpy as np

from posetforge.base.errors import PosetFileError, PosetValidationError
from posetforge.base.poset import KINDS, WeightedPoset
from posetforge.graphs.formats import format_graph6, parse_graph6
from posetforge.posets.certificates import downset_certificates

LOGGER = logging.getLogger(__name__)


def file_order(poset):
    """Element order used on file: file id i holds element file_order[i]."""
    position = {x: i for i, x in enumerate(poset.canonical_order)}
    downsets = downset_certificates(poset)
    return sorted(poset.elements,
                  key=lambda x: (int(poset.ranks[x]), downsets[x], position[x]))


def format_poset(poset, abstract=False, vk=None):
    """Serialise a weighted poset.

    Parameters
    ----------
    poset : WeightedPoset

    abstract : {True, False}, optional (default=False)
        Omit graph=, v= and k= even when the poset is concrete.

    vk : dict, optional (default=None)
        Element id -> (v, k) written for abstract posets.

    Returns
    -------
    text : str
    """
    order = file_order(poset)
    lines = ["poset %s %d" % (poset.kind, len(poset))]
    for i, x in enumerate(order):
        fields = ["elem %d rank=%d" % (i, poset.ranks[x])]
        if poset.is_concrete and not abstract:
            graph = poset.graphs[x]
            fields.append("graph=%s v=%d k=%d" % (format_graph6(graph),
                                                   graph.n, graph.k))
        elif vk is not None and x in vk and not abstract:
            fields.append("v=%d k=%d" % vk[x])
        lines.append(' '.join(fields))
    weights = poset.weights
    for i, x in enumerate(order):
        for j, y in enumerate(order):
            if i != j and weights[x, y] > 0:
                lines.append("w %d %d %d" % (i, j, weights[x, y]))
    # (i, j) pairs are produced in increasing order already
    return '\n'.join(lines) + '\n'


def write_poset(poset, path, abstract=False, vk=None):
    """Write :py:func:`format_poset` output to path."""
    with open(path, 'w') as f:
        f.write(format_poset(poset, abstract=abstract, vk=vk))


def _parse_fields(tokens, lineno):
    fields = {}
    for token in tokens:
        key, sep, value = token.partition('=')
        if not sep or key not in ('rank', 'graph', 'v', 'k') or key in fields:
            raise PosetFileError("unexpected field %r" % token, lineno)
        fields[key] = value
    if 'rank' not in fields:
        raise PosetFileError("missing rank=", lineno)
    return fields


def _int(text, lineno):
    try:
        return int(text)
    except ValueError:
        raise PosetFileError("expected an integer, got %r" % text, lineno)


def parse_poset(text):
    """Parse the text of a poset file.

    Returns
    -------
    poset : WeightedPoset
        Concrete iff every element carries graph=.

    vk : dict
        Element id -> (v, k) for the elements listing both.

    Raises
    ------
    PosetFileError
        With the 1-based line number of the first malformed line.
    """
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(i, line) for i, line in lines if line]
    if not lines:
        raise PosetFileError("empty poset file", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != 'poset' or parts[1] not in KINDS:
        raise PosetFileError("expected 'poset <Q|P|OMEGA> <n>'", lineno)
    kind, n = parts[1], _int(parts[2], lineno)
    ranks = [None] * n
    graphs = [None] * n
    vk = {}
    weights = np.eye(n, dtype=np.int64)
    for lineno, line in lines[1:]:
        tokens = line.split()
        if tokens[0] == 'elem':
            if len(tokens) < 3:
                raise PosetFileError("truncated elem line", lineno)
            x = _int(tokens[1], lineno)
            if not 0 <= x < n or ranks[x] is not None:
                raise PosetFileError("bad or repeated element id %d" % x,
                                     lineno)
            fields = _parse_fields(tokens[2:], lineno)
            ranks[x] = _int(fields['rank'], lineno)
            if 'graph' in fields:
                try:
                    graphs[x] = parse_graph6(fields['graph'])
                except ValueError as e:
                    raise PosetFileError(str(e), lineno)
            if 'v' in fields and 'k' in fields:
                vk[x] = (_int(fields['v'], lineno), _int(fields['k'], lineno))
        elif tokens[0] == 'w':
            if len(tokens) != 4:
                raise PosetFileError("expected 'w <low> <high> <weight>'",
                                     lineno)
            x, y, w = (_int(t, lineno) for t in tokens[1:])
            if not (0 <= x < n and 0 <= y < n) or x == y or w <= 0:
                raise PosetFileError("invalid weight line", lineno)
            weights[x, y] = w
        else:
            raise PosetFileError("unknown record %r" % tokens[0], lineno)
    missing = [x for x in range(n) if ranks[x] is None]
    if missing:
        raise PosetFileError("elements %s not declared" % missing, lines[-1][0])
    with_graph = sum(g is not None for g in graphs)
    if with_graph not in (0, n):
        raise PosetFileError("graph= given for %d of %d elements"
                             % (with_graph, n), lines[-1][0])
    try:
        poset = WeightedPoset(weights, ranks, kind,
                              graphs=graphs if with_graph else None)
    except PosetValidationError as e:
        raise PosetFileError(str(e), lines[0][0])
    return poset, vk


def read_poset(path):
    """Read a poset file; see :py:func:`parse_poset`."""
    with open(path) as f:
        return parse_poset(f.read())[0]
