"""Weighted-poset isomorphism

Certificates decide isomorphism; explicit bijections are needed for
legitimate labellings. Bijections are searched on the disjoint union of the
two posets: colour refinement of the union assigns every element a colour
that any isomorphism must preserve, and the backtracking only tries targets
of the same colour.
"""
import logging

import numpy as np
from scipy.linalg import block_diag

from posetforge.graphs.canonical import refine_colors
from posetforge.posets.builders import build_Q

LOGGER = logging.getLogger(__name__)


def abstract_cert(poset):
    """Return the label-independent certificate of a weighted poset.

    Parameters
    ----------
    poset : WeightedPoset

    Returns
    -------
    cert : CanonicalCert
        Equal for two posets iff they are isomorphic as weighted posets of
        the same kind.
    """
    return poset.cert


def poset_isomorphic(a, b):
    """True iff a and b are isomorphic weighted posets of the same kind."""
    if a.kind != b.kind or len(a) != len(b):
        return False
    return a.cert == b.cert


def poset_isomorphisms(a, b):
    """Enumerate the weight-preserving order isomorphisms from a onto b.

    Parameters
    ----------
    a, b : WeightedPoset

    Yields
    ------
    mapping : tuple of int
        mapping[x] is the element of b that x is sent to.
    """
    n = len(a)
    if a.kind != b.kind or n != len(b) or a.cert != b.cert:
        return
    if n == 0:
        yield ()
        return
    union = block_diag(a.weights, b.weights)
    colors = refine_colors(union, np.concatenate([a.ranks, b.ranks]))
    colors_a, colors_b = colors[:n].tolist(), colors[n:].tolist()
    targets = {}
    for y, c in enumerate(colors_b):
        targets.setdefault(c, []).append(y)
    # smallest cells first
    order = sorted(range(n), key=lambda x: (len(targets.get(colors_a[x], ())), x))
    wa, wb = a.weights, b.weights
    mapping = [None] * n
    used = set()

    def consistent(x, y, placed):
        return all(wa[x, z] == wb[y, mapping[z]] and wa[z, x] == wb[mapping[z], y]
                   for z in placed)

    def extend(depth):
        if depth == n:
            yield tuple(mapping)
            return
        x = order[depth]
        placed = order[:depth]
        for y in targets.get(colors_a[x], ()):
            if y in used or not consistent(x, y, placed):
                continue
            mapping[x] = y
            used.add(y)
            for found in extend(depth + 1):
                yield found
            used.discard(y)
            mapping[x] = None

    for found in extend(0):
        yield found


def legitimate_labelings(abstract_q, candidate, target=None):
    """Enumerate the legitimate labellings of an abstract Q-poset.

    A legitimate labelling is a weight-preserving order isomorphism from
    abstract_q onto Q(candidate); candidate is then a Q-reconstruction.

    Parameters
    ----------
    abstract_q : WeightedPoset
        Q-kind poset; its labels, if any, are ignored.

    candidate : Graph
        Graph without isolated vertices.

    target : WeightedPoset, optional (default=None)
        Q(candidate) if already built.

    Yields
    ------
    labeling : tuple of Graph
        labeling[x] is the graph the element x is mapped to.
    """
    if target is None:
        target = build_Q(candidate)
    for mapping in poset_isomorphisms(abstract_q, target):
        yield tuple(target.graphs[y] for y in mapping)


def downset_certificates(poset):
    """Abstract certificate of the principal downset of every element."""
    return [poset.restrict(poset.downset(x), keep_graphs=False).cert
            for x in poset.elements]
