"""Canonical labeling

This module computes canonical forms of integer matrices (vertex-colored,
edge-weighted digraphs) by colour refinement followed by an
individualisation search whose branches are pruned by the automorphisms
discovered along the way. The same search canonicalizes graphs (0/1
adjacency matrices) and weighted posets (weight matrices).

Graphs are canonicalized component by component: the certificate of a graph
is the sorted sequence of the certificates of its components, which keeps
the search small for the disjoint unions that dominate edge-subgraph
enumeration.
"""
from __future__ import division

import functools
import logging

import numpy as np

from posetforge.base.graph import Graph

LOGGER = logging.getLogger(__name__)


class CanonicalCert(bytes):

    """Certificate of an isomorphism class.

    Two objects receive equal certificates iff they are isomorphic. Being a
    bytes subclass, certificates are hashable and totally ordered
    lexicographically.
    """

    def __repr__(self):
        return "CanonicalCert(%s)" % self.hex()


class CanonicalForm(object):

    """Result of a canonical labeling.

    Attributes
    ----------
    cert : CanonicalCert
        The certificate.

    order : list of int
        order[i] is the input vertex placed at canonical position i.
    """

    __slots__ = ('cert', 'order')

    def __init__(self, cert, order):
        self.cert = cert
        self.order = list(order)

    def __repr__(self):
        return "CanonicalForm(%r, %r)" % (self.cert, self.order)


# ----------------------------------------------------------------------
# generic matrix search

def _normalize(values):
    """Map arbitrary sortable values to dense ranks 0..c-1."""
    distinct = sorted(set(values))
    index = {value: i for i, value in enumerate(distinct)}
    return np.array([index[value] for value in values], dtype=np.int64)


class _Refiner(object):

    """Colour refinement on a fixed integer matrix."""

    def __init__(self, matrix):
        self.matrix = matrix
        n = matrix.shape[0]
        self.out_idx = [np.nonzero(matrix[v])[0] for v in range(n)]
        self.out_val = [matrix[v, self.out_idx[v]].tolist() for v in range(n)]
        self.in_idx = [np.nonzero(matrix[:, v])[0] for v in range(n)]
        self.in_val = [matrix[self.in_idx[v], v].tolist() for v in range(n)]

    def refine(self, colors):
        """Refine colors until stable.

        The relative order of existing cells is preserved, so the result only
        depends on the isomorphism type of (matrix, colors).
        """
        colors = _normalize(colors.tolist())
        n_colors = int(colors.max()) + 1 if len(colors) else 0
        while True:
            signatures = []
            for v in range(len(colors)):
                signatures.append((
                    int(colors[v]),
                    tuple(sorted(zip(self.out_val[v],
                                     colors[self.out_idx[v]].tolist()))),
                    tuple(sorted(zip(self.in_val[v],
                                     colors[self.in_idx[v]].tolist()))),
                ))
            refined = _normalize(signatures)
            n_refined = int(refined.max()) + 1 if len(refined) else 0
            if n_refined == n_colors:
                return refined
            colors, n_colors = refined, n_refined


def refine_colors(matrix, colors):
    """Stable colour refinement of an integer matrix with initial colours.

    Returns dense colours 0..c-1 whose cells only depend on the isomorphism
    type of (matrix, colors); used to prune bijection searches.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    return _Refiner(matrix).refine(np.asarray(colors, dtype=np.int64))


def _orbit_partner(automorphisms, prefix, u, v):
    """True iff u and v share an orbit of the automorphisms fixing prefix."""
    stabilizing = [a for a in automorphisms
                   if all(a[p] == p for p in prefix)]
    if not stabilizing:
        return False
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for aut in stabilizing:
        for x, y in enumerate(aut.tolist()):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return find(u) == find(v)


def canonical_matrix_form(matrix, colors=None, dtype='>i4'):
    """Canonical ordering of a square integer matrix.

    Parameters
    ----------
    matrix : array-like, shape = (n, n)
        Integer matrix; entry (u, v) is the colour of the arc u -> v, zero
        meaning no arc. The diagonal may carry vertex information.

    colors : array-like of int, shape = (n, ), optional
        Initial vertex colours; their values are part of the certificate.

    dtype : str, optional (default='>i4')
        Big-endian integer dtype used to serialize the canonical matrix.

    Returns
    -------
    order : list of int
        order[i] is the vertex placed at canonical position i.

    key : bytes
        Serialization of the initial colours and the matrix, both permuted
        by order. Equal keys iff the inputs are isomorphic.
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    n = matrix.shape[0]
    if colors is None:
        colors = np.zeros(n, dtype=np.int64)
    colors = np.asarray(colors, dtype=np.int64)
    if n == 0:
        return [], b''

    refiner = _Refiner(matrix)
    best = {'key': None, 'order': None}
    automorphisms = []
    stats = {'leaves': 0}

    def search(cell_colors, prefix):
        cell_colors = refiner.refine(cell_colors)
        counts = np.bincount(cell_colors)
        if counts.max() == 1:
            stats['leaves'] += 1
            order = np.argsort(cell_colors, kind='stable')
            key = matrix[np.ix_(order, order)].astype(dtype).tobytes()
            if best['key'] is None or key < best['key']:
                best['key'], best['order'] = key, order
            elif key == best['key']:
                aut = np.empty(n, dtype=np.int64)
                aut[best['order']] = order
                automorphisms.append(aut)
            return
        target = int(np.nonzero(counts > 1)[0][0])
        members = np.nonzero(cell_colors == target)[0].tolist()
        explored = []
        for v in members:
            if any(_orbit_partner(automorphisms, prefix, u, v)
                   for u in explored):
                continue
            explored.append(v)
            individualized = 2 * cell_colors + 1
            individualized[v] -= 1
            search(individualized, prefix + [v])

    search(colors, [])
    order = best['order']
    LOGGER.debug("canonical search on %d vertices: %d leaves, %d automorphisms",
                 n, stats['leaves'], len(automorphisms))
    key = colors[order].astype(dtype).tobytes() + best['key']
    return order.tolist(), key


# ----------------------------------------------------------------------
# graphs

#: Bound on memoized connected component forms (least recently used evicted).
CONNECTED_CACHE_SIZE = 1 << 16


@functools.lru_cache(maxsize=CONNECTED_CACHE_SIZE)
def _connected_form(m, edges):
    """Canonical (cert bytes, order) of a connected graph on 0..m-1."""
    adj = np.zeros((m, m), dtype=np.int64)
    for u, v in edges:
        adj[u, v] = adj[v, u] = 1
    order, _ = canonical_matrix_form(adj, adj.sum(axis=1))
    canon = adj[np.ix_(order, order)]
    bits = canon[np.triu_indices(m, 1)].astype(np.uint8)
    return bytes([m]) + np.packbits(bits).tobytes(), tuple(order)


def canonical_form(g):
    """Return the CanonicalForm of a graph.

    The certificate lists v(G) followed by the length-prefixed certificates
    of the components in sorted order; the order concatenates the canonical
    orders of the components in the same order.

    Parameters
    ----------
    g : Graph

    Returns
    -------
    form : CanonicalForm
    """
    parts = []
    for comp in g.components():
        index = {u: i for i, u in enumerate(comp)}
        local = tuple(sorted((index[u], index[v]) for u, v in g.edges
                             if u in index))
        cert, order = _connected_form(len(comp), local)
        parts.append((cert, [comp[i] for i in order]))
    parts.sort(key=lambda part: part[0])
    body = b''.join(bytes([len(cert)]) + cert for cert, _ in parts)
    order = [u for _, comp_order in parts for u in comp_order]
    return CanonicalForm(CanonicalCert(bytes([g.n]) + body), order)


def clear_canonical_cache():
    """Drop memoized connected component forms."""
    _connected_form.cache_clear()


def certificate(g):
    """Return the CanonicalCert of a graph."""
    return canonical_form(g).cert


def canonical_graph(g):
    """Return the representative of the isomorphism class of g."""
    return g.relabel(canonical_form(g).order)


def is_isomorphic(g, h):
    """True iff g and h are isomorphic."""
    if g.n != h.n or g.e != h.e:
        return False
    return certificate(g) == certificate(h)


def strip_isolated(g):
    """Return g restricted to its vertices of degree at least one."""
    return g.strip_isolated()


def core_certificate(g):
    """Certificate of strip_isolated(g)."""
    return certificate(g.strip_isolated())
