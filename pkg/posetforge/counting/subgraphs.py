"""Subgraph counters

Exact counters for the edge-subgraph weight q(H, G), the induced subgraph
weight p(H, G) and the component count k(H, G). Profiles (counts of every
isomorphism class at once) are memoized per certificate of the host graph,
since poset builders ask for the same hosts over and over. The memos grow
with the hosts seen until clear_profiles(); threads racing on one host may
both compute it, and the first stored profile is the one every caller gets.
"""
import collections
import itertools
import logging

from posetforge.base.errors import DisconnectedGraphError, IsolatedVertexError
from posetforge.graphs.canonical import (canonical_form, certificate,
                                         clear_canonical_cache)

LOGGER = logging.getLogger(__name__)

_EDGE_PROFILES = {}
_INDUCED_PROFILES = {}


def _edge_shape(edges):
    """(vertex count, sorted degree tuple) of the edge-subgraph on edges."""
    degree = collections.Counter(itertools.chain.from_iterable(edges))
    return len(degree), tuple(sorted(degree.values(), reverse=True))


def count_edge_subgraphs(h, g):
    """Return q(h, g), the number of edge-subgraphs of g isomorphic to h.

    Edge subsets of size e(h) are enumerated; subsets whose vertex count or
    degree sequence differ from h are rejected before canonical labeling.

    Parameters
    ----------
    h : Graph
        Pattern without isolated vertices.

    g : Graph
        Host graph.

    Returns
    -------
    count : int

    Raises
    ------
    IsolatedVertexError
        If h has an isolated vertex.
    """
    if h.isolated_vertices():
        raise IsolatedVertexError("pattern %r has isolated vertices" % (h, ))
    if h.e > g.e:
        return 0
    if h.e == 0:
        return 1
    target = certificate(h)
    shape = (h.n, h.degree_sequence())
    count = 0
    for subset in itertools.combinations(g.sorted_edges(), h.e):
        if _edge_shape(subset) != shape:
            continue
        if certificate(g.subgraph_on_edges(subset)) == target:
            count += 1
    return count


def count_edge_subgraphs_oracle(h, g):
    """q(h, g) without any pruning; used to cross-check the pruned counter."""
    if h.isolated_vertices():
        raise IsolatedVertexError("pattern %r has isolated vertices" % (h, ))
    target = certificate(h)
    return sum(1 for r in range(g.e + 1)
               for subset in itertools.combinations(g.sorted_edges(), r)
               if certificate(g.subgraph_on_edges(subset)) == target)


def _edge_classes(g):
    """Memoized (profile, representatives) over the non-empty edge subsets."""
    cert = certificate(g)
    found = _EDGE_PROFILES.get(cert)
    if found is None:
        profile = collections.Counter()
        representatives = {}
        edges = g.sorted_edges()
        for r in range(1, len(edges) + 1):
            for subset in itertools.combinations(edges, r):
                sub = g.subgraph_on_edges(subset)
                form = canonical_form(sub)
                profile[form.cert] += 1
                if form.cert not in representatives:
                    representatives[form.cert] = sub.relabel(form.order)
        found = _EDGE_PROFILES.setdefault(cert, (profile, representatives))
    return found


def edge_subgraph_profile(g):
    """Count the cores of all non-empty edge subsets of g.

    Returns
    -------
    profile : collections.Counter
        Maps the certificate of every edge-subgraph class to q(class, g).
    """
    return _edge_classes(g)[0]


def edge_subgraph_classes(g):
    """Canonical representative of every edge-subgraph class of g, by cert."""
    return _edge_classes(g)[1]


def count_induced_subgraphs(h, g):
    """Return p(h, g), the number of vertex subsets X with g[X] isomorphic to h.

    Parameters
    ----------
    h : Graph
        Pattern; isolated vertices allowed.

    g : Graph
        Host graph.

    Returns
    -------
    count : int
    """
    if h.n > g.n:
        return 0
    target = certificate(h)
    count = 0
    for subset in itertools.combinations(range(g.n), h.n):
        sub = g.induced_subgraph(subset)
        if sub.e == h.e and certificate(sub) == target:
            count += 1
    return count


def _induced_classes(g):
    """Memoized (profile, representatives) over the non-empty vertex subsets."""
    cert = certificate(g)
    found = _INDUCED_PROFILES.get(cert)
    if found is None:
        profile = collections.Counter()
        representatives = {}
        for r in range(1, g.n + 1):
            for subset in itertools.combinations(range(g.n), r):
                sub = g.induced_subgraph(subset)
                form = canonical_form(sub)
                profile[form.cert] += 1
                if form.cert not in representatives:
                    representatives[form.cert] = sub.relabel(form.order)
        found = _INDUCED_PROFILES.setdefault(
            cert, (profile, representatives))
    return found


def induced_subgraph_profile(g):
    """Count the classes of all non-empty induced subgraphs of g.

    Returns
    -------
    profile : collections.Counter
        Maps certificate to p(class, g).
    """
    return _induced_classes(g)[0]


def induced_subgraph_classes(g):
    """Canonical representative of every induced subgraph class of g."""
    return _induced_classes(g)[1]


def count_components_isomorphic(h, g):
    """Return k(h, g), the number of components of g isomorphic to h.

    Raises
    ------
    DisconnectedGraphError
        If h is not connected.
    """
    if not h.is_connected():
        raise DisconnectedGraphError("pattern %r is not connected" % (h, ))
    target = certificate(h)
    return sum(1 for comp in g.components()
               if len(comp) == h.n
               and certificate(g.induced_subgraph(comp)) == target)


def clear_profiles():
    """Drop memoized profiles (tests use this to measure fresh work)."""
    _EDGE_PROFILES.clear()
    _INDUCED_PROFILES.clear()
    clear_canonical_cache()
