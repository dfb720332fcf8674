"""Builders of the concrete posets Q(G), P(G) and Omega(G)

Elements are canonical representatives of graph classes, sorted by
(rank, certificate); weights are read off the memoized class profiles of
the larger element, so every pair costs one dictionary lookup once the
profiles exist.
"""
import logging

import numpy as np

from posetforge.base.errors import EmptyGraphError
from posetforge.base.graph import Graph
from posetforge.base.interfaces import PosetBuilder
from posetforge.base.poset import KIND_OMEGA, KIND_P, KIND_Q, WeightedPoset
from posetforge.counting.partitions import omega_classes, omega_profile
from posetforge.counting.subgraphs import (edge_subgraph_classes,
                                           edge_subgraph_profile,
                                           induced_subgraph_classes,
                                           induced_subgraph_profile)
from posetforge.graphs.canonical import certificate
from posetforge.utils import inherit_docstring_from

LOGGER = logging.getLogger(__name__)


def _weight_matrix(certs, profile_of):
    """W[x, y] = profile_of(y)[cert x]; profiles already count y in itself."""
    n = len(certs)
    weights = np.zeros((n, n), dtype=np.int64)
    for y in range(n):
        profile = profile_of(y)
        for x in range(n):
            weights[x, y] = profile.get(certs[x], 0)
    return weights


class EdgeSubgraphPosetBuilder(PosetBuilder):

    """Build Q(G), the edge-subgraph poset.

    Elements are the cores of the edge-subgraphs of G with at least one
    edge; x <= y iff x is an edge-subgraph of y, with weight q(x, y) and
    rank e(x). Isolated vertices of G are stripped with a warning.
    """

    kind = KIND_Q

    @inherit_docstring_from(PosetBuilder)
    def build(self, graph):
        if graph.e == 0:
            raise EmptyGraphError("Q(G) needs at least one edge, got %r"
                                  % (graph, ))
        core = graph.strip_isolated()
        if core.n != graph.n:
            LOGGER.warning("stripping %d isolated vertices before building Q",
                           graph.n - core.n)
        classes = edge_subgraph_classes(core)
        certs = sorted(classes, key=lambda c: (classes[c].e, c))
        graphs = [classes[c] for c in certs]
        weights = _weight_matrix(
            certs, lambda y: edge_subgraph_profile(graphs[y]))
        return WeightedPoset(weights, [g.e for g in graphs], self.kind,
                             labels=certs, graphs=graphs)


class InducedSubgraphPosetBuilder(PosetBuilder):

    """Build P(G), the induced subgraph poset.

    Elements are K1 and the induced subgraphs of G with at least one edge;
    isolated vertices inside an induced subgraph are kept. Weights are
    p(x, y) and the rank is v(x).
    """

    kind = KIND_P

    @inherit_docstring_from(PosetBuilder)
    def build(self, graph):
        if graph.n == 0:
            raise EmptyGraphError("P(G) needs at least one vertex")
        classes = induced_subgraph_classes(graph)
        k1 = Graph(1)
        kept = {c: g for c, g in classes.items() if g.e > 0}
        kept[certificate(k1)] = k1
        certs = sorted(kept, key=lambda c: (kept[c].n, c))
        graphs = [kept[c] for c in certs]
        weights = _weight_matrix(
            certs, lambda y: induced_subgraph_profile(graphs[y]))
        return WeightedPoset(weights, [g.n for g in graphs], self.kind,
                             labels=certs, graphs=graphs)


class BondLatticeBuilder(PosetBuilder):

    """Build Omega(G), the bond lattice.

    Elements are the spanning images G[pi] of the connected partitions of
    V(G); the weight of (h_i, h_j) is the number of connected partitions of
    V(h_j) with image isomorphic to h_i, which equals the number of block
    families of the core of h_j with image the core of h_i. The rank is
    gamma(h) = v(G) - k(h); the bottom is v(G)K1.
    """

    kind = KIND_OMEGA

    @inherit_docstring_from(PosetBuilder)
    def build(self, graph):
        if graph.n == 0:
            raise EmptyGraphError("Omega(G) needs at least one vertex")
        cores = omega_classes(graph)
        certs = sorted(cores, key=lambda c: (cores[c].n - cores[c].k, c))
        core_graphs = [cores[c] for c in certs]
        weights = _weight_matrix(
            certs, lambda y: omega_profile(core_graphs[y]))
        graphs = [core.add_isolated(graph.n - core.n) for core in core_graphs]
        return WeightedPoset(weights, [graph.n - g.k for g in graphs],
                             self.kind, graphs=graphs)


BUILDERS = {
    KIND_Q: EdgeSubgraphPosetBuilder(),
    KIND_P: InducedSubgraphPosetBuilder(),
    KIND_OMEGA: BondLatticeBuilder(),
}


def build_Q(graph):
    """Return the concrete edge-subgraph poset Q(graph)."""
    return BUILDERS[KIND_Q].build(graph)


def build_P(graph):
    """Return the concrete induced subgraph poset P(graph)."""
    return BUILDERS[KIND_P].build(graph)


def build_Omega(graph):
    """Return the concrete bond lattice Omega(graph)."""
    return BUILDERS[KIND_OMEGA].build(graph)


def build_poset(graph, kind):
    """Dispatch on kind ('Q', 'P' or 'OMEGA', case-insensitive)."""
    kind = normalize_kind(kind)
    return BUILDERS[kind].build(graph)


def normalize_kind(kind):
    """Map 'q', 'p', 'omega' (any case) to the poset kind tags."""
    normalized = str(kind).upper()
    if normalized not in BUILDERS:
        raise ValueError("unknown poset kind %r" % (kind, ))
    return normalized
