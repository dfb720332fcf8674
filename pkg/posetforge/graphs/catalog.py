"""Catalog of small graphs

The catalog holds one representative of every isomorphism class of graphs
without isolated vertices and with 1..max_edges edges. Level m+1 is produced
from level m by adding one edge in every possible position (between two
existing vertices, from an existing vertex to a new one, or as a new K2
component) and deduplicating by certificate; every graph of level m+1 arises
this way because deleting any edge of it and stripping isolated vertices
lands in level m.
"""
import logging

from joblib import Parallel, delayed

from posetforge.base import settings
from posetforge.base.errors import CatalogBoundError
from posetforge.base.graph import Graph
from posetforge.graphs.canonical import canonical_graph, certificate
from posetforge.graphs.formats import format_graph6, parse_graph6

LOGGER = logging.getLogger(__name__)


def one_edge_extensions(graph):
    """All one-edge extensions of graph without isolated vertices.

    Returns
    -------
    extensions : dict
        Maps certificate to the canonical representative.
    """
    n = graph.n
    found = {}
    candidates = []
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in graph.edges:
                candidates.append(graph.add_edge(u, v))
    for u in range(n):
        candidates.append(graph.add_edge(u, n))
    candidates.append(graph.add_edge(n, n + 1))
    for cand in candidates:
        cert = certificate(cand)
        if cert not in found:
            found[cert] = canonical_graph(cand)
    return found


def check_bound(max_edges, cap=None):
    """Validate an edge bound against the configured hard cap."""
    cap = settings.MAX_EDGES_CAP if cap is None else cap
    if not isinstance(max_edges, int) or not 1 <= max_edges <= cap:
        raise CatalogBoundError(
            "edge bound must satisfy 1 <= bound <= %d, got %r" % (cap, max_edges))
    return max_edges


class Catalog(object):

    """Every graph without isolated vertices up to an edge bound.

    Parameters
    ----------
    max_edges : int
        The edge bound.

    entries : list of (CanonicalCert, Graph)
        Canonical representatives; sorted by (e(G), cert) on construction.

    cache : PosetCache, optional (default=None)
        Disk cache consulted by :py:meth:`poset` before building.

    n_jobs : int, optional
        Worker count for catalog-wide poset builds.

    Attributes
    ----------
    entries : list of (CanonicalCert, Graph)
    """

    def __init__(self, max_edges, entries, **kwargs):
        self.max_edges = max_edges
        self.entries = sorted(entries, key=lambda entry: (entry[1].e, entry[0]))
        self._index = {cert: graph for cert, graph in self.entries}
        self.cache = kwargs.pop('cache', None)
        self.n_jobs = kwargs.pop('n_jobs', settings.N_JOBS)
        self._posets = {}
        self._abstract_index = {}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, graph):
        return self.find(graph) is not None

    def graphs(self, max_edges=None):
        """Catalog graphs in catalog order, optionally up to an edge bound."""
        return [g for _, g in self.entries
                if max_edges is None or g.e <= max_edges]

    def level(self, m):
        """Graphs with exactly m edges, in catalog order."""
        return [g for _, g in self.entries if g.e == m]

    def counts_by_level(self):
        """List of entry counts for m = 1..max_edges."""
        counts = [0] * self.max_edges
        for _, g in self.entries:
            counts[g.e - 1] += 1
        return counts

    def find(self, graph):
        """Return the catalog representative isomorphic to graph, or None."""
        return self._index.get(certificate(graph.strip_isolated()))

    def require_bound(self, m):
        """Raise CatalogBoundError if m exceeds the catalog bound."""
        if m > self.max_edges:
            raise CatalogBoundError(
                "%d edges exceed the catalog bound %d" % (m, self.max_edges))

    # ------------------------------------------------------------------
    # poset memo

    def poset(self, graph, kind):
        """Concrete poset of a catalog graph, memoized per (cert, kind).

        Parameters
        ----------
        graph : Graph

        kind : {'Q', 'P', 'OMEGA'}
        """
        from posetforge.posets.builders import build_poset
        cert = certificate(graph)
        key = (cert, kind)
        if key not in self._posets:
            poset = None
            if self.cache is not None:
                poset = self.cache.get(cert, kind)
            if poset is None:
                poset = build_poset(graph, kind)
                if self.cache is not None:
                    self.cache.put(cert, kind, poset)
            self._posets[key] = poset
        return self._posets[key]

    def abstract_certificate(self, graph, kind):
        """Abstract certificate of the concrete poset of graph."""
        return self.poset(graph, kind).cert

    def abstract_index(self, kind):
        """Group catalog graphs by abstract certificate of a poset kind.

        Returns
        -------
        index : dict
            Maps abstract certificate to the list of catalog graphs sharing
            it, in catalog order.
        """
        if kind not in self._abstract_index:
            graphs = self.graphs()
            missing = [g for g in graphs
                       if (certificate(g), kind) not in self._posets]
            if missing and self.n_jobs != 1:
                from posetforge.posets.builders import build_poset
                built = Parallel(n_jobs=self.n_jobs)(
                    delayed(build_poset)(g, kind) for g in missing)
                for g, poset in zip(missing, built):
                    self._posets[(certificate(g), kind)] = poset
            index = {}
            for g in graphs:
                index.setdefault(self.abstract_certificate(g, kind), []).append(g)
            self._abstract_index[kind] = index
        return self._abstract_index[kind]

    # ------------------------------------------------------------------
    # persistence

    def save(self, path):
        """Write one graph6 line per entry, in catalog order."""
        with open(path, 'w') as f:
            f.write(self.format())

    def format(self):
        """Catalog file contents."""
        return ''.join(format_graph6(g) + '\n' for _, g in self.entries)

    @classmethod
    def load(cls, path, **kwargs):
        """Read a catalog file written by :py:meth:`save`."""
        entries = []
        with open(path) as f:
            for line in f:
                line = line.strip()
                if line:
                    graph = parse_graph6(line)
                    entries.append((certificate(graph), graph))
        max_edges = max(g.e for _, g in entries) if entries else 0
        return cls(max_edges, entries, **kwargs)


def enumerate_catalog(max_edges, n_jobs=1, **kwargs):
    """Enumerate every graph without isolated vertices up to max_edges edges.

    Parameters
    ----------
    max_edges : int
        1 <= max_edges <= POSETFORGE_MAX_EDGES_CAP.

    n_jobs : int, optional (default=1)
        joblib workers used to extend each level; the result is identical
        for every worker count.

    Returns
    -------
    catalog : Catalog
    """
    check_bound(max_edges)
    k2 = Graph.complete(2)
    level = {certificate(k2): k2}
    entries = list(level.items())
    for m in range(2, max_edges + 1):
        parents = [level[cert] for cert in sorted(level)]
        if n_jobs == 1:
            extended = [one_edge_extensions(g) for g in parents]
        else:
            extended = Parallel(n_jobs=n_jobs)(
                delayed(one_edge_extensions)(g) for g in parents)
        level = {}
        for found in extended:
            for cert, graph in found.items():
                level.setdefault(cert, graph)
        LOGGER.info("catalog level %d: %d graphs", m, len(level))
        entries.extend(level.items())
    kwargs.setdefault('n_jobs', n_jobs)
    return Catalog(max_edges, entries, **kwargs)
