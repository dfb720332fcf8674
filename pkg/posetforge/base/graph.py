"""
The graph object used in this package.

A Graph is a labeled simple graph on the vertices 0, ..., n-1. Graphs are
immutable values: every operation returns a new Graph.
"""
import itertools

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components


class Graph(object):

    """Labeled simple graph

    Parameters
    ----------
    n : int
        Number of vertices.

    edges : iterable of pairs
        Unordered vertex pairs {u, v} with 0 <= u, v < n and u != v.
        Duplicates are merged.

    Attributes
    ----------
    n : int
        Number of vertices, v(G).

    edges : frozenset of tuple
        Edges as (u, v) tuples with u < v.

    Examples
    --------
    .. code-block:: python

       from posetforge.base.graph import Graph

       paw = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
       paw.e, paw.k, paw.max_degree   # (4, 1, 3)
    """

    __slots__ = ('n', 'edges', '_adjacency', '_components', '_hash')

    def __init__(self, n, edges=()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative, got %d" % n)
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError("loop at vertex %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge %d-%d out of range for n=%d" % (u, v, n))
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'edges', frozenset(normalized))
        object.__setattr__(self, '_adjacency', None)
        object.__setattr__(self, '_components', None)
        object.__setattr__(self, '_hash', None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, '_hash', hash((self.n, self.edges)))
        return self._hash

    def __repr__(self):
        return "Graph(%d, %s)" % (self.n, self.sorted_edges())

    def __getstate__(self):
        return (self.n, self.sorted_edges())

    def __setstate__(self, state):
        n, edges = state
        Graph.__init__(self, n, edges)

    # ------------------------------------------------------------------
    # derived invariants

    @property
    def v(self):
        """Number of vertices, v(G)."""
        return self.n

    @property
    def e(self):
        """Number of edges, e(G)."""
        return len(self.edges)

    @property
    def k(self):
        """Number of connected components, k(G). The null graph has 0."""
        return len(self.components())

    @property
    def degrees(self):
        """Degree of every vertex.

        Returns
        -------
        degrees : numpy array of int, shape = (n, )
        """
        return self.adjacency.sum(axis=1)

    @property
    def max_degree(self):
        """Maximum degree, Delta(G); 0 for the null graph."""
        return int(self.degrees.max()) if self.n else 0

    @property
    def min_degree(self):
        """Minimum degree, delta(G); 0 for the null graph."""
        return int(self.degrees.min()) if self.n else 0

    @property
    def adjacency(self):
        """Symmetric 0/1 adjacency matrix.

        Returns
        -------
        adjacency : numpy array of int8, shape = (n, n)
        """
        if self._adjacency is None:
            adj = np.zeros((self.n, self.n), dtype=np.int8)
            for u, v in self.edges:
                adj[u, v] = adj[v, u] = 1
            adj.setflags(write=False)
            object.__setattr__(self, '_adjacency', adj)
        return self._adjacency

    def sorted_edges(self):
        """Edges as a sorted list of (u, v) tuples."""
        return sorted(self.edges)

    def degree_sequence(self):
        """Non-increasing degree sequence as a tuple."""
        return tuple(sorted(self.degrees.tolist(), reverse=True))

    def neighbors(self, u):
        """Sorted list of the neighbours of vertex u."""
        return np.nonzero(self.adjacency[u])[0].tolist()

    def components(self):
        """Vertex sets of the connected components.

        Returns
        -------
        components : list of tuple
            One sorted tuple of vertices per component, ordered by smallest
            vertex.
        """
        if self._components is None:
            if self.n == 0:
                comps = ()
            else:
                count, labels = connected_components(
                    sp.csr_matrix(self.adjacency), directed=False)
                groups = [[] for _ in range(count)]
                for vertex, label in enumerate(labels):
                    groups[label].append(vertex)
                comps = tuple(sorted(tuple(g) for g in groups))
            object.__setattr__(self, '_components', comps)
        return list(self._components)

    def is_connected(self):
        """True iff the graph has exactly one component."""
        return self.k == 1

    def isolated_vertices(self):
        """Sorted list of vertices of degree 0."""
        return np.nonzero(self.degrees == 0)[0].tolist()

    # ------------------------------------------------------------------
    # derived graphs

    def induced_subgraph(self, vertices):
        """Return G[X] relabeled to 0..|X|-1 in increasing vertex order."""
        vertices = sorted(vertices)
        index = {u: i for i, u in enumerate(vertices)}
        return Graph(len(vertices), [(index[u], index[v])
                                     for u, v in self.edges
                                     if u in index and v in index])

    def subgraph_on_edges(self, edges):
        """Return the edge-subgraph G[E].

        Its vertex set is the set of endpoints of E, relabeled to
        0..|V(E)|-1 in increasing vertex order, so it has no isolated
        vertices.
        """
        edges = list(edges)
        vertices = sorted(set(itertools.chain.from_iterable(edges)))
        index = {u: i for i, u in enumerate(vertices)}
        return Graph(len(vertices), [(index[u], index[v]) for u, v in edges])

    def relabel(self, order):
        """Relabel so that vertex order[i] becomes vertex i.

        Parameters
        ----------
        order : sequence of int
            A permutation of range(n).
        """
        order = list(order)
        if sorted(order) != list(range(self.n)):
            raise ValueError("order is not a permutation of range(%d)" % self.n)
        position = {u: i for i, u in enumerate(order)}
        return Graph(self.n, [(position[u], position[v]) for u, v in self.edges])

    def strip_isolated(self):
        """Return the core: G restricted to vertices of degree >= 1."""
        keep = np.nonzero(self.degrees > 0)[0].tolist() if self.n else []
        if len(keep) == self.n:
            return self
        return self.induced_subgraph(keep)

    def disjoint_union(self, other):
        """Return G + H, the vertices of H shifted by v(G)."""
        shift = self.n
        return Graph(self.n + other.n,
                     list(self.edges) +
                     [(u + shift, v + shift) for u, v in other.edges])

    def add_isolated(self, count):
        """Return G + count*K1."""
        return Graph(self.n + count, self.edges)

    def add_edge(self, u, v):
        """Return G + uv, growing the vertex set if u or v is new."""
        return Graph(max(self.n, u + 1, v + 1), list(self.edges) + [(u, v)])

    def remove_edge(self, u, v):
        """Return G - uv (spanning; isolated vertices are kept)."""
        edge = (u, v) if u < v else (v, u)
        if edge not in self.edges:
            raise ValueError("edge %d-%d not in graph" % edge)
        return Graph(self.n, self.edges - {edge})

    def copies(self, count):
        """Return count disjoint copies of the graph."""
        result = Graph(0)
        for _ in range(count):
            result = result.disjoint_union(self)
        return result

    # ------------------------------------------------------------------
    # named graphs

    @classmethod
    def null(cls):
        """The null graph Phi (no vertices)."""
        return cls(0)

    @classmethod
    def empty(cls, n):
        """The empty graph nK1."""
        return cls(n)

    @classmethod
    def path(cls, n):
        """The path P_n on n vertices."""
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n):
        """The cycle C_n, n >= 3."""
        if n < 3:
            raise ValueError("cycles need at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n):
        """The complete graph K_n."""
        return cls(n, itertools.combinations(range(n), 2))

    @classmethod
    def star(cls, m):
        """The star K_{1,m}, centre 0."""
        return cls(m + 1, [(0, i) for i in range(1, m + 1)])

    @classmethod
    def matching(cls, m):
        """The perfect matching mK2."""
        return cls(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])
