"""Component counts from edge-subgraph counts

For graphs of maximum degree at most 3 without a chair (T4) subgraph, every
component is K3, K_{1,3}, a path, a cycle of length at least 4, S4, K4-e or
K4, and the number of components of each kind follows from q-counts alone:

    k(K4)   = q(K4)
    k(K4-e) = q(K4-e) - q(K4-e, K4) k(K4)
    k(S4)   = q(S4) - q(S4, K4-e) k(K4-e) - q(S4, K4) k(K4)
    k(K3)   = q(K3) - k(S4) - 2 k(K4-e) - 4 k(K4)
    k(C4)   = q(C4) - q(C4, K4-e) k(K4-e) - q(C4, K4) k(K4)
    k(C_i)  = q(C_i)                                   for i >= 5
    k(P_i)  = q(P_i) - sum_H q(P_i, H) k(H)            for i = n, ..., 2

with H ranging over K_{1,3}, K3, S4, K4-e, K4, the longer paths and the
cycles. k(K_{1,3}) obeys the same equation as k(K3) with q(K_{1,3}).
"""
import collections

from posetforge.base.errors import PosetForgeError
from posetforge.base.graph import Graph
from posetforge.counting.subgraphs import (count_components_isomorphic,
                                           count_edge_subgraphs)
from posetforge.graphs.canonical import certificate

K3 = Graph.complete(3)
K13 = Graph.star(3)
K4 = Graph.complete(4)
K4_MINUS_E = K4.remove_edge(0, 1)
PAW = K3.add_edge(2, 3)
CHAIR = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def is_component_count_eligible(g):
    """True iff max degree <= 3 and g has no chair subgraph."""
    return g.max_degree <= 3 and count_edge_subgraphs(CHAIR, g) == 0


def _shapes(n):
    """Named component shapes relevant for a graph on n vertices."""
    shapes = [('K4', K4), ('K4-e', K4_MINUS_E), ('S4', PAW), ('K3', K3),
              ('K1,3', K13)]
    shapes += [('C%d' % i, Graph.cycle(i)) for i in range(4, n + 1)]
    shapes += [('P%d' % i, Graph.path(i)) for i in range(n, 1, -1)]
    return shapes


def component_counts_from_q(g, q=None):
    """Solve the component counts of g from edge-subgraph counts.

    Parameters
    ----------
    g : Graph
        Maximum degree at most 3, no chair subgraph, no isolated vertices.

    q : callable, optional
        q(h) returns q(h, g); defaults to counting in g directly. Passing the
        weights of a Q-poset shows the counts depend on Q(g) only.

    Returns
    -------
    counts : collections.OrderedDict
        Maps 'K4', 'K4-e', 'S4', 'K3', 'K1,3', 'C4', ..., 'Cn', 'Pn', ...,
        'P2' to the number of components of that shape.

    Raises
    ------
    PosetForgeError
        If g is not eligible.
    """
    if not is_component_count_eligible(g):
        raise PosetForgeError("component counts need max degree <= 3 and no "
                              "chair subgraph, got %r" % (g, ))
    if q is None:
        def q(h):
            return count_edge_subgraphs(h, g)
    n = g.n
    k = collections.OrderedDict()
    k['K4'] = q(K4)
    k['K4-e'] = q(K4_MINUS_E) - count_edge_subgraphs(K4_MINUS_E, K4) * k['K4']
    k['S4'] = (q(PAW) - count_edge_subgraphs(PAW, K4_MINUS_E) * k['K4-e'] -
               count_edge_subgraphs(PAW, K4) * k['K4'])
    k['K3'] = q(K3) - k['S4'] - 2 * k['K4-e'] - 4 * k['K4']
    k['K1,3'] = q(K13) - k['S4'] - 2 * k['K4-e'] - 4 * k['K4']
    if n >= 4:
        c4 = Graph.cycle(4)
        k['C4'] = (q(c4) - count_edge_subgraphs(c4, K4_MINUS_E) * k['K4-e'] -
                   count_edge_subgraphs(c4, K4) * k['K4'])
    for i in range(5, n + 1):
        k['C%d' % i] = q(Graph.cycle(i))
    solved = [(name, shape) for name, shape in _shapes(n) if name in k]
    for i in range(n, 1, -1):
        path = Graph.path(i)
        value = q(path)
        for name, shape in solved:
            if k[name]:
                value -= count_edge_subgraphs(path, shape) * k[name]
        k['P%d' % i] = value
        solved.append(('P%d' % i, path))
    return k


def direct_component_counts(g):
    """The counts of :py:func:`component_counts_from_q`, read off g directly."""
    return collections.OrderedDict(
        (name, count_components_isomorphic(shape, g))
        for name, shape in _shapes(g.n))


def q_counts_from_poset(q_poset):
    """Return h -> q(h, top) read from the weights of a concrete Q-poset."""
    top = q_poset.top

    def q(h):
        x = q_poset.index_of(certificate(h))
        return 0 if x is None else q_poset.weight(x, top)
    return q
