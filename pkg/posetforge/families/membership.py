"""Membership in the exceptional families

F0 = {3K2, K3, K_{1,3}}
F1 = {P4, K_{1,2}+K2, P4+K2, T4}
F2 = {C4, 2K_{1,2}, C4+K2, B1, P6, B2, B3, B4}
F3 = {K_{1,m}, mK2 : m > 1, m != 3}
F4 = {rK3 + sK_{1,3} + F : r != s, F in N^X} minus {K3, K_{1,3}}

M = F0 | F2 | F4 blocks the reconstruction of the bond lattice from the
edge-subgraph poset, N = F0 | ... | F4 blocks that of the induced subgraph
poset. X holds the paths on at least 2 vertices, the cycles on at least 4
vertices, S4, K4-e and K4; N^X holds the disjoint unions of members of X.
"""
import logging

from posetforge.base.errors import (DisconnectedGraphError,
                                    ExceptionalTableError, IsolatedVertexError)
from posetforge.base.graph import Graph
from posetforge.graphs.canonical import certificate

LOGGER = logging.getLogger(__name__)

FAMILIES = ('F0', 'F1', 'F2', 'F3', 'F4')

K2 = Graph.complete(2)
K3 = Graph.complete(3)
K13 = Graph.star(3)
P4 = Graph.path(4)
K12_K2 = Graph.star(2).disjoint_union(K2)
P4_K2 = P4.disjoint_union(K2)
C4 = Graph.cycle(4)
TWO_K12 = Graph.star(2).copies(2)
C4_K2 = C4.disjoint_union(K2)
P6 = Graph.path(6)
K4 = Graph.complete(4)
K4_MINUS_E = K4.remove_edge(0, 1)
F0_GRAPHS = (Graph.matching(3), K3, K13)


class FamilyTag(object):

    """Families a graph belongs to.

    Attributes
    ----------
    flags : frozenset of str
        Subset of {'F0', 'F1', 'F2', 'F3', 'F4'}.
    """

    __slots__ = ('flags', )

    def __init__(self, flags=()):
        flags = frozenset(flags)
        unknown = flags - set(FAMILIES)
        if unknown:
            raise ValueError("unknown families %s" % sorted(unknown))
        self.flags = flags

    @property
    def in_m(self):
        """True iff the graph lies in M = F0 | F2 | F4."""
        return bool(self.flags & {'F0', 'F2', 'F4'})

    @property
    def in_n(self):
        """True iff the graph lies in N, the union of F0..F4."""
        return bool(self.flags)

    def __eq__(self, other):
        return isinstance(other, FamilyTag) and self.flags == other.flags

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.flags)

    def __repr__(self):
        return "FamilyTag(%s)" % ','.join(sorted(self.flags))


def _is_tree(g):
    return g.is_connected() and g.e == g.n - 1


def is_path(g):
    """True iff g is a path P_n with n >= 1."""
    return _is_tree(g) and g.max_degree <= 2


def is_cycle(g):
    """True iff g is a cycle C_n with n >= 3."""
    return g.n >= 3 and g.is_connected() and g.min_degree == g.max_degree == 2


def star_size(g):
    """m if g is the star K_{1,m} with m >= 1, else None."""
    if g.n < 2 or not _is_tree(g) or g.max_degree != g.n - 1:
        return None
    return g.n - 1


def matching_size(g):
    """m if g is the matching mK2 with m >= 1, else None."""
    if g.n == 0 or g.min_degree != 1 or g.max_degree != 1:
        return None
    return g.e


def _named_cert(table, name, default):
    if table is not None and name in table.names:
        return certificate(table.names[name])
    return certificate(default)


def in_X(g, table=None):
    """True iff the connected graph g lies in X.

    Parameters
    ----------
    g : Graph
        Connected graph.

    table : ExceptionalTable, optional (default=None)
        Source of the resolved S4 and K4-e; when omitted, the paw and K4-e
        are built directly.

    Raises
    ------
    DisconnectedGraphError
    """
    if not g.is_connected():
        raise DisconnectedGraphError("X membership needs a connected graph, "
                                     "got %r" % (g, ))
    if g.n >= 2 and is_path(g):
        return True
    if g.n >= 4 and is_cycle(g):
        return True
    if g.n != 4:
        return False
    paw = K3.add_edge(2, 3)
    specials = {_named_cert(table, 'S4', paw),
                _named_cert(table, 'K4-e', K4_MINUS_E), certificate(K4)}
    return certificate(g) in specials


def in_natural_x(g, table=None):
    """True iff every component of g lies in X (the null graph included)."""
    core = g.strip_isolated()
    if core.n != g.n:
        return False
    return all(in_X(core.induced_subgraph(comp), table)
               for comp in core.components())


def f4_decomposition(g, table=None):
    """Split g into rK3 + sK_{1,3} + F.

    Returns
    -------
    decomposition : tuple (r, s, F) or None
        None if some component is neither K3, K_{1,3} nor a member of X.
    """
    k3, k13 = certificate(K3), certificate(K13)
    r = s = 0
    rest = Graph.null()
    for comp in g.components():
        component = g.induced_subgraph(comp)
        cert = certificate(component)
        if cert == k3:
            r += 1
        elif cert == k13:
            s += 1
        elif in_X(component, table):
            rest = rest.disjoint_union(component)
        else:
            return None
    return r, s, rest


def in_f4(g, table=None):
    """True iff g = rK3 + sK_{1,3} + F with r != s, F in N^X, g not K3, K_{1,3}."""
    decomposition = f4_decomposition(g, table)
    if decomposition is None:
        return False
    r, s, rest = decomposition
    if r == s:
        return False
    return not (r + s == 1 and rest.n == 0)


def family_members(table):
    """Certificates of the finite families F0, F1 and F2.

    Parameters
    ----------
    table : ExceptionalTable
        A resolved table.

    Returns
    -------
    members : dict
        Maps 'F0', 'F1', 'F2' to a set of certificates.
    """
    if table is None or not table.is_resolved():
        raise ExceptionalTableError(
            'table', [], "classification needs a resolved exceptional table")
    named = table.names
    return {
        'F0': {certificate(g) for g in F0_GRAPHS},
        'F1': {certificate(g) for g in (P4, K12_K2, P4_K2, named['T4'])},
        'F2': {certificate(g) for g in (C4, TWO_K12, C4_K2, named['B1'], P6,
                                        named['B2'], named['B3'],
                                        named['B4'])},
    }


def classify(g, table):
    """Return the FamilyTag of a graph without isolated vertices.

    Parameters
    ----------
    g : Graph

    table : ExceptionalTable
        A resolved table.

    Returns
    -------
    tag : FamilyTag

    Raises
    ------
    IsolatedVertexError
        If g has an isolated vertex.

    ExceptionalTableError
        If the table is missing or unresolved.
    """
    if g.isolated_vertices():
        raise IsolatedVertexError("classify needs a graph without isolated "
                                  "vertices, got %r" % (g, ))
    members = family_members(table)
    cert = certificate(g)
    flags = [name for name in ('F0', 'F1', 'F2') if cert in members[name]]
    m = star_size(g) or matching_size(g)
    if m is not None and m > 1 and m != 3:
        flags.append('F3')
    if in_f4(g, table):
        flags.append('F4')
    return FamilyTag(flags)
