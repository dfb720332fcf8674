"""The table of exceptional graphs

The named graphs T4, S4, B1, ..., B4, S5 and T5 are not given by formulas;
each one is found in the catalog from the role it plays (a collision
partner, a set of subgraph counts, an extension of a star) and the search
fails loudly unless exactly one graph fits the role.
"""
import logging

from posetforge.base.errors import CatalogBoundError, ExceptionalTableError
from posetforge.base.graph import Graph
from posetforge.base.poset import KIND_OMEGA, KIND_Q
from posetforge.counting.subgraphs import count_edge_subgraphs
from posetforge.families.membership import (C4, C4_K2, F0_GRAPHS, K12_K2, K3,
                                             K4_MINUS_E, P4, P4_K2, P6,
                                             TWO_K12, in_f4, star_size)
from posetforge.graphs.canonical import certificate
from posetforge.graphs.catalog import one_edge_extensions
from posetforge.graphs.formats import format_graph6, parse_graph6

LOGGER = logging.getLogger(__name__)

NAMES = ('T4', 'S4', 'K4-e', 'B1', 'B2', 'B3', 'B4', 'S5', 'T5')

#: Smallest catalog bound from which every named graph can be resolved.
MIN_BOUND = 6


class ExceptionalTable(object):

    """Resolved exceptional graphs and the collision pairs they form.

    Parameters
    ----------
    names : dict
        Maps each of NAMES to a Graph.

    pairs : list of (Graph, Graph, bool)
        Pairs with equal abstract Q-posets; the flag tells whether their
        abstract bond lattices differ.

    unexplained : list of (Graph, Graph)
        Catalog pairs sharing the abstract Q-poset, with differing bond
        lattices, that belong to none of the exceptional families.

    Attributes
    ----------
    names : dict

    pairs : list of (Graph, Graph, bool)

    unexplained : list of (Graph, Graph)
    """

    def __init__(self, names, pairs=(), unexplained=()):
        self.names = dict(names)
        self.pairs = list(pairs)
        self.unexplained = list(unexplained)

    def is_resolved(self):
        """True iff every name is bound."""
        return all(name in self.names for name in NAMES)

    def cert(self, name):
        """Certificate of a named graph."""
        return certificate(self.names[name])

    def f2_pairs(self):
        """Pairs whose bond lattices differ."""
        return [(a, b) for a, b, differs in self.pairs if differs]

    def shared_lattice_pairs(self):
        """Pairs whose bond lattices agree."""
        return [(a, b) for a, b, differs in self.pairs if not differs]

    def unexplained_certificates(self):
        """Certificates of every graph in an unexplained pair."""
        return {certificate(g) for pair in self.unexplained for g in pair}

    def format(self):
        """Table file contents."""
        lines = ["name %s %s" % (name, format_graph6(self.names[name]))
                 for name in NAMES if name in self.names]
        lines.extend("pair %s %s omegaDiffers=%d"
                     % (format_graph6(a), format_graph6(b), int(differs))
                     for a, b, differs in self.pairs)
        lines.extend("pair %s %s omegaDiffers=1 unexplained"
                     % (format_graph6(a), format_graph6(b))
                     for a, b in self.unexplained)
        return '\n'.join(lines) + '\n'

    def save(self, path):
        """Write :py:meth:`format` to path."""
        with open(path, 'w') as f:
            f.write(self.format())

    @classmethod
    def parse(cls, text):
        """Parse the text written by :py:meth:`format`."""
        names, pairs, unexplained = {}, [], []
        for lineno, line in enumerate(text.splitlines(), 1):
            tokens = line.split()
            if not tokens:
                continue
            if tokens[0] == 'name' and len(tokens) == 3 and tokens[1] in NAMES:
                names[tokens[1]] = parse_graph6(tokens[2])
            elif (tokens[0] == 'pair' and len(tokens) == 4
                  and tokens[3] in ('omegaDiffers=0', 'omegaDiffers=1')):
                pairs.append((parse_graph6(tokens[1]), parse_graph6(tokens[2]),
                              tokens[3].endswith('1')))
            elif (tokens[0] == 'pair' and len(tokens) == 5
                  and tokens[3:] == ['omegaDiffers=1', 'unexplained']):
                unexplained.append((parse_graph6(tokens[1]),
                                    parse_graph6(tokens[2])))
            else:
                raise ValueError("line %d: malformed table record %r"
                                 % (lineno, line))
        return cls(names, pairs, unexplained)

    @classmethod
    def load(cls, path):
        """Read a table file written by :py:meth:`save`."""
        with open(path) as f:
            return cls.parse(f.read())

    def __repr__(self):
        return "ExceptionalTable(%s)" % ', '.join(
            "%s=%s" % (name, format_graph6(self.names[name]))
            for name in NAMES if name in self.names)


def _unique(name, candidates):
    candidates = list(candidates)
    if len(candidates) != 1:
        raise ExceptionalTableError(name, candidates)
    LOGGER.info("resolved %s = %s", name, format_graph6(candidates[0]))
    return candidates[0]


def _q_class(catalog, graph):
    """Catalog graphs sharing the abstract Q-poset of graph."""
    index = catalog.abstract_index(KIND_Q)
    return index.get(catalog.abstract_certificate(catalog.find(graph), KIND_Q),
                     [])


def _partners(catalog, graph):
    cert = certificate(graph)
    return [g for g in _q_class(catalog, graph) if certificate(g) != cert]


def _omega_differs(catalog, a, b):
    return (catalog.abstract_certificate(a, KIND_OMEGA) !=
            catalog.abstract_certificate(b, KIND_OMEGA))


def resolve_exceptional_table(catalog):
    """Resolve every named exceptional graph from its role.

    T4 is the Q-collision partner of P4+K2; S4 the connected 4-edge graph H
    with q(P4, H) = 2, q(K_{1,2}+K2, H) = 0 and q(K3, H) = 1; B1 the
    Q-collision partner of C4+K2. The remaining F2 graphs are the members of
    Q-collision classes with differing bond lattices, once F0, F4 and the
    known F2 graphs are removed: P6 with its partner B4, and the one
    equal-vertex-count pair B2, B3 (ordered by certificate). Any other class
    left over is kept, pairwise, in the unexplained list of the table and
    logged. S5 and T5 are the connected one-edge extensions of K_{1,4} other
    than K_{1,5}, S5 being the one with a triangle.

    Parameters
    ----------
    catalog : Catalog
        Bound at least 6.

    Returns
    -------
    table : ExceptionalTable

    Raises
    ------
    CatalogBoundError
        If the catalog bound is below 6.

    ExceptionalTableError
        If a role is filled by zero or several graphs.
    """
    if catalog.max_edges < MIN_BOUND:
        raise CatalogBoundError("resolving the exceptional table needs a "
                                "catalog bound of at least %d, got %d"
                                % (MIN_BOUND, catalog.max_edges))
    names = {}
    names['T4'] = _unique('T4', _partners(catalog, P4_K2))

    names['S4'] = _unique('S4', [
        h for h in catalog.level(4)
        if h.is_connected()
        and count_edge_subgraphs(P4, h) == 2
        and count_edge_subgraphs(K12_K2, h) == 0
        and count_edge_subgraphs(K3, h) == 1])

    names['K4-e'] = _unique('K4-e', [catalog.find(K4_MINUS_E)]
                            if catalog.find(K4_MINUS_E) is not None else [])
    names['B1'] = _unique('B1', _partners(catalog, C4_K2))

    partial = ExceptionalTable(names)
    known = {certificate(g) for g in
             F0_GRAPHS + (C4, TWO_K12, C4_K2, names['B1'])}
    classes = []
    for members in catalog.abstract_index(KIND_Q).values():
        if len(members) < 2 or max(g.e for g in members) > MIN_BOUND:
            continue
        omegas = {catalog.abstract_certificate(g, KIND_OMEGA) for g in members}
        if len(omegas) < 2:
            continue
        left = sorted((g for g in members
                       if certificate(g) not in known
                       and not in_f4(g, partial)), key=certificate)
        if len(left) > 1:
            classes.append(left)
    classes.sort(key=lambda members: certificate(members[0]))

    p6 = certificate(P6)
    with_p6 = [members for members in classes
               if p6 in map(certificate, members)]
    names['B4'] = _unique('B4', [g for members in with_p6 for g in members
                                 if certificate(g) != p6])
    rest = [members for members in classes if members not in with_p6]
    equal_n = [members for members in rest
               if len(members) == 2 and members[0].n == members[1].n]
    if len(equal_n) != 1:
        raise ExceptionalTableError(
            'B2/B3', [g for members in equal_n for g in members],
            "expected one equal-vertex-count pair")
    names['B2'], names['B3'] = equal_n[0]
    unexplained = [(members[0], g) for members in rest
                   if members is not equal_n[0] for g in members[1:]]
    for a, b in unexplained:
        LOGGER.warning("abstract Q-poset shared by %s and %s with different "
                       "bond lattices, outside every exceptional family",
                       format_graph6(a), format_graph6(b))

    extensions = [g for g in one_edge_extensions(Graph.star(4)).values()
                  if g.is_connected() and star_size(g) is None]
    with_triangle = [g for g in extensions
                     if count_edge_subgraphs(K3, g) > 0]
    names['S5'] = _unique('S5', with_triangle)
    names['T5'] = _unique('T5', [g for g in extensions
                                 if count_edge_subgraphs(K3, g) == 0])

    pairs = []
    for a, b in ((P4, K12_K2), (P4_K2, names['T4']), (C4, TWO_K12),
                 (C4_K2, names['B1']), (P6, names['B4']),
                 (names['B2'], names['B3'])):
        if catalog.abstract_certificate(catalog.find(a), KIND_Q) != \
                catalog.abstract_certificate(catalog.find(b), KIND_Q):
            raise ExceptionalTableError(
                'pair', [a, b], "pair does not share the abstract Q-poset")
        pairs.append((catalog.find(a), catalog.find(b),
                      _omega_differs(catalog, catalog.find(a),
                                     catalog.find(b))))
    for name in NAMES:
        if catalog.find(names[name]) is None:
            raise ExceptionalTableError(name, [names[name]],
                                        "not a catalog member")
    return ExceptionalTable(names, pairs, unexplained)
