"""Verification suites

Each suite sweeps a catalog and records one check per claim instance in a
:py:class:`VerifyReport`. Checks over catalog graphs fan out with
:py:func:`posetforge.utils.parallel_map`; results are merged in catalog
order, so a report does not depend on the worker count.
"""
import logging

from posetforge.base.errors import (CatalogBoundError, ExceptionalTableError,
                                    PosetForgeError)
from posetforge.base.graph import Graph
from posetforge.base.interfaces import VerifySuite
from posetforge.base.poset import KIND_OMEGA, KIND_P, KIND_Q
from posetforge.counting.partitions import count_omega, count_omega_spanning
from posetforge.counting.subgraphs import (count_edge_subgraphs,
                                           count_induced_subgraphs,
                                           edge_subgraph_classes,
                                           edge_subgraph_profile)
from posetforge.families.exceptional import (MIN_BOUND,
                                             resolve_exceptional_table)
from posetforge.families.membership import (K12_K2, K13, K3, K4, P4, classify)
from posetforge.graphs.canonical import certificate
from posetforge.graphs.catalog import enumerate_catalog
from posetforge.graphs.formats import format_graph6
from posetforge.harness.report import VerifyReport
from posetforge.posets.certificates import legitimate_labelings
from posetforge.reconstruct.annotate import (Annotation, annotate_vk,
                                             distinguished_elements,
                                             q_reconstructions)
from posetforge.reconstruct.components import (component_counts_from_q,
                                               direct_component_counts,
                                               is_component_count_eligible,
                                               q_counts_from_poset)
from posetforge.reconstruct.inversion import OmegaInverter
from posetforge.reconstruct.reconstruction import (reconstruct_omega,
                                                   reconstruct_p)
from posetforge.utils import inherit_docstring_from, parallel_map

LOGGER = logging.getLogger(__name__)

#: Number of graphs without isolated vertices with exactly m edges, m = 1..7.
CATALOG_LEVEL_COUNTS = (1, 2, 5, 11, 26, 68, 177)


def exceptional_table(catalog):
    """Resolve the exceptional table, from a bound-6 catalog if needed."""
    if catalog.max_edges >= MIN_BOUND:
        return resolve_exceptional_table(catalog)
    LOGGER.info("catalog bound %d is below %d, resolving the exceptional "
                "table on a separate catalog", catalog.max_edges, MIN_BOUND)
    return resolve_exceptional_table(
        enumerate_catalog(MIN_BOUND, cache=catalog.cache))


def resolved_table(catalog, report):
    """Resolve the exceptional table, recording a failed resolution.

    Returns
    -------
    table : ExceptionalTable or None
        None when resolution failed; report then holds a failing
        table-resolution check naming the candidates.
    """
    try:
        return exceptional_table(catalog)
    except ExceptionalTableError as e:
        report.check('table-resolution', False,
                     "%s: %s" % (e, ','.join(
                         map(format_graph6, e.candidates)) or e.name))
        return None


def _same(catalog, a, b, kind):
    return (catalog.abstract_certificate(a, kind) ==
            catalog.abstract_certificate(b, kind))


class InversionSuite(VerifySuite):

    """The inversion between q-weights and bond lattice weights.

    Claims
    ------
    inversion-identity
        q(g_i, g_k) equals the sum of q(g_i, g_j) omega(g_j, g_k) over the
        elements g_j of Q(g_k) with the vertex and component counts of g_i.
    inversion-concrete
        The inversion driven by the true (v, k) pairs reproduces omega.
    inversion-abstract
        On the abstract Q-poset with the catalog annotation, every value the
        inversion can decide equals omega under every legitimate labelling.
    omega-spanning
        Bond lattice weights to the top match the enumeration of spanning
        connected partitions.
    """

    name = 'inversion'

    def _checks(self, catalog, g):
        checks = []
        q_poset = catalog.poset(g, KIND_Q)
        top = q_poset.top
        graphs = q_poset.graphs
        omega = [count_omega(h, g) for h in graphs]

        bad = []
        for i, h in enumerate(graphs):
            total = sum(int(q_poset.weight(i, j)) * omega[j]
                        for j, other in enumerate(graphs)
                        if (other.n, other.k) == (h.n, h.k))
            if total != q_poset.weight(i, top):
                bad.append(h)
        checks.append(('inversion-identity', not bad, [g] + bad))

        annotation = Annotation([{(h.n, h.k)} for h in graphs],
                                {tuple((h.n, h.k) for h in graphs): [g]})
        inverter = OmegaInverter(q_poset, annotation)
        bad = [h for i, h in enumerate(graphs)
               if inverter.omega(i, top) != omega[i]]
        checks.append(('inversion-concrete', not bad, [g] + bad))

        abstract_q = q_poset.abstract()
        annotation = annotate_vk(abstract_q, catalog)
        inverter = OmegaInverter(abstract_q, annotation)
        abstract_top = abstract_q.top
        decided = {}
        for x in abstract_q.elements:
            try:
                decided[x] = inverter.omega(x, abstract_top)
            except PosetForgeError:
                continue
        bad = []
        for h in q_reconstructions(abstract_q, catalog):
            target = catalog.poset(h, KIND_Q)
            for labeling in legitimate_labelings(abstract_q, h, target):
                bad.extend(labeling[x] for x, value in decided.items()
                           if count_omega(labeling[x], h) != value)
        checks.append(('inversion-abstract', not bad, [g] + bad[:1]))

        lattice = catalog.poset(g, KIND_OMEGA)
        top = lattice.top
        bad = [h for x, h in enumerate(lattice.graphs)
               if lattice.weight(x, top) != count_omega_spanning(h, g)]
        checks.append(('omega-spanning', not bad, [g] + bad))
        return checks

    @inherit_docstring_from(VerifySuite)
    def run(self, catalog, report):
        results = parallel_map(lambda g: self._checks(catalog, g),
                               catalog.graphs(), n_jobs=self.n_jobs)
        for checks in results:
            report.extend(checks)
        return report


class MainTheoremSuite(VerifySuite):

    """Round trips through the abstract Q-poset, and their exceptions.

    Claims
    ------
    omega-roundtrip
        The bond lattice is reconstructed, and correctly, iff G is not in M.
    p-roundtrip
        The induced subgraph poset is reconstructed, and correctly, iff G is
        not in N.
    q-collision
        G shares its abstract Q-poset with another catalog graph iff G is
        in N.
    collision-counterexample
        Fails once per catalog pair that shares the abstract Q-poset, differs
        in the bond lattice and lies outside every exceptional family. Both
        graphs are then expected to be ambiguous in the round trips.
    """

    name = 'main-theorem'

    def _checks(self, catalog, table, collided, g):
        tag = classify(g, table)
        flagged = certificate(g) in table.unexplained_certificates()
        in_m, in_n = tag.in_m or flagged, tag.in_n or flagged
        abstract_q = catalog.poset(g, KIND_Q).abstract()
        checks = []
        try:
            outcome = reconstruct_omega(abstract_q, catalog)
            if in_m:
                passed = not outcome.succeeded
            else:
                passed = (outcome.succeeded and outcome.poset.cert ==
                          catalog.abstract_certificate(g, KIND_OMEGA))
        except PosetForgeError as e:
            LOGGER.warning("bond lattice reconstruction of %r failed: %s", g, e)
            passed = False
        checks.append(('omega-roundtrip', passed, g))

        try:
            outcome = reconstruct_p(abstract_q, catalog)
            if in_n:
                passed = not outcome.succeeded
            else:
                passed = (outcome.succeeded and outcome.poset.cert ==
                          catalog.abstract_certificate(g, KIND_P))
        except PosetForgeError as e:
            LOGGER.warning("induced poset reconstruction of %r failed: %s",
                           g, e)
            passed = False
        checks.append(('p-roundtrip', passed, g))

        checks.append(('q-collision', (certificate(g) in collided) == in_n, g))
        return checks

    @inherit_docstring_from(VerifySuite)
    def run(self, catalog, report):
        table = resolved_table(catalog, report)
        if table is None:
            return report
        for a, b in table.unexplained:
            if a in catalog and b in catalog:
                report.check('collision-counterexample', False, [a, b])
        collided = set()
        for members in catalog.abstract_index(KIND_Q).values():
            if len(members) > 1:
                collided.update(certificate(g) for g in members)
        results = parallel_map(
            lambda g: self._checks(catalog, table, collided, g),
            catalog.graphs(), n_jobs=self.n_jobs)
        for checks in results:
            report.extend(checks)
        return report


class FamiliesSuite(VerifySuite):

    """The exceptional families and their witnesses.

    Needs a catalog bound of at least 6.

    Claims
    ------
    table-resolution
        Every named exceptional graph resolves uniquely.
    f0
        K3, K_{1,3} and 3K2 share the abstract Q-poset; K_{1,3} and 3K2 share
        the bond lattice, K3 does not.
    shared-lattice
        F1 and F3 pairs share both the abstract Q-poset and the bond lattice.
    f2-pair
        F2 pairs share the abstract Q-poset and differ in the bond lattice.
    f2-induced
        F2 pairs with equal vertex counts differ in the induced subgraph
        poset.
    f4-height
        2K3 / 2K_{1,3} and K3+K2 / K_{1,3}+K2 share the abstract Q-poset and
        have bond lattices of different heights.
    """

    name = 'families'

    @inherit_docstring_from(VerifySuite)
    def run(self, catalog, report):
        if catalog.max_edges < MIN_BOUND:
            raise CatalogBoundError("the families suite needs a catalog bound "
                                    "of at least %d" % MIN_BOUND)
        table = resolved_table(catalog, report)
        if table is None:
            return report
        report.check('table-resolution', True, table.format().strip()
                     .replace('\n', '; '))

        k3, k13, three_k2 = K3, K13, Graph.matching(3)
        report.check('f0', _same(catalog, k3, k13, KIND_Q) and
                     _same(catalog, k3, three_k2, KIND_Q) and
                     _same(catalog, k13, three_k2, KIND_OMEGA) and
                     not _same(catalog, k3, k13, KIND_OMEGA),
                     [k3, k13, three_k2])

        shared = list(table.shared_lattice_pairs())
        shared += [(Graph.star(m), Graph.matching(m)) for m in (2, 4, 5, 6)
                   if m <= catalog.max_edges]
        for a, b in shared:
            report.check('shared-lattice', _same(catalog, a, b, KIND_Q) and
                         _same(catalog, a, b, KIND_OMEGA), [a, b])

        for a, b in table.f2_pairs():
            report.check('f2-pair', _same(catalog, a, b, KIND_Q) and
                         not _same(catalog, a, b, KIND_OMEGA), [a, b])
            if a.n == b.n:
                report.check('f2-induced', not _same(catalog, a, b, KIND_P),
                             [a, b])

        k2 = Graph.complete(2)
        for a, b in ((K3.copies(2), K13.copies(2)),
                     (K3.disjoint_union(k2), K13.disjoint_union(k2))):
            ha = catalog.poset(a, KIND_OMEGA)
            hb = catalog.poset(b, KIND_OMEGA)
            report.check('f4-height', _same(catalog, a, b, KIND_Q) and
                         ha.ranks[ha.top] != hb.ranks[hb.top], [a, b])
        return report


class IdentitiesSuite(VerifySuite):

    """Count identities and structural facts.

    Claims
    ------
    catalog-counts
        Catalog level sizes 1, 2, 5, 11, 26, 68, 177.
    quoted-count
        Individual q, p and omega values of small named graphs.
    star-triangle
        q(K_{1,3}, H) = q(K3, H) for H in S4, K4-e, K4.
    component-counts
        Component counts solved from q-counts equal the direct counts, for
        every catalog graph of maximum degree 3 without a chair.
    distinguished
        Every element of the abstract Q(K_{1,2} + 2K2) is distinguished.
    transitivity
        Edge-subgraphs of edge-subgraphs of G are edge-subgraphs of G.
    """

    name = 'identities'

    def _checks(self, catalog, g):
        checks = []
        if is_component_count_eligible(g):
            q = q_counts_from_poset(catalog.poset(g, KIND_Q))
            checks.append(('component-counts',
                           component_counts_from_q(g, q) ==
                           direct_component_counts(g), g))
        profile = edge_subgraph_profile(g)
        bad = [h for h in edge_subgraph_classes(g).values()
               if not set(edge_subgraph_profile(h)) <= set(profile)]
        checks.append(('transitivity', not bad, [g] + bad))
        return checks

    @inherit_docstring_from(VerifySuite)
    def run(self, catalog, report):
        counts = catalog.counts_by_level()
        expected = list(CATALOG_LEVEL_COUNTS[:len(counts)])
        report.check('catalog-counts', counts == expected,
                     "counts=%s expected=%s" % (counts, expected))

        table = resolved_table(catalog, report)
        if table is None:
            return report
        s4, t4 = table.names['S4'], table.names['T4']
        k4_minus_e = table.names['K4-e']
        p3 = Graph.path(3)
        quoted = [
            ('q', P4, s4, 2), ('q', K12_K2, t4, 1), ('q', P4, t4, 2),
            ('q', K3, K4, 4), ('q', K3, k4_minus_e, 2),
            ('p', p3, P4, 2),
            ('omega', Graph.complete(2), K3, 3), ('omega', p3, K3, 0),
            ('omega', p3, s4, 2),
        ]
        counters = {'q': count_edge_subgraphs, 'p': count_induced_subgraphs,
                    'omega': count_omega}
        for weight, h, g, value in quoted:
            got = counters[weight](h, g)
            report.check('quoted-count', got == value,
                         "%s(%s,%s)=%d expected %d"
                         % (weight, format_graph6(h), format_graph6(g), got,
                            value))
        for host in (s4, k4_minus_e, K4):
            report.check('star-triangle', count_edge_subgraphs(K13, host) ==
                         count_edge_subgraphs(K3, host), host)

        witness = K12_K2.disjoint_union(Graph.complete(2))
        if witness.e <= catalog.max_edges:
            abstract_q = catalog.poset(witness, KIND_Q).abstract()
            images = distinguished_elements(abstract_q, catalog)
            report.check('distinguished', all(h is not None for h in images),
                         witness)

        results = parallel_map(lambda g: self._checks(catalog, g),
                               catalog.graphs(), n_jobs=self.n_jobs)
        for checks in results:
            report.extend(checks)
        return report


SUITES = {suite.name: suite for suite in
          (InversionSuite, MainTheoremSuite, FamiliesSuite, IdentitiesSuite)}


def run_suite(name, catalog, n_jobs=1):
    """Run the named suite and return its report.

    Raises
    ------
    ValueError
        If the suite name is unknown.
    """
    if name not in SUITES:
        raise ValueError("unknown suite %r, expected one of %s"
                         % (name, sorted(SUITES)))
    report = VerifyReport(name, catalog.max_edges)
    SUITES[name](n_jobs=n_jobs).run(catalog, report)
    LOGGER.info("%r", report)
    return report
