import os
import shutil
import tempfile
import unittest

from posetforge.base.errors import CatalogBoundError
from posetforge.base.graph import Graph
from posetforge.base.poset import KIND_OMEGA, KIND_Q
from posetforge.counting.subgraphs import count_edge_subgraphs
from posetforge.families.exceptional import (NAMES, ExceptionalTable,
                                             resolve_exceptional_table)
from posetforge.families.membership import P6
from posetforge.graphs.canonical import certificate
from posetforge.graphs.catalog import enumerate_catalog

K3 = Graph.complete(3)
CHAIR = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
PAW = K3.add_edge(2, 3)
K23 = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


class ExceptionalTableTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.catalog = enumerate_catalog(6)
        cls.table = resolve_exceptional_table(cls.catalog)

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_resolved(self):
        self.assertTrue(self.table.is_resolved())
        self.assertEqual(set(self.table.names), set(NAMES))

    def test_named_graphs(self):
        self.assertEqual(self.table.cert('T4'), certificate(CHAIR))
        self.assertEqual(self.table.cert('S4'), certificate(PAW))
        self.assertEqual(self.table.cert('K4-e'),
                         certificate(Graph.complete(4).remove_edge(0, 1)))
        s5, t5 = self.table.names['S5'], self.table.names['T5']
        self.assertEqual((s5.e, t5.e), (5, 5))
        self.assertGreater(count_edge_subgraphs(K3, s5), 0)
        self.assertEqual(count_edge_subgraphs(K3, t5), 0)
        self.assertEqual(self.table.names['B1'].e, 5)
        b2, b3 = self.table.names['B2'], self.table.names['B3']
        self.assertEqual(b2.n, b3.n)
        self.assertLess(certificate(b2), certificate(b3))

    def test_pairs(self):
        self.assertEqual(len(self.table.pairs), 6)
        self.assertEqual(len(self.table.f2_pairs()), 4)
        self.assertEqual(len(self.table.shared_lattice_pairs()), 2)
        for a, b, differs in self.table.pairs:
            self.assertEqual(self.catalog.abstract_certificate(a, KIND_Q),
                             self.catalog.abstract_certificate(b, KIND_Q))
            self.assertEqual(
                self.catalog.abstract_certificate(a, KIND_OMEGA) !=
                self.catalog.abstract_certificate(b, KIND_OMEGA), differs)

    def test_unexplained_pair(self):
        self.assertEqual(len(self.table.unexplained), 1)
        self.assertEqual(self.table.unexplained_certificates(),
                         {certificate(K23), certificate(Graph.cycle(6))})
        a, b = self.table.unexplained[0]
        self.assertEqual(self.catalog.abstract_certificate(a, KIND_Q),
                         self.catalog.abstract_certificate(b, KIND_Q))
        self.assertNotEqual(self.catalog.abstract_certificate(a, KIND_OMEGA),
                            self.catalog.abstract_certificate(b, KIND_OMEGA))
        named = {certificate(g) for g in self.table.names.values()}
        self.assertFalse(named & self.table.unexplained_certificates())

    def test_p6_partner(self):
        p6, b4 = self.catalog.find(P6), self.table.names['B4']
        self.assertNotEqual(certificate(b4), certificate(P6))
        self.assertEqual(self.catalog.abstract_certificate(p6, KIND_Q),
                         self.catalog.abstract_certificate(b4, KIND_Q))
        self.assertNotEqual(self.catalog.abstract_certificate(p6, KIND_OMEGA),
                            self.catalog.abstract_certificate(b4, KIND_OMEGA))

    def test_save_load(self):
        path = os.path.join(self.tmpdir, 'table.txt')
        self.table.save(path)
        loaded = ExceptionalTable.load(path)
        self.assertEqual(loaded.format(), self.table.format())
        for name in NAMES:
            self.assertEqual(loaded.cert(name), self.table.cert(name))
        self.assertEqual(loaded.unexplained_certificates(),
                         self.table.unexplained_certificates())

    def test_parse_errors(self):
        with self.assertRaises(ValueError):
            ExceptionalTable.parse("name X4 A_\n")
        with self.assertRaises(ValueError):
            ExceptionalTable.parse("pair A_ A_ omegaDiffers=2\n")
        with self.assertRaises(ValueError):
            ExceptionalTable.parse("pair A_ A_ omegaDiffers=0 unexplained\n")

    def test_parse_unexplained(self):
        table = ExceptionalTable.parse(
            "pair DFw EqGW omegaDiffers=1 unexplained\n")
        self.assertEqual(table.pairs, [])
        self.assertEqual(table.unexplained_certificates(),
                         {certificate(K23), certificate(Graph.cycle(6))})
        self.assertIn("unexplained", table.format())

    def test_bound_too_small(self):
        with self.assertRaises(CatalogBoundError):
            resolve_exceptional_table(enumerate_catalog(5))


if __name__ == '__main__':
    unittest.main()
