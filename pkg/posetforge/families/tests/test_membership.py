import unittest

from posetforge.base.errors import (DisconnectedGraphError,
                                    ExceptionalTableError, IsolatedVertexError)
from posetforge.base.graph import Graph
from posetforge.families.exceptional import (ExceptionalTable,
                                             resolve_exceptional_table)
from posetforge.families.membership import (FamilyTag, classify,
                                            f4_decomposition, in_f4,
                                            in_natural_x, in_X, is_cycle,
                                            is_path, matching_size, star_size)
from posetforge.graphs.catalog import enumerate_catalog

K2 = Graph.complete(2)
K3 = Graph.complete(3)
K4 = Graph.complete(4)
K13 = Graph.star(3)
P4 = Graph.path(4)
PAW = K3.add_edge(2, 3)


class ShapeTestCase(unittest.TestCase):

    def test_shapes(self):
        self.assertTrue(is_path(Graph.path(5)))
        self.assertTrue(is_path(Graph(1)))
        self.assertFalse(is_path(K13))
        self.assertTrue(is_cycle(K3))
        self.assertFalse(is_cycle(K3.copies(2)))
        self.assertEqual(star_size(Graph.star(5)), 5)
        self.assertEqual(star_size(K2), 1)
        self.assertIsNone(star_size(P4))
        self.assertEqual(matching_size(Graph.matching(4)), 4)
        self.assertIsNone(matching_size(Graph.path(3)))

    def test_in_X(self):
        for g in (K2, P4, Graph.cycle(4), Graph.cycle(7), PAW,
                  K4.remove_edge(0, 1), K4):
            self.assertTrue(in_X(g), g)
        for g in (K3, K13, Graph.star(4), Graph(1),
                  Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])):
            self.assertFalse(in_X(g), g)
        with self.assertRaises(DisconnectedGraphError):
            in_X(Graph.matching(2))

    def test_natural_x(self):
        self.assertTrue(in_natural_x(Graph.null()))
        self.assertTrue(in_natural_x(Graph.matching(2).disjoint_union(PAW)))
        self.assertFalse(in_natural_x(K3.disjoint_union(K2)))
        self.assertFalse(in_natural_x(K2.add_isolated(1)))

    def test_f4(self):
        g = K3.copies(2).disjoint_union(P4)
        r, s, rest = f4_decomposition(g)
        self.assertEqual((r, s), (2, 0))
        self.assertEqual(rest.e, 3)
        self.assertTrue(in_f4(g))
        self.assertTrue(in_f4(K3.disjoint_union(K2)))
        self.assertTrue(in_f4(K13.copies(2)))
        self.assertFalse(in_f4(K3))
        self.assertFalse(in_f4(K13))
        self.assertFalse(in_f4(K3.disjoint_union(K13)))
        self.assertFalse(in_f4(Graph.cycle(5)))
        self.assertIsNone(f4_decomposition(Graph.star(4).disjoint_union(K3)))

    def test_family_tag(self):
        tag = FamilyTag(['F1', 'F3'])
        self.assertTrue(tag.in_n)
        self.assertFalse(tag.in_m)
        self.assertTrue(FamilyTag(['F4']).in_m)
        self.assertFalse(FamilyTag().in_n)
        self.assertEqual(FamilyTag(['F0']), FamilyTag(('F0', )))
        with self.assertRaises(ValueError):
            FamilyTag(['F5'])


class ClassifyTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.table = resolve_exceptional_table(enumerate_catalog(6))

    def flags(self, g):
        return classify(g, self.table).flags

    def test_f0(self):
        for g in (K3, K13, Graph.matching(3)):
            self.assertEqual(self.flags(g), {'F0'})

    def test_f1(self):
        for g in (P4, Graph.star(2).disjoint_union(K2), P4.disjoint_union(K2),
                  self.table.names['T4']):
            self.assertEqual(self.flags(g), {'F1'})

    def test_f2(self):
        for name in ('B1', 'B2', 'B3', 'B4'):
            self.assertIn('F2', self.flags(self.table.names[name]))
        self.assertEqual(self.flags(Graph.cycle(4)), {'F2'})
        self.assertEqual(self.flags(Graph.path(6)), {'F2'})

    def test_f3(self):
        for m in (2, 4, 5):
            self.assertEqual(self.flags(Graph.star(m)), {'F3'})
            self.assertEqual(self.flags(Graph.matching(m)), {'F3'})
        self.assertEqual(self.flags(K2), set())

    def test_f4(self):
        self.assertEqual(self.flags(K3.disjoint_union(K2)), {'F4'})
        self.assertEqual(self.flags(K13.copies(2)), {'F4'})

    def test_outside(self):
        for g in (K4, PAW, Graph.cycle(5), K3.disjoint_union(K13)):
            tag = classify(g, self.table)
            self.assertFalse(tag.in_n, g)

    def test_errors(self):
        with self.assertRaises(IsolatedVertexError):
            classify(K3.add_isolated(1), self.table)
        with self.assertRaises(ExceptionalTableError):
            classify(K3, ExceptionalTable({}))
        with self.assertRaises(ExceptionalTableError):
            classify(K3, None)


if __name__ == '__main__':
    unittest.main()
