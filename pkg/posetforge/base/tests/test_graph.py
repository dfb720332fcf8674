import unittest

import numpy as np
from numpy.testing import assert_array_equal

from posetforge.base.graph import Graph


class GraphTestCase(unittest.TestCase):

    def setUp(self):
        self.paw = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])

    def test_invariants(self):
        self.assertEqual(self.paw.v, 4)
        self.assertEqual(self.paw.e, 4)
        self.assertEqual(self.paw.k, 1)
        self.assertEqual(self.paw.max_degree, 3)
        self.assertEqual(self.paw.min_degree, 1)
        self.assertEqual(self.paw.degree_sequence(), (3, 2, 2, 1))
        assert_array_equal(self.paw.degrees, [2, 2, 3, 1])

    def test_edges_normalized(self):
        g = Graph(3, [(1, 0), (0, 1), (2, 1)])
        self.assertEqual(g.sorted_edges(), [(0, 1), (1, 2)])
        self.assertEqual(g, Graph.path(3))

    def test_invalid_edges(self):
        with self.assertRaises(ValueError):
            Graph(2, [(0, 0)])
        with self.assertRaises(ValueError):
            Graph(2, [(0, 2)])
        with self.assertRaises(ValueError):
            Graph(-1)

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            self.paw.n = 5
        adjacency = self.paw.adjacency
        with self.assertRaises(ValueError):
            adjacency[0, 3] = 1

    def test_components(self):
        g = Graph.complete(3).disjoint_union(Graph.path(2)).add_isolated(1)
        self.assertEqual(g.components(), [(0, 1, 2), (3, 4), (5, )])
        self.assertEqual(g.k, 3)
        self.assertEqual(g.isolated_vertices(), [5])
        self.assertFalse(g.is_connected())
        self.assertEqual(Graph.null().k, 0)

    def test_strip_isolated(self):
        g = Graph(5, [(1, 3)])
        core = g.strip_isolated()
        self.assertEqual(core, Graph.complete(2))
        self.assertIs(self.paw.strip_isolated(), self.paw)

    def test_subgraphs(self):
        self.assertEqual(self.paw.induced_subgraph([0, 1, 2]),
                         Graph.complete(3))
        self.assertEqual(self.paw.subgraph_on_edges([(0, 1), (2, 3)]),
                         Graph.matching(2))

    def test_relabel(self):
        g = Graph.path(3).relabel([1, 0, 2])
        self.assertEqual(g.sorted_edges(), [(0, 1), (0, 2)])
        with self.assertRaises(ValueError):
            Graph.path(3).relabel([0, 0, 1])

    def test_edit(self):
        self.assertEqual(Graph.complete(3).remove_edge(0, 2), Graph.path(3))
        self.assertEqual(Graph.path(2).add_edge(1, 2), Graph.path(3))
        with self.assertRaises(ValueError):
            Graph.path(3).remove_edge(0, 2)

    def test_named(self):
        self.assertEqual(Graph.star(3).degree_sequence(), (3, 1, 1, 1))
        self.assertEqual(Graph.cycle(5).e, 5)
        self.assertEqual(Graph.complete(4).e, 6)
        self.assertEqual(Graph.matching(3).k, 3)
        self.assertEqual(Graph.star(2).copies(2).e, 4)
        self.assertEqual(Graph.empty(3).e, 0)
        with self.assertRaises(ValueError):
            Graph.cycle(2)

    def test_hash_and_pickle_state(self):
        import pickle
        g = pickle.loads(pickle.dumps(self.paw))
        self.assertEqual(g, self.paw)
        self.assertEqual(hash(g), hash(self.paw))
        self.assertEqual(len({g, self.paw}), 1)
        self.assertTrue(np.array_equal(g.adjacency, self.paw.adjacency))


if __name__ == '__main__':
    unittest.main()
