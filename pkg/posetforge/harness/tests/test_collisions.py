import unittest

from posetforge.base.graph import Graph
from posetforge.graphs.canonical import certificate
from posetforge.graphs.catalog import enumerate_catalog
from posetforge.harness.collisions import collision_classes

K2 = Graph.complete(2)
K3 = Graph.complete(3)
K13 = Graph.star(3)


def certs(classes):
    return set(frozenset(certificate(g) for g in members)
               for members in classes)


class CollisionClassesTestCase(unittest.TestCase):

    def setUp(self):
        self.catalog = enumerate_catalog(4)

    def test_q_with_different_omega(self):
        found = collision_classes(self.catalog, 'q', require_different='omega')
        expected = [[K3, K13, Graph.matching(3)],
                    [Graph.cycle(4), Graph.path(3).copies(2)],
                    [K3.disjoint_union(K2), K13.disjoint_union(K2)]]
        self.assertEqual(certs(found), certs(expected))

    def test_q_classes(self):
        found = collision_classes(self.catalog, 'q')
        self.assertIn(frozenset([certificate(Graph.path(4)),
                                 certificate(Graph.path(3).disjoint_union(K2))]),
                      certs(found))
        self.assertGreater(len(found), 3)
        position = {certificate(g): i
                    for i, g in enumerate(self.catalog.graphs())}
        firsts = [position[certificate(members[0])] for members in found]
        self.assertEqual(firsts, sorted(firsts))
        for members in found:
            self.assertGreaterEqual(len(members), 2)
            order = [position[certificate(g)] for g in members]
            self.assertEqual(order, sorted(order))

    def test_other_kinds(self):
        self.assertEqual(collision_classes(enumerate_catalog(1), 'q'), [])
        found = certs(collision_classes(self.catalog, 'omega'))
        self.assertTrue(any(
            certificate(K13) in members and
            certificate(Graph.matching(3)) in members for members in found))


if __name__ == '__main__':
    unittest.main()
