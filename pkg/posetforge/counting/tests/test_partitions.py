import unittest

from posetforge.base.graph import Graph
from posetforge.counting.partitions import (PartialConnectedPartition,
                                            block_families, connected_sets,
                                            count_omega, count_omega_spanning,
                                            enumerate_connected_partitions,
                                            enumerate_connected_partitions_rgs,
                                            omega_classes, omega_profile,
                                            partition_image)
from posetforge.graphs.canonical import certificate

K2 = Graph.complete(2)
K3 = Graph.complete(3)
P3 = Graph.path(3)
PAW = K3.add_edge(2, 3)


def omega_oracle(h, g):
    """Count (pi, U) pairs with image isomorphic to h by full enumeration."""
    target = certificate(h)
    return sum(1 for pi in enumerate_connected_partitions(g, spanning=False)
               if certificate(partition_image(g, pi)) == target)


class ConnectedPartitionTestCase(unittest.TestCase):

    def setUp(self):
        self.graphs = [K3, P3, PAW, Graph.cycle(4), Graph.star(3),
                       Graph.matching(2), Graph.complete(4)]

    def test_triangle_counts(self):
        self.assertEqual(
            len(list(enumerate_connected_partitions(K3, spanning=True))), 5)
        self.assertEqual(
            len(list(enumerate_connected_partitions(K3, spanning=False))), 15)

    def test_path_spanning(self):
        partitions = list(enumerate_connected_partitions(P3, spanning=True))
        self.assertEqual(len(partitions), 4)
        self.assertNotIn(PartialConnectedPartition([[0, 2], [1]]), partitions)

    def test_against_restricted_growth_strings(self):
        for g in self.graphs:
            for spanning in (True, False):
                fast = list(enumerate_connected_partitions(g, spanning))
                slow = set(enumerate_connected_partitions_rgs(g, spanning))
                self.assertEqual(len(fast), len(set(fast)))
                self.assertEqual(set(fast), slow)

    def test_connected_sets(self):
        found = list(connected_sets(P3, 0, {1, 2}))
        self.assertEqual(sorted(sorted(b) for b in found),
                         [[0], [0, 1], [0, 1, 2]])

    def test_block_families(self):
        families = list(block_families(K3))
        # empty family, three edges, the whole triangle
        self.assertEqual(len(families), 5)
        self.assertTrue(all(len(b) >= 2 for f in families for b in f))

    def test_image(self):
        pi = PartialConnectedPartition([[0, 1], [2, 3]])
        self.assertEqual(partition_image(PAW, pi), Graph.matching(2))
        self.assertTrue(pi.is_connected_in(PAW))
        self.assertFalse(PartialConnectedPartition([[0, 3]]).is_connected_in(PAW))


class OmegaTestCase(unittest.TestCase):

    def test_quoted(self):
        self.assertEqual(count_omega(K2, K3), 3)
        self.assertEqual(count_omega(P3, K3), 0)
        self.assertEqual(count_omega(P3, PAW), 2)
        self.assertEqual(count_omega(K3, K3), 1)

    def test_isolated_vertices(self):
        self.assertEqual(count_omega(K2.add_isolated(1), K3), 3)
        self.assertEqual(count_omega(Graph(3), K3), 1)
        self.assertEqual(count_omega(Graph(1), K3), 3)
        self.assertEqual(count_omega(K2.add_isolated(2), K3), 0)

    def test_against_enumeration(self):
        hosts = [K3, PAW, Graph.cycle(4), Graph.matching(2).disjoint_union(P3)]
        patterns = [K2, P3, K3, Graph.matching(2), K2.add_isolated(1),
                    K2.add_isolated(2), Graph(2), P3.add_isolated(1)]
        for g in hosts:
            for h in patterns:
                self.assertEqual(count_omega(h, g), omega_oracle(h, g), (h, g))

    def test_spanning(self):
        self.assertEqual(count_omega_spanning(K2.add_isolated(1), K3), 3)
        self.assertEqual(count_omega_spanning(K2, K3), 0)
        for g in (PAW, Graph.cycle(4), Graph.star(3)):
            for h in omega_classes(g).values():
                spanning = h.add_isolated(g.n - h.n)
                self.assertEqual(count_omega_spanning(spanning, g),
                                 count_omega(spanning, g))

    def test_profile(self):
        profile = omega_profile(K3)
        self.assertEqual(profile[certificate(Graph.null())], 1)
        self.assertEqual(profile[certificate(K2)], 3)
        self.assertEqual(profile[certificate(K3)], 1)
        self.assertEqual(sum(profile.values()), 5)


if __name__ == '__main__':
    unittest.main()
