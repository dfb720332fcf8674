import collections
import itertools
import os
import shutil
import tempfile
import unittest

import networkx as nx

from posetforge.base.errors import CatalogBoundError
from posetforge.base.graph import Graph
from posetforge.base.poset import KIND_Q
from posetforge.graphs.canonical import certificate
from posetforge.graphs.catalog import (Catalog, check_bound, enumerate_catalog,
                                       one_edge_extensions)

SLOW = os.environ.get('POSETFORGE_SLOW_TESTS') == '1'


class CatalogTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.catalog = enumerate_catalog(5)

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_level_counts(self):
        self.assertEqual(self.catalog.counts_by_level(), [1, 2, 5, 11, 26])
        self.assertEqual(len(self.catalog), 45)

    def test_small_bounds(self):
        catalog = enumerate_catalog(1)
        self.assertEqual(catalog.graphs(), [Graph.complete(2)])
        self.assertEqual(enumerate_catalog(3).counts_by_level(), [1, 2, 5])

    def test_no_isolated_vertices_and_no_duplicates(self):
        certs = [cert for cert, _ in self.catalog]
        self.assertEqual(len(set(certs)), len(certs))
        for cert, g in self.catalog:
            self.assertEqual(g.isolated_vertices(), [])
            self.assertEqual(certificate(g), cert)

    def test_order(self):
        keys = [(g.e, cert) for cert, g in self.catalog]
        self.assertEqual(keys, sorted(keys))

    def test_find(self):
        paw = Graph(4, [(1, 2), (2, 3), (1, 3), (0, 3)])
        found = self.catalog.find(paw)
        self.assertEqual(certificate(found), certificate(paw))
        self.assertIsNotNone(self.catalog.find(Graph.path(3).add_isolated(2)))
        self.assertIsNone(self.catalog.find(Graph.complete(4)))
        self.assertIn(Graph.cycle(5), self.catalog)

    def test_level(self):
        level = self.catalog.level(2)
        self.assertEqual(sorted(g.n for g in level), [3, 4])

    def test_bounds(self):
        with self.assertRaises(CatalogBoundError):
            check_bound(0)
        with self.assertRaises(CatalogBoundError):
            check_bound(13, cap=12)
        with self.assertRaises(CatalogBoundError):
            enumerate_catalog(-1)
        with self.assertRaises(CatalogBoundError):
            self.catalog.require_bound(6)
        self.catalog.require_bound(5)

    def test_save_load(self):
        path = os.path.join(self.tmpdir, 'catalog.g6')
        self.catalog.save(path)
        loaded = Catalog.load(path)
        self.assertEqual(loaded.max_edges, 5)
        self.assertEqual(loaded.format(), self.catalog.format())
        with open(path) as f:
            self.assertEqual(f.read(), enumerate_catalog(5).format())

    def test_worker_count_does_not_matter(self):
        self.assertEqual(enumerate_catalog(4, n_jobs=2).format(),
                         enumerate_catalog(4).format())

    def test_one_edge_extensions(self):
        found = one_edge_extensions(Graph.path(3))
        self.assertEqual(sorted(g.n for g in found.values()), [3, 4, 4, 5])

    def test_abstract_index(self):
        index = self.catalog.abstract_index(KIND_Q)
        self.assertEqual(sum(len(v) for v in index.values()), 45)
        triangle = self.catalog.abstract_certificate(Graph.complete(3), KIND_Q)
        members = index[triangle]
        self.assertEqual(sorted(g.e for g in members), [3, 3, 3])


def brute_force_level(m):
    """Graphs with exactly m edges and no isolated vertex, up to isomorphism.

    Every edge set on 2m labelled vertices is tried; a graph is kept unless
    networkx finds it isomorphic to one kept before with the same degrees.
    """
    pairs = list(itertools.combinations(range(2 * m), 2))
    kept = collections.defaultdict(list)
    for edges in itertools.combinations(pairs, m):
        g = nx.Graph(edges)
        degrees = tuple(sorted(d for _, d in g.degree()))
        if not any(nx.is_isomorphic(g, h) for h in kept[degrees]):
            kept[degrees].append(g)
    found = []
    for graphs in kept.values():
        for g in graphs:
            index = {u: i for i, u in enumerate(sorted(g))}
            found.append(Graph(len(index), [(index[u], index[v])
                                            for u, v in g.edges()]))
    return found


class BruteForceLevelTestCase(unittest.TestCase):

    def test_levels(self):
        catalog = enumerate_catalog(4)
        for m, expected in ((3, 5), (4, 11)):
            found = brute_force_level(m)
            self.assertEqual(len(found), expected)
            self.assertEqual(catalog.counts_by_level()[m - 1], expected)
            self.assertEqual({certificate(g) for g in found},
                             {certificate(g) for g in catalog.level(m)})

    def test_level_six(self):
        self.assertEqual(enumerate_catalog(6).counts_by_level(),
                         [1, 2, 5, 11, 26, 68])

    @unittest.skipUnless(SLOW, "set POSETFORGE_SLOW_TESTS=1")
    def test_level_seven(self):
        self.assertEqual(enumerate_catalog(7).counts_by_level()[5:], [68, 177])


if __name__ == '__main__':
    unittest.main()
