import os
import shutil
import tempfile
import unittest

from posetforge.base.errors import PosetFileError
from posetforge.base.graph import Graph
from posetforge.base.poset import KIND_OMEGA, KIND_Q
from posetforge.posets.builders import build_Omega, build_P, build_Q
from posetforge.posets.io import (format_poset, parse_poset, read_poset,
                                  write_poset)
from posetforge.utils import random_permutation, seed_random_state

K3 = Graph.complete(3)

TRIANGLE_Q = """poset Q 3
elem 0 rank=1
elem 1 rank=2
elem 2 rank=3
w 0 1 2
w 0 2 3
w 1 2 3
"""


class PosetFileTestCase(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.random_state = seed_random_state(1126)

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_abstract_triangle(self):
        self.assertEqual(format_poset(build_Q(K3), abstract=True), TRIANGLE_Q)

    def test_concrete_fields(self):
        text = format_poset(build_Q(K3))
        self.assertIn("elem 0 rank=1 graph=A_ v=2 k=1", text)
        self.assertIn("elem 2 rank=3 graph=Bw v=3 k=1", text)

    def test_parse_concrete(self):
        q = build_Q(K3.add_edge(2, 3))
        parsed, vk = parse_poset(format_poset(q))
        self.assertTrue(parsed.is_concrete)
        self.assertEqual(parsed.cert, q.cert)
        self.assertEqual(sorted(parsed.labels), sorted(q.labels))
        self.assertEqual(len(vk), len(q))

    def test_parse_abstract_with_vk(self):
        q = build_Q(K3)
        text = format_poset(q.abstract(), vk={0: (2, 1)})
        self.assertIn("elem 0 rank=1 v=2 k=1", text)
        parsed, vk = parse_poset(text)
        self.assertFalse(parsed.is_concrete)
        self.assertEqual(vk, {0: (2, 1)})

    def test_isomorphic_posets_serialize_identically(self):
        for g in (Graph.cycle(4), Graph.star(3).disjoint_union(Graph.path(2)),
                  K3.add_edge(2, 3)):
            for build in (build_Q, build_P, build_Omega):
                p = build(g)
                shuffled = p.permute(
                    random_permutation(len(p), self.random_state))
                self.assertEqual(format_poset(shuffled, abstract=True),
                                 format_poset(p, abstract=True))

    def test_write_read(self):
        path = os.path.join(self.tmpdir, 'omega.poset')
        omega = build_Omega(Graph.cycle(4))
        write_poset(omega, path)
        loaded = read_poset(path)
        self.assertEqual(loaded.kind, KIND_OMEGA)
        self.assertEqual(loaded.cert, omega.cert)

    def test_errors(self):
        cases = [
            ("", 1),
            ("poset R 1\n", 1),
            ("poset Q 2\nelem 0 rank=1\n", 2),
            ("poset Q 1\nelem 0 rank=x\n", 2),
            ("poset Q 2\nelem 0 rank=1\nelem 1 rank=2\nw 0 1\n", 4),
            ("poset Q 2\nelem 0 rank=1\nelem 0 rank=2\n", 3),
            ("poset Q 1\nelem 0 rank=1 colour=red\n", 2),
            ("poset Q 1\nelem 0 rank=1\nfoo\n", 3),
            ("poset Q 2\nelem 0 rank=1 graph=A_\nelem 1 rank=2\n"
             "w 0 1 2\n", 4),
        ]
        for text, line in cases:
            with self.assertRaises(PosetFileError) as cm:
                parse_poset(text)
            self.assertEqual(cm.exception.line, line, text)

    def test_invalid_order(self):
        text = "poset Q 2\nelem 0 rank=1\nelem 1 rank=1\n"
        with self.assertRaises(PosetFileError):
            parse_poset(text)
        self.assertEqual(parse_poset(TRIANGLE_Q)[0].kind, KIND_Q)


if __name__ == '__main__':
    unittest.main()
