import unittest

import numpy as np
from numpy.testing import assert_array_equal

from posetforge.base.errors import PosetValidationError
from posetforge.base.poset import KIND_OMEGA, KIND_Q, WeightedPoset


def q_of_triangle():
    """Q(K3) on the elements K2, P3, K3."""
    weights = [[1, 2, 3],
               [0, 1, 3],
               [0, 0, 1]]
    return WeightedPoset(weights, [1, 2, 3], KIND_Q)


class WeightedPosetTestCase(unittest.TestCase):

    def test_basic(self):
        p = q_of_triangle()
        self.assertEqual(len(p), 3)
        self.assertEqual(p.bottom, 0)
        self.assertEqual(p.top, 2)
        self.assertEqual(p.weight(0, 1), 2)
        self.assertEqual(p.weight(1, 0), 0)
        self.assertTrue(p.leq(0, 2))
        self.assertEqual(p.downset(1), [0, 1])
        self.assertEqual(p.upset(1), [1, 2])
        self.assertFalse(p.is_concrete)

    def test_read_only(self):
        p = q_of_triangle()
        with self.assertRaises(ValueError):
            p.weights[0, 1] = 7

    def test_not_reflexive(self):
        with self.assertRaises(PosetValidationError):
            WeightedPoset([[0, 1], [0, 1]], [1, 2], KIND_Q)

    def test_not_antisymmetric(self):
        with self.assertRaises(PosetValidationError):
            WeightedPoset([[1, 1], [1, 1]], [1, 1], KIND_Q)

    def test_not_transitive(self):
        weights = [[1, 1, 0],
                   [0, 1, 1],
                   [0, 0, 1]]
        with self.assertRaises(PosetValidationError):
            WeightedPoset(weights, [1, 2, 3], KIND_Q)

    def test_negative(self):
        with self.assertRaises(PosetValidationError):
            WeightedPoset([[1, -1], [0, 1]], [1, 2], KIND_Q)

    def test_kind_checks(self):
        with self.assertRaises(PosetValidationError):
            WeightedPoset([[1, 0], [0, 1]], [1, 1], KIND_Q)
        with self.assertRaises(PosetValidationError):
            WeightedPoset([[1, 1], [0, 1]], [1, 2], KIND_OMEGA)
        with self.assertRaises(TypeError):
            WeightedPoset([[1]], [1], 'R')
        WeightedPoset([[1, 1], [0, 1]], [0, 1], KIND_OMEGA)

    def test_cert_invariant_under_permutation(self):
        p = q_of_triangle()
        for order in ([2, 0, 1], [1, 2, 0], [0, 2, 1]):
            self.assertEqual(p.permute(order).cert, p.cert)

    def test_cert_sees_weights(self):
        other = WeightedPoset([[1, 2, 3], [0, 1, 2], [0, 0, 1]], [1, 2, 3],
                              KIND_Q)
        self.assertNotEqual(other.cert, q_of_triangle().cert)
        omega = WeightedPoset([[1, 2, 3], [0, 1, 3], [0, 0, 1]], [0, 1, 2],
                              KIND_OMEGA)
        self.assertNotEqual(omega.cert, q_of_triangle().cert)

    def test_abstract(self):
        p = q_of_triangle().permute([2, 1, 0])
        a = p.abstract()
        self.assertEqual(a.cert, p.cert)
        self.assertIsNone(a.graphs)
        assert_array_equal(np.sort(a.ranks), [1, 2, 3])

    def test_restrict(self):
        p = q_of_triangle().restrict([0, 1])
        assert_array_equal(p.weights, [[1, 2], [0, 1]])
        self.assertEqual(p.top, 1)
        with self.assertRaises(ValueError):
            q_of_triangle().permute([0, 1])


if __name__ == '__main__':
    unittest.main()
