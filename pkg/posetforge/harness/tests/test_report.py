import unittest

from posetforge.base.graph import Graph
from posetforge.harness.report import Check, VerifyReport, format_witness

K3 = Graph.complete(3)


class VerifyReportTestCase(unittest.TestCase):

    def setUp(self):
        self.report = VerifyReport('identities', 4)

    def test_counts(self):
        self.report.check('transitivity', True, K3)
        self.report.check('transitivity', False, [K3, Graph.path(3)])
        self.report.check('catalog-counts', True)
        self.assertEqual(self.report.n_passed, 2)
        self.assertEqual(self.report.n_failed, 1)
        self.assertFalse(self.report.ok)
        self.assertEqual(self.report.failures(),
                         [Check('transitivity', False, 'Bw,Bg')])
        self.assertEqual(list(self.report.summary().items()),
                         [('transitivity', (1, 1)), ('catalog-counts', (1, 0))])

    def test_witness_required(self):
        with self.assertRaises(ValueError):
            self.report.check('f0', False)
        self.assertEqual(len(self.report.checks), 0)

    def test_format(self):
        self.report.extend([('quoted-count', True, 'q(P4,S4)=2'),
                            ('quoted-count', False, K3)])
        self.assertEqual(self.report.format(), (
            "suite identities bound=4\n"
            "FAIL quoted-count witness=Bw\n"
            "claim quoted-count passed=1 failed=1\n"
            "total checks=2 passed=1 failed=1\n"))
        self.assertIn("PASS quoted-count witness=q(P4,S4)=2",
                      self.report.format(verbose=True).splitlines())

    def test_format_witness(self):
        self.assertEqual(format_witness(None), '')
        self.assertEqual(format_witness(Graph.complete(2)), 'A_')
        self.assertEqual(format_witness(3), '3')


if __name__ == '__main__':
    unittest.main()
