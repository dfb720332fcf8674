"""
Reports of verification suites.
"""
import collections

from posetforge.base.graph import Graph
from posetforge.graphs.formats import format_graph6

Check = collections.namedtuple('Check', ['claim', 'passed', 'witness'])


def format_witness(witness):
    """Text form of a witness: graph6 for graphs, str() for anything else."""
    if witness is None:
        return ''
    if isinstance(witness, Graph):
        return format_graph6(witness)
    if isinstance(witness, (list, tuple)):
        return ','.join(format_witness(w) for w in witness)
    return str(witness)


class VerifyReport(object):

    """Outcome of one verification suite at one bound.

    Parameters
    ----------
    suite : str
        Suite name.

    bound : int
        Catalog edge bound the suite ran at.

    Attributes
    ----------
    checks : list of Check
        In the order they were recorded.
    """

    def __init__(self, suite, bound):
        self.suite = suite
        self.bound = bound
        self.checks = []

    def check(self, claim, passed, witness=None):
        """Record one check.

        Parameters
        ----------
        claim : str
            Short claim identifier, e.g. ``'omega-roundtrip'``.

        passed : bool

        witness : Graph, list of Graph or str, optional
            Required when the check failed.

        Returns
        -------
        passed : bool
        """
        passed = bool(passed)
        witness = format_witness(witness)
        if not passed and not witness:
            raise ValueError("failing check %r needs a witness" % claim)
        self.checks.append(Check(claim, passed, witness))
        return passed

    def extend(self, checks):
        """Record already built (claim, passed, witness) triples in order."""
        for claim, passed, witness in checks:
            self.check(claim, passed, witness)
        return self

    @property
    def n_passed(self):
        return sum(1 for c in self.checks if c.passed)

    @property
    def n_failed(self):
        return len(self.checks) - self.n_passed

    @property
    def ok(self):
        """True iff no check failed."""
        return self.n_failed == 0

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def summary(self):
        """Per-claim (passed, failed) counts, claims in first-seen order."""
        counts = collections.OrderedDict()
        for c in self.checks:
            passed, failed = counts.get(c.claim, (0, 0))
            counts[c.claim] = (passed + c.passed, failed + (not c.passed))
        return counts

    def format(self, verbose=False):
        """Deterministic text of the report.

        Failures are always listed with their witness; passing checks only
        when verbose.
        """
        lines = ["suite %s bound=%d" % (self.suite, self.bound)]
        for c in self.checks:
            if not c.passed:
                lines.append("FAIL %s witness=%s" % (c.claim, c.witness))
            elif verbose:
                line = "PASS %s" % c.claim
                if c.witness:
                    line += " witness=%s" % c.witness
                lines.append(line)
        for claim, (passed, failed) in self.summary().items():
            lines.append("claim %s passed=%d failed=%d"
                         % (claim, passed, failed))
        lines.append("total checks=%d passed=%d failed=%d"
                     % (len(self.checks), self.n_passed, self.n_failed))
        return '\n'.join(lines) + '\n'

    def __repr__(self):
        return "VerifyReport(%s, bound=%d, %d/%d passed)" % (
            self.suite, self.bound, self.n_passed, len(self.checks))
