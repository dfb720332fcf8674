"""
Result of a reconstruction: a unique abstract poset, or an ambiguity report.
"""
import hashlib

from posetforge.graphs.formats import format_graph6
from posetforge.posets.io import format_poset

TARGETS = ('omega', 'p')


def cert_digest(cert):
    """Short printable digest of a certificate (sha256 hex)."""
    return hashlib.sha256(bytes(cert)).hexdigest()


class ReconstructionOutcome(object):

    """Outcome of reconstruct_omega or reconstruct_p.

    Parameters
    ----------
    target : {'omega', 'p'}

    classes : list of (CanonicalCert, WeightedPoset, list of Graph)
        One entry per distinct abstract result: its certificate, the abstract
        poset and the candidate graphs producing it.

    Attributes
    ----------
    target : str

    classes : list
        Sorted by certificate.
    """

    def __init__(self, target, classes):
        if target not in TARGETS:
            raise ValueError("target must be one of %s, got %r"
                             % (TARGETS, target))
        self.target = target
        self.classes = sorted(classes, key=lambda entry: entry[0])

    @property
    def succeeded(self):
        """True iff exactly one abstract poset results."""
        return len(self.classes) == 1

    @property
    def poset(self):
        """The reconstructed abstract poset, or None when ambiguous."""
        return self.classes[0][1] if self.succeeded else None

    @property
    def certs(self):
        return [cert for cert, _, _ in self.classes]

    @property
    def candidates(self):
        """Witness graphs, one list per class."""
        return [graphs for _, _, graphs in self.classes]

    def format(self):
        """Poset file text on success, the ambiguity report otherwise."""
        if self.succeeded:
            return format_poset(self.poset, abstract=True)
        lines = ["AMBIGUOUS target=%s" % self.target]
        for cert, _, graphs in self.classes:
            lines.append("candidate %s cert=%s"
                         % (format_graph6(graphs[0]), cert_digest(cert)))
        return '\n'.join(lines) + '\n'

    def __repr__(self):
        return "ReconstructionOutcome(target=%s, %s)" % (
            self.target, 'unique' if self.succeeded
            else '%d classes' % len(self.classes))
