"""
Base interfaces for use in the package.
Poset builders and verification suites are written against the interfaces
defined below.
"""
from six import with_metaclass

from abc import ABCMeta, abstractmethod


class PosetBuilder(with_metaclass(ABCMeta, object)):

    """Build a concrete weighted poset of a graph

    A PosetBuilder turns a graph into one of the three concrete weighted
    posets Q(G), P(G) or Omega(G).
    """

    #: Kind tag of the posets produced ('Q', 'P' or 'OMEGA').
    kind = None

    @abstractmethod
    def build(self, graph):
        """Return the concrete poset of graph.

        Parameters
        ----------
        graph : Graph

        Returns
        -------
        poset : WeightedPoset
            A concrete poset whose kind is ``self.kind``.
        """
        pass

    def __call__(self, graph):
        return self.build(graph)


class VerifySuite(with_metaclass(ABCMeta, object)):

    """A group of exhaustive checks over a catalog

    A VerifySuite runs a fixed list of claims against every relevant catalog
    graph and records one check per claim instance.
    """

    #: Name used on the command line.
    name = None

    def __init__(self, **kwargs):
        self.n_jobs = kwargs.pop('n_jobs', 1)

    @abstractmethod
    def run(self, catalog, report):
        """Run every check of the suite.

        Parameters
        ----------
        catalog : Catalog
            All graphs up to the verification bound.

        report : VerifyReport
            Receives one record per check.

        Returns
        -------
        report : VerifyReport
            The report passed in.
        """
        pass
