"""
The weighted poset object used in this package.

A weighted poset is stored as a square integer matrix W with W[x, y] > 0 iff
x <= y; W[x, y] is the weight of the comparable pair and the diagonal is 1.
Concrete posets additionally carry, per element, the graph it stands for.
"""
import logging

import numpy as np

from posetforge.base.errors import PosetValidationError
from posetforge.graphs.canonical import (CanonicalCert, canonical_matrix_form,
                                         certificate)

LOGGER = logging.getLogger(__name__)

KIND_Q = 'Q'
KIND_P = 'P'
KIND_OMEGA = 'OMEGA'
KINDS = (KIND_Q, KIND_P, KIND_OMEGA)


class WeightedPoset(object):

    """Finite weighted poset

    Parameters
    ----------
    weights : array-like of int, shape = (n, n)
        weights[x, y] is the weight of x <= y, and 0 when x is not below y.

    ranks : array-like of int, shape = (n, )
        Rank of every element: e(.) for Q, v(.) for P, gamma(.) for OMEGA.

    kind : {'Q', 'P', 'OMEGA'}

    labels : list of CanonicalCert, optional (default=None)
        Element certificates; derived from graphs when those are given.

    graphs : list of Graph, optional (default=None)
        The graph of each element; present iff the poset is concrete.

    validate : {True, False}, optional (default=True)
        Check the order axioms and the kind-specific invariants.

    Attributes
    ----------
    weights : numpy array, shape = (n, n)
        Read-only weight matrix.

    ranks : numpy array, shape = (n, )

    kind : str

    graphs : list of Graph or None

    labels : list of CanonicalCert or None
        Certificates of the element graphs.
    """

    def __init__(self, weights, ranks, kind, labels=None, graphs=None,
                 validate=True):
        if kind not in KINDS:
            raise TypeError("kind must be one of %s, got %r" % (KINDS, kind))
        self.weights = np.array(weights, dtype=np.int64, ndmin=2)
        if self.weights.size == 0:
            self.weights = np.zeros((0, 0), dtype=np.int64)
        self.weights.setflags(write=False)
        self.ranks = np.array(ranks, dtype=np.int64).reshape(-1)
        self.ranks.setflags(write=False)
        self.kind = kind
        self.graphs = list(graphs) if graphs is not None else None
        if labels is not None:
            self.labels = list(labels)
        elif self.graphs is not None:
            self.labels = [certificate(g) for g in self.graphs]
        else:
            self.labels = None
        self._canonical = None
        self._label_index = None
        if validate:
            self.validate()

    def __len__(self):
        return self.weights.shape[0]

    def __repr__(self):
        return "WeightedPoset(kind=%s, n=%d, %s)" % (
            self.kind, len(self), 'concrete' if self.is_concrete else 'abstract')

    @property
    def n(self):
        """Number of elements."""
        return len(self)

    @property
    def elements(self):
        """Element ids 0..n-1."""
        return range(len(self))

    @property
    def is_concrete(self):
        """True iff every element carries a graph."""
        return self.graphs is not None

    @property
    def order(self):
        """Boolean matrix of the relation <=."""
        return self.weights > 0

    def weight(self, x, y):
        """Weight of the pair (x, y); 0 unless x <= y."""
        return int(self.weights[x, y])

    def leq(self, x, y):
        """True iff x <= y."""
        return self.weights[x, y] > 0

    def downset(self, x):
        """Sorted ids of the elements below or equal to x."""
        return np.nonzero(self.weights[:, x] > 0)[0].tolist()

    def upset(self, x):
        """Sorted ids of the elements above or equal to x."""
        return np.nonzero(self.weights[x] > 0)[0].tolist()

    def bottoms(self):
        """Ids of the minimal elements."""
        return np.nonzero(self.order.sum(axis=0) == 1)[0].tolist()

    def tops(self):
        """Ids of the maximal elements."""
        return np.nonzero(self.order.sum(axis=1) == 1)[0].tolist()

    @property
    def bottom(self):
        """The unique minimal element."""
        minimal = self.bottoms()
        if len(minimal) != 1:
            raise PosetValidationError("%d minimal elements" % len(minimal))
        return minimal[0]

    @property
    def top(self):
        """The unique maximal element."""
        maximal = self.tops()
        if len(maximal) != 1:
            raise PosetValidationError("%d maximal elements" % len(maximal))
        return maximal[0]

    def index_of(self, cert):
        """Element id whose graph has the given certificate, or None."""
        if self.labels is None:
            raise ValueError("abstract posets carry no labels")
        if self._label_index is None:
            self._label_index = {c: i for i, c in enumerate(self.labels)}
        return self._label_index.get(cert)

    def validate(self, check_kind=True):
        """Check the weighted-poset axioms.

        Raises
        ------
        PosetValidationError
        """
        w = self.weights
        n = len(self)
        if w.shape != (n, n) or self.ranks.shape != (n, ):
            raise PosetValidationError("weights/ranks shapes %s/%s disagree"
                                       % (w.shape, self.ranks.shape))
        if self.graphs is not None and len(self.graphs) != n:
            raise PosetValidationError("%d graphs for %d elements"
                                       % (len(self.graphs), n))
        if (w < 0).any():
            raise PosetValidationError("negative weight")
        if n == 0:
            return
        if (np.diag(w) <= 0).any():
            raise PosetValidationError("relation is not reflexive")
        leq = (w > 0).astype(np.int64)
        if ((leq * leq.T) - np.eye(n, dtype=np.int64)).any():
            raise PosetValidationError("relation is not antisymmetric")
        if ((leq.dot(leq) > 0) & (leq == 0)).any():
            raise PosetValidationError("relation is not transitive")
        if check_kind:
            self._validate_kind()

    def _validate_kind(self):
        minimal = self.bottoms()
        if self.kind == KIND_Q:
            if len(minimal) != 1 or self.ranks[minimal[0]] != 1:
                raise PosetValidationError(
                    "Q poset needs a unique minimal element of rank 1")
            if self.graphs is not None:
                for x, g in enumerate(self.graphs):
                    if g.e != self.ranks[x]:
                        raise PosetValidationError(
                            "rank of element %d is not its edge count" % x)
        elif self.kind == KIND_OMEGA:
            if len(minimal) != 1 or len(self.tops()) != 1:
                raise PosetValidationError(
                    "bond lattice needs unique minimal and maximal elements")
            if self.ranks[minimal[0]] != 0:
                raise PosetValidationError("bond lattice bottom must have rank 0")
        elif self.kind == KIND_P and self.graphs is not None:
            if not any(g.n == 1 and g.e == 0 for g in self.graphs):
                raise PosetValidationError("P poset must contain K1")

    # ------------------------------------------------------------------
    # canonical form

    def _canonical_form(self):
        if self._canonical is None:
            order, key = canonical_matrix_form(self.weights, self.ranks)
            header = self.kind.encode('ascii') + b'\x00' + \
                len(self).to_bytes(2, 'big')
            self._canonical = (order, CanonicalCert(header + key))
        return self._canonical

    @property
    def cert(self):
        """Abstract certificate: equal iff the weighted posets are isomorphic."""
        return self._canonical_form()[1]

    @property
    def canonical_order(self):
        """canonical_order[i] is the element placed at canonical position i."""
        return list(self._canonical_form()[0])

    def restrict(self, elements, keep_graphs=True):
        """Return the sub-poset on the given element ids, renumbered in order.

        With all ids this is a relabeling: element elements[i] becomes i.
        """
        elements = list(elements)
        graphs = labels = None
        if keep_graphs and self.graphs is not None:
            graphs = [self.graphs[x] for x in elements]
        if keep_graphs and self.labels is not None:
            labels = [self.labels[x] for x in elements]
        return WeightedPoset(self.weights[np.ix_(elements, elements)],
                             self.ranks[elements], self.kind, labels=labels,
                             graphs=graphs, validate=False)

    def permute(self, order, keep_graphs=True):
        """Return the poset with element order[i] renamed to i."""
        if sorted(order) != list(range(len(self))):
            raise ValueError("order must be a permutation of the elements")
        return self.restrict(order, keep_graphs=keep_graphs)

    def abstract(self):
        """Return the abstract poset: canonical element order, no graphs."""
        abstract = self.permute(self.canonical_order, keep_graphs=False)
        abstract._canonical = (list(range(len(self))), self.cert)
        return abstract
