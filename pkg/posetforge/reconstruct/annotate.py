"""(v, k) annotation of abstract Q-posets

An element of an abstract Q-poset stands for some graph, but only the
legitimate labellings say which. The annotation runs every legitimate
labelling onto every Q-reconstruction in the catalog and records, per
element, the vertex and component counts it received.
"""
import collections
import logging

from posetforge.base.errors import AnnotationError, PosetValidationError
from posetforge.base.poset import KIND_Q
from posetforge.graphs.canonical import certificate
from posetforge.posets.certificates import legitimate_labelings

LOGGER = logging.getLogger(__name__)

DETERMINED = 'determined'
AMBIGUOUS = 'ambiguous'


def q_reconstructions(abstract_q, catalog):
    """Catalog graphs whose abstract Q-poset equals abstract_q.

    Parameters
    ----------
    abstract_q : WeightedPoset
        Q-kind poset.

    catalog : Catalog

    Returns
    -------
    candidates : list of Graph
        In catalog order.

    Raises
    ------
    CatalogBoundError
        If the top rank of abstract_q exceeds the catalog bound.
    """
    if abstract_q.kind != KIND_Q:
        raise PosetValidationError("expected a Q poset, got %s"
                                   % abstract_q.kind)
    m = int(abstract_q.ranks[abstract_q.top])
    catalog.require_bound(m)
    cert = abstract_q.cert
    return [g for g in catalog.level(m)
            if catalog.abstract_certificate(g, KIND_Q) == cert]


class Annotation(object):

    """Observed (v, k) pairs of the elements of an abstract Q-poset.

    Parameters
    ----------
    observed : list of frozenset
        observed[x] is the set of (v, k) pairs element x received.

    branches : dict
        Maps each full assignment (a tuple of one (v, k) pair per element)
        to the list of candidates producing it.

    images : list of dict
        images[x] maps certificate to the graph element x was sent to.

    Attributes
    ----------
    observed : list of frozenset

    branches : collections.OrderedDict
    """

    def __init__(self, observed, branches, images=None):
        self.observed = [frozenset(s) for s in observed]
        self.branches = collections.OrderedDict(
            (assignment, list(branches[assignment]))
            for assignment in sorted(branches))
        self.images = images if images is not None else \
            [dict() for _ in self.observed]

    def __len__(self):
        return len(self.observed)

    def status(self, x):
        """'determined' if x received a single (v, k) pair, else 'ambiguous'."""
        return DETERMINED if len(self.observed[x]) == 1 else AMBIGUOUS

    def is_determined(self, x):
        return self.status(x) == DETERMINED

    def vk(self, x):
        """The (v, k) pair of a determined element.

        Raises
        ------
        AnnotationError
            If x is ambiguous.
        """
        if not self.is_determined(x):
            raise AnnotationError("element has several (v, k) pairs", [x])
        return next(iter(self.observed[x]))

    def same_vk(self, x, y):
        """Decide whether x and y carry the same (v, k) pair.

        True when both are determined to the same pair, False when their
        observed sets are disjoint.

        Raises
        ------
        AnnotationError
            When the observations allow both answers.
        """
        ox, oy = self.observed[x], self.observed[y]
        if len(ox) == 1 and ox == oy:
            return True
        if ox.isdisjoint(oy):
            return False
        raise AnnotationError("cannot compare (v, k) pairs", [x, y])

    def branch(self, assignment):
        """Annotation restricted to one full assignment."""
        return Annotation([{vk} for vk in assignment],
                          {assignment: self.branches[assignment]})

    def distinguished(self):
        """Per element, the graph every labelling agrees on, or None."""
        return [next(iter(images.values())) if len(images) == 1 else None
                for images in self.images]

    def __repr__(self):
        return "Annotation(%d elements, %d branches)" % (
            len(self), len(self.branches))


def annotate_vk(abstract_q, catalog, candidates=None):
    """Annotate every element of an abstract Q-poset with its (v, k) pairs.

    Parameters
    ----------
    abstract_q : WeightedPoset

    catalog : Catalog

    candidates : list of Graph, optional (default=None)
        The Q-reconstructions, when already known.

    Returns
    -------
    annotation : Annotation
    """
    if candidates is None:
        candidates = q_reconstructions(abstract_q, catalog)
    if not candidates:
        raise AnnotationError("no Q-reconstruction in the catalog",
                              list(abstract_q.elements))
    n = len(abstract_q)
    observed = [set() for _ in range(n)]
    images = [dict() for _ in range(n)]
    branches = collections.defaultdict(list)
    for candidate in candidates:
        target = catalog.poset(candidate, KIND_Q)
        count = 0
        for labeling in legitimate_labelings(abstract_q, candidate, target):
            count += 1
            assignment = tuple((g.n, g.k) for g in labeling)
            if candidate not in branches[assignment]:
                branches[assignment].append(candidate)
            for x, g in enumerate(labeling):
                observed[x].add((g.n, g.k))
                images[x].setdefault(certificate(g), g)
        LOGGER.debug("%d legitimate labellings onto %r", count, candidate)
    return Annotation(observed, branches, images)


def distinguished_elements(abstract_q, catalog):
    """Per element, the graph every legitimate labelling agrees on, or None.

    Every labelling onto every Q-reconstruction in the catalog is taken into
    account; an element is distinguished iff all of them send it to the same
    graph.
    """
    return annotate_vk(abstract_q, catalog).distinguished()
