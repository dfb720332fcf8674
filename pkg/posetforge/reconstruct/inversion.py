"""Inversion of the edge-subgraph counts into bond lattice weights

For elements i <= k of a Q-poset,

    q(i, k) = sum over j with (v, k)(j) = (v, k)(i) of q(i, j) * omega(j, k),

and since q(i, i) = 1 this solves for omega(i, k) from the omega(j, k) with
i < j <= k. Terms with j not below k vanish. omega(i, k) is the indicator
of i = k when i and k carry the same (v, k) pair.
"""
import logging

LOGGER = logging.getLogger(__name__)


class OmegaInverter(object):

    """Memoized inversion over one (poset, annotation) pair.

    Parameters
    ----------
    poset : WeightedPoset
        Q-kind poset, abstract or concrete.

    annotation : Annotation
    """

    def __init__(self, poset, annotation):
        self.poset = poset
        self.annotation = annotation
        self._memo = {}

    def omega(self, i, k):
        """Return omega(i, k).

        Raises
        ------
        AnnotationError
            If a (v, k) comparison on the recursion path is undecidable.
        """
        key = (i, k)
        if key not in self._memo:
            self._memo[key] = self._compute(i, k)
        return self._memo[key]

    def _compute(self, i, k):
        if i == k:
            return 1
        poset = self.poset
        if not poset.leq(i, k):
            return 0
        same = self.annotation.same_vk
        if same(i, k):
            return 0
        value = poset.weight(i, k)
        for j in poset.upset(i):
            if j == i or j == k or not poset.leq(j, k):
                continue
            if same(j, i):
                value -= poset.weight(i, j) * self.omega(j, k)
        return value


def invert_omega(abstract_q, annotation, i, k):
    """Return omega(i, k) computed from the q weights and the annotation.

    Parameters
    ----------
    abstract_q : WeightedPoset

    annotation : Annotation

    i, k : int
        Element ids.

    Returns
    -------
    omega : int
    """
    return OmegaInverter(abstract_q, annotation).omega(i, k)
