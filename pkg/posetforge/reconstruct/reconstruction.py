"""Reconstruction of the bond lattice and the induced subgraph poset

The bond lattice is assembled from an abstract Q-poset alone: the elements
x with omega(x, top) > 0 are the spanning partition images of the top, the
weights between them come from the inversion, and the all-singleton image
is added as the bottom. When the annotation is too ambiguous for the
inversion, it is rerun on every branch of the annotation separately.

Every answer is checked against the lattices built directly from the
Q-reconstructions; a disagreement is a defect and raises.
"""
import collections
import logging

import numpy as np

from posetforge.base.errors import (AnnotationError, PosetForgeError,
                                    ReconstructionError)
from posetforge.base.poset import KIND_OMEGA, KIND_P, WeightedPoset
from posetforge.graphs.canonical import certificate
from posetforge.reconstruct.annotate import annotate_vk, q_reconstructions
from posetforge.reconstruct.inversion import OmegaInverter
from posetforge.reconstruct.outcome import ReconstructionOutcome

LOGGER = logging.getLogger(__name__)


def _gamma(annotation, x):
    gammas = {v - k for v, k in annotation.observed[x]}
    if len(gammas) != 1:
        raise AnnotationError("rank in the bond lattice is not determined",
                              [x])
    return gammas.pop()


def assemble_omega(abstract_q, annotation):
    """Build the abstract bond lattice of the top of abstract_q.

    Parameters
    ----------
    abstract_q : WeightedPoset

    annotation : Annotation

    Returns
    -------
    omega : WeightedPoset
        Abstract OMEGA-kind poset.

    Raises
    ------
    AnnotationError
        If the annotation blocks the inversion.
    """
    inverter = OmegaInverter(abstract_q, annotation)
    top = abstract_q.top
    members = [x for x in abstract_q.elements if inverter.omega(x, top) > 0]
    n = len(members) + 1
    weights = np.zeros((n, n), dtype=np.int64)
    weights[0, :] = 1
    for a, x in enumerate(members):
        for b, y in enumerate(members):
            if abstract_q.leq(x, y):
                weights[a + 1, b + 1] = inverter.omega(x, y)
    ranks = [0] + [_gamma(annotation, x) for x in members]
    return WeightedPoset(weights, ranks, KIND_OMEGA).abstract()


def _group(entries):
    """Group (cert, poset, graph) entries by certificate."""
    classes = collections.OrderedDict()
    for cert, poset, graph in entries:
        if cert not in classes:
            classes[cert] = (poset, [])
        if graph not in classes[cert][1]:
            classes[cert][1].append(graph)
    return [(cert, poset, sorted(graphs, key=certificate))
            for cert, (poset, graphs) in classes.items()]


def reconstruct_omega(abstract_q, catalog):
    """Construct the abstract bond lattice from an abstract Q-poset.

    Parameters
    ----------
    abstract_q : WeightedPoset
        Abstract Q-kind poset whose top rank is within the catalog bound.

    catalog : Catalog

    Returns
    -------
    outcome : ReconstructionOutcome
        Unique iff all Q-reconstructions share their abstract bond lattice.

    Raises
    ------
    ReconstructionError
        If an assembled lattice differs from the one built directly.
    """
    candidates = q_reconstructions(abstract_q, catalog)
    if not candidates:
        raise ReconstructionError("no Q-reconstruction in the catalog")
    annotation = annotate_vk(abstract_q, catalog, candidates)
    expected = {id(g): catalog.abstract_certificate(g, KIND_OMEGA)
                for g in candidates}

    try:
        lattice = assemble_omega(abstract_q, annotation)
        produced = [(lattice, candidates)]
    except AnnotationError as e:
        LOGGER.debug("merged annotation blocked (%s); inverting per branch", e)
        produced = [(assemble_omega(abstract_q, annotation.branch(assignment)),
                     graphs)
                    for assignment, graphs in annotation.branches.items()]

    entries = []
    for lattice, graphs in produced:
        for g in graphs:
            if lattice.cert != expected[id(g)]:
                raise ReconstructionError(
                    "inverted bond lattice differs from Omega of %r" % (g, ),
                    [g])
            entries.append((lattice.cert, lattice, g))
    outcome = ReconstructionOutcome('omega', _group(entries))
    if not outcome.succeeded:
        LOGGER.info("bond lattice ambiguous: %d classes", len(outcome.classes))
    return outcome


def reconstruct_p(abstract_q, catalog):
    """Construct the abstract induced subgraph poset from an abstract Q-poset.

    The bond lattice is reconstructed first; the candidates are the
    Q-reconstructions sharing it (all of them when it is ambiguous), and the
    outcome is unique iff their abstract P-posets coincide.

    Returns
    -------
    outcome : ReconstructionOutcome
    """
    omega = reconstruct_omega(abstract_q, catalog)
    if omega.succeeded:
        candidates = omega.candidates[0]
    else:
        candidates = [g for graphs in omega.candidates for g in graphs]
    entries = []
    for g in candidates:
        poset = catalog.poset(g, KIND_P)
        entries.append((poset.cert, poset.abstract(), g))
    outcome = ReconstructionOutcome('p', _group(entries))
    if not outcome.succeeded:
        LOGGER.info("induced subgraph poset ambiguous: %d classes",
                    len(outcome.classes))
    return outcome


def reconstruct(target, abstract_q, catalog):
    """Dispatch to :py:func:`reconstruct_omega` or :py:func:`reconstruct_p`."""
    if target == 'omega':
        return reconstruct_omega(abstract_q, catalog)
    if target == 'p':
        return reconstruct_p(abstract_q, catalog)
    raise PosetForgeError("unknown reconstruction target %r" % (target, ))
