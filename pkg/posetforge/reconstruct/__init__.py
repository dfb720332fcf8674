"""
Reconstruction of the bond lattice and the induced subgraph poset from the
abstract edge-subgraph poset.
"""
from __future__ import absolute_import

from .annotate import (Annotation, annotate_vk, distinguished_elements,
                       q_reconstructions)
from .inversion import OmegaInverter, invert_omega
from .outcome import ReconstructionOutcome, cert_digest
from .reconstruction import (assemble_omega, reconstruct, reconstruct_omega,
                             reconstruct_p)
from .components import (component_counts_from_q, direct_component_counts,
                         is_component_count_eligible, q_counts_from_poset)

__all__ = [
    'Annotation',
    'OmegaInverter',
    'ReconstructionOutcome',
    'annotate_vk',
    'assemble_omega',
    'cert_digest',
    'component_counts_from_q',
    'direct_component_counts',
    'distinguished_elements',
    'invert_omega',
    'is_component_count_eligible',
    'q_counts_from_poset',
    'q_reconstructions',
    'reconstruct',
    'reconstruct_omega',
    'reconstruct_p',
]
