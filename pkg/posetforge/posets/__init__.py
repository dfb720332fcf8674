"""
Concrete posets Q(G), P(G), Omega(G), their isomorphism and their file format.
"""
from __future__ import absolute_import

from posetforge.base.poset import KIND_OMEGA, KIND_P, KIND_Q, WeightedPoset
from .builders import (BondLatticeBuilder, EdgeSubgraphPosetBuilder,
                       InducedSubgraphPosetBuilder, build_Omega, build_P,
                       build_poset, build_Q, normalize_kind)
from .certificates import (abstract_cert, downset_certificates,
                           legitimate_labelings, poset_isomorphic,
                           poset_isomorphisms)
from .io import format_poset, parse_poset, read_poset, write_poset

__all__ = [
    'BondLatticeBuilder',
    'EdgeSubgraphPosetBuilder',
    'InducedSubgraphPosetBuilder',
    'KIND_OMEGA',
    'KIND_P',
    'KIND_Q',
    'WeightedPoset',
    'abstract_cert',
    'build_Omega',
    'build_P',
    'build_Q',
    'build_poset',
    'downset_certificates',
    'format_poset',
    'legitimate_labelings',
    'normalize_kind',
    'parse_poset',
    'poset_isomorphic',
    'poset_isomorphisms',
    'read_poset',
    'write_poset',
]
