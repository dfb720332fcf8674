"""
Command-line surface, poset cache and verification suites.
"""
from __future__ import absolute_import

from .cache import PosetCache
from .collisions import collision_classes
from .report import Check, VerifyReport
from .suites import (SUITES, FamiliesSuite, IdentitiesSuite, InversionSuite,
                     MainTheoremSuite, exceptional_table, run_suite)

__all__ = [
    'Check',
    'FamiliesSuite',
    'IdentitiesSuite',
    'InversionSuite',
    'MainTheoremSuite',
    'PosetCache',
    'SUITES',
    'VerifyReport',
    'collision_classes',
    'exceptional_table',
    'run_suite',
]
