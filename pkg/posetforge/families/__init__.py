"""
Exceptional families F0-F4, M and N, and the table of named exceptional graphs.
"""
from __future__ import absolute_import

from .membership import (FAMILIES, FamilyTag, classify, f4_decomposition,
                         in_f4, in_natural_x, in_X)
from .exceptional import (NAMES, ExceptionalTable,
                          resolve_exceptional_table)

__all__ = [
    'ExceptionalTable',
    'FAMILIES',
    'FamilyTag',
    'NAMES',
    'classify',
    'f4_decomposition',
    'in_X',
    'in_f4',
    'in_natural_x',
    'resolve_exceptional_table',
]
