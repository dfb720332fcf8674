"""
Graph core: canonical labeling, text formats and the catalog of small graphs.
"""
from __future__ import absolute_import

from .canonical import (CanonicalCert, CanonicalForm, canonical_form,
                        canonical_graph, canonical_matrix_form, certificate,
                        core_certificate, is_isomorphic, strip_isolated)
from .formats import (format_edge_list, format_graph6, parse_edge_list,
                      parse_graph6, parse_graph_input)
from .catalog import Catalog, enumerate_catalog

__all__ = [
    'CanonicalCert',
    'CanonicalForm',
    'Catalog',
    'canonical_form',
    'canonical_graph',
    'canonical_matrix_form',
    'certificate',
    'core_certificate',
    'enumerate_catalog',
    'format_edge_list',
    'format_graph6',
    'is_isomorphic',
    'parse_edge_list',
    'parse_graph6',
    'parse_graph_input',
    'strip_isolated',
]
