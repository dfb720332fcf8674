#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# posetforge documentation build configuration file.

import os
import sys
from unittest.mock import MagicMock


MOCK_MODULES = ['numpy', 'numpy.testing', 'scipy', 'scipy.special',
                'scipy.sparse', 'scipy.sparse.csgraph', 'scipy.linalg', 'networkx',
                'networkx.algorithms', 'networkx.algorithms.isomorphism',
                'joblib', 'six', 'click', 'click.testing']
sys.modules.update((mod_name, MagicMock()) for mod_name in MOCK_MODULES)

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'numpydoc',
]

napoleon_numpy_docstring = True
numpydoc_show_class_members = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'posetforge'
copyright = '2026, posetforge developers'
version = '0.1'
release = '0.1.0'

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

htmlhelp_basename = 'posetforgedoc'
