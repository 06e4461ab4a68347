# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath('..'))
sys.path.insert(0, os.path.abspath('.'))

# -- Project information -----------------------------------------------------

project = 'sigma7'
copyright = '2026, sigma7 developers'
author = 'sigma7 developers'
release = '0.1'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx_rtd_theme',
]

pygments_style = 'sphinx'
modindex_common_prefix = [ 'sigma7.' ]

source_suffix = '.rst'
templates_path = ['_templates']
exclude_patterns = ['_build']

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']

autodoc_default_options = {
    'members': None,
    'member-order': 'bysource',
    'undoc-members': None,
    'exclude-members': '__weakref__, __dict__, __repr__'
}
autodoc_inherit_docstrings = False
