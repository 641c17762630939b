# -*- coding: utf-8 -*-
#
# MuRearrange documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys, os

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

if on_rtd:
    from unittest.mock import MagicMock

    class Mock(MagicMock):
        @classmethod
        def __getattr__(cls, name):
            return Mock()

    # Add any other difficult to install modules here
    MOCK_MODULES = ['numpy', 'numpy.testing', 'scipy', 'scipy.integrate',
                    'scipy.interpolate', 'scipy.ndimage', 'scipy.optimize',
                    'scipy.sparse', 'scipy.sparse.linalg', 'scipy.special',
                    'h5py', 'lmfit', 'hypothesis']
    sys.modules.update((mod_name, Mock()) for mod_name in MOCK_MODULES)

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('..'))

# Document __repr__ and __init__, which carry the parameter descriptions.
def skip(app, what, name, obj, skip, options):
    if name in ["__repr__", "__init__"]:
        return False
    return skip

def setup(app):
    app.connect("autodoc-skip-member", skip)

autodoc_member_order = 'bysource'

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.coverage', 'sphinx.ext.mathjax',
              'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'MuRearrange'
copyright = u'2026, the MuRearrange developers'

version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'sphinxdoc'
htmlhelp_basename = 'murearrangedoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'MuRearrange.tex', u'MuRearrange Documentation',
   u'the MuRearrange developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'murearrange', u'MuRearrange Documentation',
     [u'the MuRearrange developers'], 1)
]
