# -*- coding: utf-8 -*-
#
# mmvsdr documentation build configuration file.
import os
import sys

sys.path.insert(0, os.path.abspath('extensions'))

extensions = [
    'sphinx.ext.autodoc', 'sphinx.ext.doctest', 'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax', 'sphinx.ext.viewcode', 'refactordoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'mmvsdr'
copyright = u'2024, the mmvsdr developers'

import mmvsdr  # noqa: E402
version = mmvsdr.__version__
release = mmvsdr.__version__

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'mmvsdrdoc'

latex_documents = [
    ('index', 'mmvsdr.tex', u'mmvsdr Documentation',
     u'The mmvsdr developers', 'manual'),
]

man_pages = [
    ('index', 'mmvsdr', u'mmvsdr Documentation',
     [u'The mmvsdr developers'], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}
