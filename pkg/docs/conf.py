# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
from datetime import date

sys.path.insert(0, os.path.abspath('../'))

import qzcodes


# -- Project information -----------------------------------------------------

project = 'qzcodes'

author = 'The qzcodes developers'
copyright = f"{date.today().year}, {author}"

# The short X.Y version
version = '.'.join(qzcodes.__version__.split('.')[0:2])
# The full version, including alpha/beta/rc tags
release = qzcodes.__version__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'm2r2',
]

templates_path = ['_templates']

source_suffix = ['.rst', '.md']

# The master toctree document.
master_doc = 'index'

language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

autodoc_member_order = 'bysource'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = []

htmlhelp_basename = 'qzcodesdoc'


# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'qzcodes.tex', 'qzcodes Documentation',
     author, 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'qzcodes', 'qzcodes Documentation',
     [author], 1)
]


# -- Options for todo extension ----------------------------------------------

todo_include_todos = True
