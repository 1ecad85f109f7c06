# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('../'))

from bicliquecount import __version__  # noqa: E402

# -- Project information -----------------------------------------------------

project = 'bicliquecount'
author = 'bicliquecount developers'
version = __version__
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = None

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'bicliquecountdoc'
html_show_sphinx = False

# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'bicliquecount', 'bicliquecount Documentation', [author], 1)
]
