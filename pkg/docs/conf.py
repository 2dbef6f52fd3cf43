# Configuration file for the Sphinx documentation builder.

# -- Project information -----------------------------------------------------

project = 'inetcalc'
copyright = '2026, the inetcalc developers'
author = 'the inetcalc developers'

version = '0.1'
release = '0.1.0'

# -- General configuration ---------------------------------------------------

extensions = []

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = None

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'inetcalcdoc'

# -- Options for other outputs -----------------------------------------------

latex_documents = [
    (master_doc, 'inetcalc.tex', 'inetcalc Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'inetcalc', 'inetcalc Documentation', [author], 1)
]
