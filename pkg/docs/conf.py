# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

# Insert meshforge path into the system.
sys.path.insert(0, os.path.abspath(".."))

import meshforge  # noqa

project = "meshforge"
copyright = "2026, meshforge developers"
author = "meshforge developers"
# The short X.Y version.
version = meshforge.__version__
# The full version, including alpha/beta/rc tags.
release = meshforge.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    "pallets_sphinx_themes",
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
]

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

autodoc_class_signature = "separated"
# Napoleon settings
napoleon_include_init_with_doc = True

# -- Options for HTML output -------------------------------------------------

html_theme = "flask"

mathjax3_config = {
    "tex": {"inlineMath": [["$", "$"], ["\\(", "\\)"]]},
}

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
}
