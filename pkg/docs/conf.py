# Sphinx configuration of the NMDL documentation.

extensions = ["recommonmark", "sphinx.ext.graphviz"]

source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}

master_doc = "index"

project = "Numeral MDL (NMDL)"
copyright = "2022, NMDL developers"
author = "NMDL developers"

version = "1.0"
release = "1.0"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = "sphinx"

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "NmdlDoc"

graphviz_output_format = "svg"

latex_elements = {
    "papersize": "a4paper",
    "pointsize": "10pt",
}

latex_documents = [
    (master_doc, "Nmdl.tex", "NMDL Documentation", author, "manual"),
]

man_pages = [
    (master_doc, "nmdl", "NMDL Documentation", [author], 1),
]
