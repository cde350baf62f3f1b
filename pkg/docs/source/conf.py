# Sphinx configuration of the DQ documentation.

import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

project = 'DQ'
copyright = '2026, DQ Team'
author = 'DQ Team'
release = '1.0.0'

extensions = [
    'myst_parser'
]

templates_path = ['_templates']
exclude_patterns = []

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
