# -*- coding: utf-8 -*-
#
# hhl documentation build configuration file.

import sys, os

# autodoc imports the package from the source checkout
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']

source_suffix = '.rst'
master_doc = 'hhl'

project = u'hhl'
copyright = u'2026, The hhl developers'

version = '0.3'
release = '0.3.0'

exclude_patterns = ['_build']

pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'hhldoc'

man_pages = [
    ('hhl', 'hhl', u'hhl Documentation',
     [u'The hhl developers'], 1)
]
