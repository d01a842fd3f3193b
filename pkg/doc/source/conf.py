# -*- coding: utf-8 -*-
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import sys

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here. If the directory is relative to the
# documentation root, use os.path.abspath to make it absolute, like shown here.
sys.path.insert(0, os.path.abspath('../../'))
sys.path.insert(0, os.path.abspath('../'))
sys.path.insert(0, os.path.abspath('./'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.doctest',
              'sphinx.ext.todo',
              'sphinx.ext.coverage',
              'sphinx.ext.viewcode',
              'openstackdocstheme',
              'oslo_config.sphinxext',
              'oslo_config.sphinxconfiggen',
              ]

# openstackdocstheme options
repository_name = 'carlitz/carlitz'
bug_project = 'carlitz'
bug_tag = ''

# oslo_config.sphinxconfiggen options
config_generator_config_file = '../../etc/carlitz/carlitz-config-generator.conf'
sample_config_basename = '_static/carlitz'

# The suffix of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
copyright = u'2026-present, The Carlitz Authors'

exclude_patterns = []

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'openstackdocs'

html_title = 'Carlitz'

# Output file base name for HTML help builder.
htmlhelp_basename = 'CarlitzDoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
    ('index', 'doc-carlitz.tex', u'Carlitz Documentation',
     u'The Carlitz Authors', 'manual'),
]

# Disable usage of xindy https://bugzilla.redhat.com/show_bug.cgi?id=1643664
latex_use_xindy = False
