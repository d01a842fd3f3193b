# -*- coding: utf-8 -*-
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

# -- General configuration ------------------------------------------------

extensions = [
    'reno.sphinxext',
    'openstackdocstheme',
]

# openstackdocstheme options
repository_name = 'carlitz/carlitz'
bug_project = 'carlitz'
bug_tag = ''

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

copyright = u'2026, The Carlitz Authors'

# The short X.Y version.
version = ''
# The full version, including alpha/beta/rc tags.
release = ''

exclude_patterns = []

pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'openstackdocs'

html_static_path = ['_static']

htmlhelp_basename = 'CarlitzReleaseNotesdoc'

# -- Options for Internationalization output ------------------------------
locale_dirs = ['locale/']
