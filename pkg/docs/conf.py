# This code is part of quadsos.
#
# (C) Copyright quadsos developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

#
# quadsos documentation build configuration file
#

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# General configuration:

project = "quadsos"
copyright = "2026, quadsos developers"  # pylint: disable=redefined-builtin

with open(os.path.join("..", "quadsos", "VERSION.txt")) as version_file:
    # The full version, including alpha/beta/rc tags.
    release = version_file.read().strip()
# The short X.Y version.
version = ".".join(release.split(".")[:2])

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.todo",
    "sphinx_autodoc_typehints",
    "reno.sphinxext",
]
templates_path = ["_templates"]

pygments_style = "colorful"

add_module_names = False

modindex_common_prefix = ["quadsos."]

todo_include_todos = True

source_suffix = [".rst"]

master_doc = "index"

# Autosummary options
autosummary_generate = True
autosummary_generate_overwrite = False
autoclass_content = "both"

# HTML Output Options

html_theme = "alabaster"

htmlhelp_basename = "quadsos"
