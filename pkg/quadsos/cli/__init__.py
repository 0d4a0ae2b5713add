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
"""
Command line interface of quadsos (``quadsos`` / ``python -m quadsos``).
"""

from .config import RunConfig, resolve_threads
from .main import main
