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

"""Version information for quadsos."""

import os
import subprocess
from typing import List

ROOT_DIR = os.path.dirname(os.path.abspath(__file__))


def _run_git(args: List[str]) -> str:
    # git under the C locale, nothing else from the caller's environment
    env = {key: os.environ[key] for key in ("SYSTEMROOT", "PATH") if key in os.environ}
    env.update(LANGUAGE="C", LANG="C", LC_ALL="C")
    proc = subprocess.run(
        ["git"] + args,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        env=env,
        cwd=os.path.dirname(ROOT_DIR),
        check=False,
    )
    if proc.returncode > 0:
        raise OSError(proc.stderr.decode("ascii", "replace"))
    return proc.stdout.decode("ascii").strip()


def git_version() -> str:
    """Get the current git head sha1, or ``"Unknown"`` outside a checkout."""
    try:
        return _run_git(["rev-parse", "HEAD"])
    except OSError:
        return "Unknown"


with open(os.path.join(ROOT_DIR, "VERSION.txt"), "r") as version_file:
    VERSION = version_file.read().strip()


def get_version_info() -> str:
    """Get the full version string.

    Released (tagged) checkouts and installed copies report ``VERSION``; any other
    git checkout gets a ``.dev0+<sha>`` suffix.
    """
    if not os.path.exists(os.path.join(os.path.dirname(ROOT_DIR), ".git")):
        return VERSION
    try:
        tags = _run_git(["tag", "-l", "--points-at", "HEAD"])
    except Exception:  # pylint: disable=broad-except
        return VERSION
    if tags:
        return VERSION
    return VERSION + ".dev0+" + git_version()[:7]


__version__ = get_version_info()
