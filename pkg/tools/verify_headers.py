#!/usr/bin/env python3
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
"""Check that every Python source file starts with the quadsos license header."""

import argparse
import multiprocessing
import os
import re
import sys

# regex for character encoding from PEP 263
pep263 = re.compile(r"^[ \t\f]*#.*?coding[:=][ \t]*([-_.a-zA-Z0-9]+)")

FIRST_LINE = "# This code is part of quadsos.\n"
HEADER = FIRST_LINE + "#\n"
COPYRIGHT = "# (C) Copyright quadsos developers 20"
APACHE_TEXT = """#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
"""


def discover_files(code_paths):
    out_paths = []
    for path in code_paths:
        if os.path.isfile(path):
            out_paths.append(path)
        else:
            for dir_path, _, files in os.walk(path):
                for subfile in files:
                    if subfile.endswith(".py"):
                        out_paths.append(os.path.join(dir_path, subfile))
    return sorted(out_paths)


def validate_header(file_path):
    with open(file_path, encoding="utf8") as fd:
        lines = fd.readlines()
    start = None
    for index, line in enumerate(lines[:5]):
        if index < 2 and pep263.match(line):
            return file_path, False, "Unnecessary encoding specification (PEP 263, 3120)"
        if line == FIRST_LINE:
            start = index
            break
    if start is None:
        return file_path, False, "Header not found in first 5 lines"
    if "".join(lines[start : start + 2]) != HEADER:
        return file_path, False, "Header up to copyright line does not match: %s" % HEADER
    if len(lines) < start + 11 or not lines[start + 2].startswith(COPYRIGHT):
        return file_path, False, "Header copyright line not found"
    if "".join(lines[start + 3 : start + 11]) != APACHE_TEXT:
        return file_path, False, "Header apache text string doesn't match:\n %s" % APACHE_TEXT
    return file_path, True, None


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    default_paths = [os.path.join(root, "quadsos"), os.path.join(root, "test")]
    parser = argparse.ArgumentParser(description="Check file headers.")
    parser.add_argument(
        "paths",
        type=str,
        nargs="*",
        default=default_paths,
        help="Paths to scan, by default ../quadsos and ../test from the script",
    )
    args = parser.parse_args()
    files = discover_files(args.paths)
    with multiprocessing.Pool() as pool:
        res = pool.map(validate_header, files)
    failed_files = [x for x in res if x[1] is False]
    if failed_files:
        for failed_file in failed_files:
            sys.stderr.write("%s failed header check because:\n" % failed_file[0])
            sys.stderr.write("%s\n\n" % failed_file[2])
        sys.exit(1)
    sys.exit(0)


if __name__ == "__main__":
    main()
