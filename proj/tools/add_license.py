#!/usr/bin/env python3
"""Prepend the license header to C++ sources that lack it. Safe to rerun."""

import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
HEADER = (ROOT / "tools" / "license_header.txt").read_text()
DIRS = ("src", "include", "tests", "tools")
SUFFIXES = {".cpp", ".hpp"}


def main() -> int:
    changed = 0
    for d in DIRS:
        for path in sorted((ROOT / d).rglob("*")):
            if path.suffix not in SUFFIXES or not path.is_file():
                continue
            text = path.read_text()
            if text.startswith(HEADER):
                continue
            path.write_text(HEADER + text)
            changed += 1
    print(f"{changed} files updated")
    return 0


if __name__ == "__main__":
    sys.exit(main())
