#!/usr/bin/env python3
"""Reproduce the two reference tables (the ideal of (1,3,5,6,7,7,7) and the
nilradical of (2,2,2,2)) in all output formats."""

import sys

from nilcount.cli import main

if __name__ == "__main__":
    fmt = sys.argv[1] if len(sys.argv) > 1 else "md"
    print("# counts by Jordan type for the ideal of h = (1,3,5,6,7,7,7)\n")
    main(["table", "--h", "1,3,5,6,7,7,7", "--format", fmt])
    print("\n# counts by Jordan type for the nilradical of (2,2,2,2)\n")
    main(["table", "--lambda", "2,2,2,2", "--format", fmt])
