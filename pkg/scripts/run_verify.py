#!/usr/bin/env python3
"""Run every verification suite at moderate sizes; exits nonzero on the
first invariant failure."""

import sys

from nilcount.cli import main

SIZES = {
    "routes": 6,
    "modular": 5,
    "bruteforce": 4,
    "macdonald": 6,
    "hermite": 6,
    "cosets": 3,
}

if __name__ == "__main__":
    for suite, n in SIZES.items():
        code = main(["verify", "--suite", suite, "--n", str(n)])
        if code != 0:
            sys.exit(code)
    sys.exit(0)
