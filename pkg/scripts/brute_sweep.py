#!/usr/bin/env python3
"""Exhaustive finite-field tallies for every Hessenberg function of a given
size, as one JSON document per (h, p) pair."""

import argparse
import json
import sys
import time

from nilcount import fforacle, hessenberg


def run(n, primes, max_free):
    for h in hessenberg.enumerate_hessenberg(n):
        for p in primes:
            start = time.monotonic()
            try:
                tallies = fforacle.tally_ideal(h, p, max_free)
            except fforacle.BudgetError as exc:
                print(json.dumps({"h": list(h), "p": p, "refused": exc.required}))
                continue
            print(
                json.dumps(
                    {
                        "h": list(h),
                        "p": p,
                        "tallies": [
                            {"mu": list(mu), "count": c}
                            for mu, c in sorted(tallies.items(), reverse=True)
                        ],
                        "elapsed_ms": int((time.monotonic() - start) * 1000),
                    }
                )
            )


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--primes", type=lambda s: tuple(int(x) for x in s.split(",")), default=(2, 3))
    parser.add_argument("--max-free", type=int, default=None)
    args = parser.parse_args()
    sys.exit(run(args.n, args.primes, args.max_free) or 0)
