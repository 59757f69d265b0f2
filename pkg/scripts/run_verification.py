#!/usr/bin/env python3
"""Sweep all seven clippers against the exact rational oracle at full
scale (one million seeded cases plus the adversarial suite).  Extra
arguments pass through to the verify subcommand, e.g. ``--cases 50000
--seed 9``.  Exits nonzero on any mismatch."""

import sys

from clipbench.cli import main

if __name__ == "__main__":
    args = sys.argv[1:]
    if not args:
        args = ["--cases", "1000000", "--seed", "1"]
    sys.exit(main(["verify", *args]))
