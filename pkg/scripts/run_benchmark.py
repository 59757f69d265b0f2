#!/usr/bin/env python3
"""Run the default benchmark protocol: one million lines per run, ten
recorded repetitions over the standard space and window, markdown report
to stdout.  Any extra arguments are passed straight to the bench
subcommand, e.g. ``--lines 10000000 --format csv --out runs.csv``."""

import sys

from clipbench.cli import main

if __name__ == "__main__":
    sys.exit(main(["bench", *sys.argv[1:]]))
