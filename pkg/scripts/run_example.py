#!/usr/bin/env python3
"""Reproduce the running 1D example end to end.

Writes kernel.csv, transfer.csv, sweep.csv (N = 16..1024) plus scalar
reports into the output directory, then runs the verification suite.
"""

import argparse
import subprocess
import sys


def run(args):
    print("+", " ".join(args))
    subprocess.run(args, check=True)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results", help="output directory")
    opts = parser.parse_args()

    base = [sys.executable, "-m", "dogblock.cli"]
    run(base + ["kernel", "--out", opts.out])
    run(base + ["spectrum", "--out", opts.out])
    sweep = base + ["sweep", "--out", opts.out]
    for k in range(4, 11):
        sweep += ["--n-points", str(2**k)]
    run(sweep)
    run(base + ["verify"])


if __name__ == "__main__":
    main()
