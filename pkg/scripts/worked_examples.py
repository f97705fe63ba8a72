#!/usr/bin/env python3
"""Run the bundled showcase inputs end to end and print their reports.

Covers the four CLI commands on the two interesting cases shipped with
the repository: a three-dimensional semigroup that is regular in
codimension 2 but not normal, and the exponent tuple
(1443, 37, 21, 91), whose Rees algebra holds R_2, fails R_3, and has a
degree-two cone point missing from the semigroup.
"""

import pathlib
import sys

from serrecheck.cli import main

REPO = pathlib.Path(__file__).resolve().parent.parent
NONNORMAL = str(REPO / "data" / "r2_nonnormal.json")

RUNS = [
    ["facets", "--input", NONNORMAL],
    ["serre", "--input", NONNORMAL, "--l", "2"],
    ["serre", "--input", NONNORMAL, "--l", "3"],
    ["normality", "--input", NONNORMAL, "--budget", "3"],
    ["rees", "--lambda", "1443,37,21,91", "--r", "2"],
    ["rees", "--lambda", "1443,37,21,91", "--r", "3"],
    ["normality", "--lambda", "1443,37,21,91", "--probe", "2,36,1,89,2"],
]


if __name__ == "__main__":
    for argv in RUNS:
        print(f"$ serrecheck {' '.join(argv)}", flush=True)
        code = main(argv)
        if code != 0:
            sys.exit(code)
        print()
