#!/usr/bin/env python3
"""Cohomology rank summary for the nine worked shift parameters.

Run from the repository root after an editable install:

    python3 demos/rank_report.py

Pass any number of your own parameters instead, each written as
"g1,g2" with exact Q(√3) components:

    python3 demos/rank_report.py "1/3,0" "1/9+1/4√3,5/7"
"""

import sys

from tilecohom.report import compute, parse_gamma

WORKED_CASES = [
    "0,0",
    "0,1/2",
    "√3/3,0",
    "√3/3,√3/3",
    "√3/3,1/3",
    "0,√3/6",
    "1/2,√3/2",
    "1/2,1/2+1/2√3",
    "1/7+1/11√3,1/13+1/17√3",
]


def main(argv):
    texts = argv or WORKED_CASES
    width = max(len(t) for t in texts)
    print(f"{'gamma':<{width}} | sum L0^a | L0 | L1 | e | rk H2 | rk H1 | rk H0")
    for text in texts:
        r = compute(parse_gamma(text))
        row = (r.sum_L0alpha, r.L0, r.L1, r.e, r.h2, r.h1, r.h0)
        print(f"{text:<{width}} | " + " | ".join(str(v) for v in row))


if __name__ == "__main__":
    main(sys.argv[1:])
