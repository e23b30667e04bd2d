#!/usr/bin/env python3
"""Line orbits and crossing tables for a handful of shift parameters.

Run from the repository root after an editable install:

    python3 demos/orbit_tables.py
"""

from tilecohom.lineorbits import candidate_lines, orbit_partition, reduce_gamma
from tilecohom.pointorbits import P_MAX, P_MIN, build_tables
from tilecohom.report import parse_gamma

GAMMAS = ["0,0", "0,1/2", "√3/3,0", "1/2,√3/2", "1/5,1/7"]


def show(text):
    gamma = reduce_gamma(parse_gamma(text))
    orbits = orbit_partition(candidate_lines(gamma))
    tables = build_tables(orbits)
    counts = orbits.per_direction()
    print(f"gamma = ({gamma.g1}, {gamma.g2})")
    print(f"  L1 = {orbits.L1}  per direction: "
          + " ".join(str(counts[d]) for d in range(6)))
    header = " | ".join(f"p={p}" for p in range(P_MIN, P_MAX + 1))
    print(f"  line types (n | dir | {header} | total):")
    for row in tables.types:
        by_p = " | ".join(f"{c:3d}" for c in row.by_p)
        dir_label = row.parity or "-"
        print(f"    {row.n:2d} | {dir_label:>3} | {by_p} | {row.total:3d}")
    by_p = " | ".join(f"{c:3d}" for c in tables.L0_by_p)
    print(f"  point classes L0 = {tables.L0}  by multiplicity: {by_p}")
    print(f"  sum over lines of L0^a = {tables.sum_L0alpha}   e = {tables.e}")


def main():
    for k, text in enumerate(GAMMAS):
        if k:
            print()
        show(text)


if __name__ == "__main__":
    main()
