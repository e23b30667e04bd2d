#!/usr/bin/env python3
"""Walk through the acceptance window: census, then two example slices.

Run from the repository root after an editable install:

    python3 demos/window_tour.py
"""

from fractions import Fraction

from tilecohom.exactfield import QuadRat
from tilecohom.window import enumerate_cubes, slice_detailed, verify_counts


def q(a, b=0):
    return QuadRat(Fraction(a), Fraction(b))


def show_census():
    counts = verify_counts()
    print("window census")
    for key in ("vertices", "edges", "faces", "cubes", "long_cubes"):
        print(f"  {key}: {counts[key]}")
    print(f"  valency histogram: {counts['valency_histogram']}")
    print(f"  cubes per vertex by valency: {counts['cubes_per_vertex']}")
    print(f"  all structural checks ok: {counts['ok']}")


def show_slice(label, gamma):
    lines, incidences = slice_detailed(gamma)
    per_direction = [0] * 6
    for line in lines:
        per_direction[line.direction] += 1
    print(f"slice at gamma = {label}")
    print(f"  singular lines: {len(lines)}  (per direction {per_direction})")
    print(f"  (cube, translate) incidences: {len(incidences)}")
    cubes = {cube.ident: cube for cube in enumerate_cubes()}
    longs = sorted({i for i, _ in incidences if cubes[i].kind == "long"})
    if longs:
        codes = ", ".join(str(cubes[i].codes) for i in longs)
        print(f"  long cubes cut: {len(longs)} with grid codes {codes}")
    else:
        print("  long cubes cut: none")


def main():
    show_census()
    print()
    show_slice("(1/5, 1/7)", (q(Fraction(1, 5)), q(Fraction(1, 7))))
    print()
    show_slice("(0, 1/5)", (q(0), q(Fraction(1, 5))))


if __name__ == "__main__":
    main()
