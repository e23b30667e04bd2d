"""Command line front end: report, l1, tables, smith, verify-window."""

from __future__ import annotations

import argparse
import json
import sys

from .homalg import beta_matrix, rank_and_cokernel, smith
from .lineorbits import candidate_lines, orbit_partition, reduce_gamma
from .pointorbits import ConsistencyError, build_tables
from .exactfield import format_quadrat
from .report import (
    DENOMINATOR_WARN_LIMIT,
    compute,
    large_denominator,
    parse_gamma,
    render,
)
from .window import build_window, enumerate_cubes, verify_counts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilecohom",
        description="Exact cohomology rank reports for generalized 12-fold"
        " cut-and-project tilings.",
    )
    parser.add_argument(
        "--selftest",
        action="store_true",
        help="run the acceptance suite and exit",
    )
    sub = parser.add_subparsers(dest="command")
    for name, needs_gamma, has_json in (
        ("report", True, True),
        ("l1", True, True),
        ("tables", True, True),
        ("smith", False, True),
        ("verify-window", False, True),
    ):
        p = sub.add_parser(name)
        if needs_gamma:
            p.add_argument(
                "--gamma",
                required=True,
                metavar='"<q>,<q>"',
                help="gamma as two Q(√3) values, each written p/q+r/s√3",
            )
        if has_json:
            p.add_argument("--json", action="store_true", dest="as_json")
        p.add_argument("--quiet", action="store_true")
    return parser


def _load_gamma(args, out_err):
    raw = parse_gamma(args.gamma)
    gamma = reduce_gamma(raw)
    if large_denominator(gamma) and not args.quiet:
        print(
            f"warning: gamma denominator exceeds {DENOMINATOR_WARN_LIMIT};"
            " exact arithmetic continues but expect slow reductions",
            file=out_err,
        )
    return gamma


def _cmd_report(args, out, out_err) -> int:
    gamma = _load_gamma(args, out_err)
    result = compute(gamma.pair())
    out.write(render(result, "json" if args.as_json else "text").decode("utf-8"))
    return 0


def _cmd_l1(args, out, out_err) -> int:
    gamma = _load_gamma(args, out_err)
    orbits = orbit_partition(candidate_lines(gamma))
    counts = orbits.per_direction()
    reps = {
        d: [f"({o.representative.anchor.u}, {o.representative.anchor.v})"
            for o in orbits.orbits_for(d)]
        for d in range(6)
    }
    if args.as_json:
        payload = {
            "schema": 1,
            "gamma": [format_quadrat(gamma.g1), format_quadrat(gamma.g2)],
            "L1": orbits.L1,
            "per_direction": [counts[d] for d in range(6)],
            "representatives": {str(d): reps[d] for d in range(6)},
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":"),
                         ensure_ascii=False), file=out)
        return 0
    print(f"gamma = ({gamma.g1}, {gamma.g2})", file=out)
    print(f"L1 = {orbits.L1}", file=out)
    print("per direction: " + " ".join(str(counts[d]) for d in range(6)), file=out)
    for d in range(6):
        print(f"x^{d}: " + ", ".join(reps[d]), file=out)
    return 0


def _cmd_tables(args, out, out_err) -> int:
    gamma = _load_gamma(args, out_err)
    tables = build_tables(orbit_partition(candidate_lines(gamma)))
    if args.as_json:
        payload = {
            "schema": 1,
            "gamma": [format_quadrat(gamma.g1), format_quadrat(gamma.g2)],
            "line_types": [
                {"n": t.n, "dir": t.parity, "by_p": list(t.by_p),
                 "total": t.total}
                for t in tables.types
            ],
            "L0_by_p": list(tables.L0_by_p),
            "L0": tables.L0,
            "sum_L0alpha": tables.sum_L0alpha,
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":"),
                         ensure_ascii=False), file=out)
        return 0
    header = ["n", "dir", "p=2", "p=3", "p=4", "p=5", "p=6", "total"]
    rows = [
        [str(t.n), t.parity, *[str(c) for c in t.by_p], str(t.total)]
        for t in tables.types
    ]
    rows.append(
        ["L0", "", *[str(c) for c in tables.L0_by_p], str(tables.L0)]
    )
    widths = [max(len(h), *(len(r[k]) for r in rows)) for k, h in enumerate(header)]
    print(" | ".join(h.rjust(w) for h, w in zip(header, widths)), file=out)
    for r in rows:
        print(" | ".join(c.rjust(w) for c, w in zip(r, widths)), file=out)
    print(f"sum L0^a = {tables.sum_L0alpha}   L0 = {tables.L0}", file=out)
    return 0


def _cmd_smith(args, out, out_err) -> int:
    matrix = beta_matrix()
    form = smith(matrix)
    info = rank_and_cokernel()
    if args.as_json:
        payload = {
            "schema": 1,
            "beta": [list(row) for row in matrix],
            "factors": list(form.factors),
            "R": info["R"],
            "torsion_free": info["torsion_free"],
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")),
              file=out)
        return 0
    print("beta =", file=out)
    for row in matrix:
        print("  " + " ".join(f"{v:3d}" for v in row), file=out)
    print("invariant factors: " + " ".join(str(f) for f in form.factors),
          file=out)
    print(f"R = {info['R']}", file=out)
    print(f"torsion-free: {'yes' if info['torsion_free'] else 'NO'}", file=out)
    return 0


def _cmd_verify_window(args, out, out_err) -> int:
    result = verify_counts()
    if args.as_json:
        window = build_window()
        payload = {
            "schema": 1,
            **{k: v for k, v in result.items()
               if k not in ("valency_histogram", "cubes_per_vertex")},
            "valency_histogram": {str(k): v for k, v in
                                  result["valency_histogram"].items()},
            "cubes_per_vertex": {str(k): v for k, v in
                                 result["cubes_per_vertex"].items()},
            "vertices": sorted(
                [[fp[0], fp[1], format_quadrat(p.u), format_quadrat(p.v)]
                 for fp, p in window.vertex_set]
            ),
            "cubes": [
                {"ident": c.ident, "kind": c.kind, "base": list(c.base),
                 "codes": list(c.codes)}
                for c in enumerate_cubes()
            ],
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":"),
                         ensure_ascii=False), file=out)
    else:
        for key in ("vertices", "edges", "faces", "cubes", "long_cubes"):
            print(f"{key}: {result[key]}", file=out)
        print("valency histogram: " + ", ".join(
            f"{k}:{v}" for k, v in sorted(result["valency_histogram"].items())),
            file=out)
        print("cubes per vertex: " + ", ".join(
            f"{k}:{sorted(v)}" for k, v in
            sorted(result["cubes_per_vertex"].items())), file=out)
        for key in ("edge_length_sq_uniform", "corners_on_window",
                    "boundary_facets_independent", "sublattice", "ok"):
            print(f"{key}: {result[key]}", file=out)
    return 0 if result["ok"] else 3


_COMMANDS = {
    "report": _cmd_report,
    "l1": _cmd_l1,
    "tables": _cmd_tables,
    "smith": _cmd_smith,
    "verify-window": _cmd_verify_window,
}


def main(argv=None, out=None, out_err=None) -> int:
    out = out if out is not None else sys.stdout
    out_err = out_err if out_err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.selftest:
        from .accept import run_all

        return 0 if run_all(stream=out) else 3
    if args.command is None:
        parser.print_usage(out_err)
        return 2
    try:
        return _COMMANDS[args.command](args, out, out_err)
    except ValueError as exc:
        print(f"error: {exc}", file=out_err)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=out_err)
        return 3


if __name__ == "__main__":
    sys.exit(main())
