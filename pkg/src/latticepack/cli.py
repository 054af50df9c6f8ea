"""Command-line front end.

Exit codes: 0 = verified/success, 1 = verification failure (with report),
2 = usage or input error.  All numeric output is exact; rationals print as
p/q.  Long option names only.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .bounds import (corollary_bound, distance_chromatic_flags, reproduce_tables,
                     tables_csv, tables_text, witness_coloring)
from .coloring import (coloring_from_text, coloring_to_text, domain_dump,
                       verify_grid_coloring, verify_s_coloring)
from .density import (SequenceSpec, area_formula, color_count_lower_bound,
                      feasibility_certificate)
from .lattice import Lattice, ball, distance, sphere
from .packings import PackingSpec, Sublattice, verify_partition
from .pattern import (derive_33_coloring, load_pattern, pattern_grid_coloring,
                      pattern_pipeline)
from .plans import get_plan, plan_catalog
from .render import to_ppm, to_svg
from .schemes import export_catalog_text, get_scheme, scheme_catalog

OK, FAIL, USAGE = 0, 1, 2


def _vertex(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(",")
        return (int(a), int(b))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None


def _lattice(text: str) -> Lattice:
    try:
        return Lattice(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown lattice {text!r} (hex, square, tri)") from None


def _rational(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _plan_name(text: str) -> str:
    """Accept both 'hex-3-3' and '(3,3)-hex'."""
    if text.startswith("("):
        body, _, kind = text.partition(")-")
        d, n = body.strip("()").split(",")
        return f"{kind}-{int(d)}-{int(n)}"
    return text


def cmd_distance(args) -> int:
    print(distance(args.lattice, args.frm, args.to))
    return OK


def cmd_ball(args) -> int:
    pts = sphere(args.lattice, args.center, args.radius) if args.sphere \
        else ball(args.lattice, args.center, args.radius)
    print(len(pts))
    if args.points:
        for p in sorted(pts):
            print(f"{p[0]},{p[1]}")
    return OK


def cmd_karea(args) -> int:
    print(_rational(area_formula(args.lattice, args.k)))
    return OK


def cmd_verify_packing(args) -> int:
    spec = PackingSpec(args.lattice, Sublattice(args.g1, args.g2), args.offset)
    cert = spec.min_distance()
    print(cert.report())
    if args.radius is not None:
        verdict = cert.is_packing(args.radius)
        print(f"{args.radius}-packing: {'yes' if verdict else 'NO'}")
        return OK if verdict else FAIL
    return OK


def cmd_verify_scheme(args) -> int:
    if args.list:
        for sd in scheme_catalog():
            print(sd.name)
        return OK
    if not args.name:
        print("error: --name required (or --list)", file=sys.stderr)
        return USAGE
    try:
        sd = get_scheme(args.name)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    dec = sd.instantiate(args.k, args.m)
    report = verify_partition(dec, args.window)
    radius_problems = dec.certify_radii()
    print(report)
    for p in radius_problems:
        print("  " + p)
    if report.ok and not radius_problems:
        print(f"OK: {len(dec.children)} children, claimed radius "
              f"{sd.claimed_radius(args.k, args.m)}")
        return OK
    return FAIL


def _resolve_plan_coloring(name: str):
    name = _plan_name(name)
    if name == "square-3-3":
        _, rep2, derived = pattern_pipeline()
        return derived, rep2
    plan = get_plan(name)
    coloring = plan.build()
    return coloring, verify_s_coloring(coloring)


def cmd_verify_plan(args) -> int:
    if args.list:
        for p in plan_catalog():
            print(f"{p.name}: {p.claimed_colors} colors")
        print("square-3-3: 33 colors (pattern-derived)")
        return OK
    try:
        if args.file:
            with open(args.file, "r", encoding="utf-8") as fh:
                coloring = coloring_from_text(fh.read())
            report = verify_s_coloring(coloring)
        elif args.plan:
            coloring, report = _resolve_plan_coloring(args.plan)
        else:
            print("error: --plan or --file required (or --list)", file=sys.stderr)
            return USAGE
    except (KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        # A structurally valid file whose coloring fails verification is a
        # verification failure; malformed input is a usage error.
        print(f"error: {exc}", file=sys.stderr)
        return FAIL if "rejected" in str(exc) else USAGE
    print(report)
    if report.ok:
        print(f"OK: {coloring.color_count} colors")
        return OK
    return FAIL


def cmd_feasibility(args) -> int:
    cert = feasibility_certificate(args.lattice, SequenceSpec.dn(args.d, args.n),
                                   args.horizon)
    print(cert.report())
    if cert.infeasible:
        print("INFEASIBLE (chi = infinity)")
    else:
        print("INCONCLUSIVE")
    return OK


def cmd_lower_bound(args) -> int:
    spec = SequenceSpec.dn(args.d, args.n)
    try:
        print(color_count_lower_bound(args.lattice, spec, args.cap))
        return OK
    except RuntimeError as exc:
        print(f"no finite lower bound at cap {args.cap}: {exc}", file=sys.stderr)
        return FAIL


def cmd_corollary(args) -> int:
    values = [int(v) for v in args.values.split(",")]
    try:
        witness = corollary_bound(args.lattice, values)
    except ValueError as exc:
        print(f"corollary inapplicable: {exc}", file=sys.stderr)
        return USAGE
    if witness is None:
        print("no witness within the given prefix")
        return FAIL
    print(witness.describe())
    if args.validate:
        coloring = witness_coloring(witness)
        print(f"constructive check OK: coloring with {coloring.color_count} colors "
              f"(bound {witness.bound})")
    return OK


def cmd_tables(args) -> int:
    if args.jobs > 1:
        # Per-lattice chunks; chunk order is fixed, so output is
        # independent of the worker count.
        names = ["hex", "square", "tri"]
        with ProcessPoolExecutor(max_workers=min(args.jobs, 3)) as pool:
            chunks = pool.map(_tables_chunk, names, [args.horizon] * 3)
            results = [r for chunk in chunks for r in chunk]
    else:
        results = reproduce_tables(args.horizon)
    print(tables_text(results))
    for (kind, d) in ((Lattice.HEX, 2),):
        flag = distance_chromatic_flags(kind, d)
        if flag:
            print(f"FLAG {kind.value} d={d}: {flag}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(tables_csv(results))
        print(f"csv written to {args.csv}")
    return OK if all(r.match for r in results) else FAIL


def _tables_chunk(kind_name: str, horizon: int):
    return reproduce_tables(horizon, kinds=(Lattice(kind_name),))


def cmd_pattern_verify(args) -> int:
    try:
        grid = load_pattern(args.file)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    report = verify_grid_coloring(pattern_grid_coloring(grid))
    print(report)
    return OK if report.ok else FAIL


def cmd_derive_33(args) -> int:
    try:
        rep1, rep2, derived = pattern_pipeline(args.file)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    print("base pattern as (1,...,17):")
    print(rep1)
    print("derived (3,3) coloring:")
    print(rep2)
    census = ", ".join(f"{v}:{c}" for v, c in sorted(derived.census().items()))
    print(f"colors {derived.color_count}; census {census}")
    return OK if rep1.ok and rep2.ok else FAIL


def cmd_render(args) -> int:
    try:
        if args.pattern:
            coloring = pattern_grid_coloring(load_pattern(args.file))
        elif args.derived:
            _, _, coloring = pattern_pipeline(args.file)
        elif args.plan:
            coloring, report = _resolve_plan_coloring(args.plan)
            if not report.ok:
                print(report)
                return FAIL
        else:
            print("error: --plan, --pattern or --derived required", file=sys.stderr)
            return USAGE
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    text = to_svg(coloring, args.width, args.height) if args.format == "svg" \
        else to_ppm(coloring, args.width, args.height)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return USAGE
    print(f"wrote {args.out}")
    return OK


def cmd_export_plan(args) -> int:
    import os

    if args.schemes:
        with open(args.schemes, "w", encoding="utf-8") as fh:
            fh.write(export_catalog_text())
        print(f"scheme catalog written to {args.schemes}")
        return OK
    if args.all:
        os.makedirs(args.all, exist_ok=True)
        for plan in plan_catalog():
            coloring = plan.build()
            path = os.path.join(args.all, f"{plan.name}.plan")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(coloring_to_text(coloring))
        print(f"{len(plan_catalog())} plan files written to {args.all}")
        return OK
    if not args.plan:
        print("error: --plan, --all or --schemes required", file=sys.stderr)
        return USAGE
    try:
        coloring, report = _resolve_plan_coloring(args.plan)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    if args.domain:
        text = domain_dump(coloring, args.width, args.height)
        with open(args.domain, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"fundamental domain dump written to {args.domain}")
        return OK
    if not hasattr(coloring, "classes"):
        print("error: pattern-derived colorings have no plan-file form "
              "(use --domain for a per-vertex dump)", file=sys.stderr)
        return USAGE
    text = coloring_to_text(coloring)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"plan written to {args.out}")
    else:
        print(text, end="")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticepack",
        description="verified packings and S-packing colorings of three lattices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="closed-form vertex distance")
    p.add_argument("--lattice", type=_lattice, required=True)
    p.add_argument("--from", dest="frm", type=_vertex, required=True)
    p.add_argument("--to", type=_vertex, required=True)
    p.set_defaults(fn=cmd_distance)

    p = sub.add_parser("ball", help="ball or sphere size around a vertex")
    p.add_argument("--lattice", type=_lattice, required=True)
    p.add_argument("--center", type=_vertex, default=(0, 0))
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--sphere", action="store_true")
    p.add_argument("--points", action="store_true")
    p.set_defaults(fn=cmd_ball)

    p = sub.add_parser("karea", help="area of one vertex of a k-packing")
    p.add_argument("--lattice", type=_lattice, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_karea)

    p = sub.add_parser("verify-packing", help="exhaustive minimum-distance certificate")
    p.add_argument("--lattice", type=_lattice, required=True)
    p.add_argument("--g1", type=_vertex, required=True)
    p.add_argument("--g2", type=_vertex, required=True)
    p.add_argument("--offset", type=_vertex, default=(0, 0))
    p.add_argument("--radius", type=int)
    p.set_defaults(fn=cmd_verify_packing)

    p = sub.add_parser("verify-scheme", help="verify a catalog subdivision scheme")
    p.add_argument("--name")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--window", type=int)
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_verify_scheme)

    p = sub.add_parser("verify-plan", help="build and verify a coloring plan")
    p.add_argument("--plan")
    p.add_argument("--file")
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_verify_plan)

    p = sub.add_parser("feasibility", help="density feasibility certificate")
    p.add_argument("--lattice", type=_lattice, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--horizon", type=int, default=10_000)
    p.set_defaults(fn=cmd_feasibility)

    p = sub.add_parser("lower-bound", help="density lower bound on the color count")
    p.add_argument("--lattice", type=_lattice, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(fn=cmd_lower_bound)

    p = sub.add_parser("corollary", help="witness search for the subdivision bound")
    p.add_argument("--lattice", type=_lattice, required=True)
    p.add_argument("--values", required=True, help="comma-separated sequence prefix")
    p.add_argument("--validate", action="store_true",
                   help="also build and verify the witness coloring")
    p.set_defaults(fn=cmd_corollary)

    p = sub.add_parser("tables", help="reproduce the three bound tables")
    p.add_argument("--horizon", type=int, default=10_000)
    p.add_argument("--csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("pattern-verify", help="verify the 24x24 pattern file")
    p.add_argument("--file")
    p.set_defaults(fn=cmd_pattern_verify)

    p = sub.add_parser("derive-33", help="derive and verify the 33-color coloring")
    p.add_argument("--file")
    p.set_defaults(fn=cmd_derive_33)

    p = sub.add_parser("render", help="render a coloring to SVG or PPM")
    p.add_argument("--plan")
    p.add_argument("--pattern", action="store_true")
    p.add_argument("--derived", action="store_true")
    p.add_argument("--file", help="pattern file override")
    p.add_argument("--format", choices=("svg", "ppm"), default="svg")
    p.add_argument("--width", type=int, default=48)
    p.add_argument("--height", type=int, default=48)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("export-plan", help="write plan files or the scheme catalog")
    p.add_argument("--plan")
    p.add_argument("--out")
    p.add_argument("--all", help="write every catalog plan into this directory")
    p.add_argument("--schemes", help="write the scheme catalog to this path")
    p.add_argument("--domain", help="write a fundamental-domain dump to this path")
    p.add_argument("--width", type=int, help="domain dump width override")
    p.add_argument("--height", type=int, help="domain dump height override")
    p.set_defaults(fn=cmd_export_plan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BrokenPipeError:
        return OK


if __name__ == "__main__":
    sys.exit(main())
