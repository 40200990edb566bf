"""Batch command-line front end with machine-readable output.

Every counting and verification operation is exposed as a subcommand that
writes a single JSON document (default) or a TSV table to stdout.
Diagnostics go to stderr.  Exit status: 0 on success, 1 when a verification
subcommand finds a failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import asw, checks, d4, euler, gf, h3
from .d4 import SparseTPoly
from .errors import RamcountError
from .witt import WittVector

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# input grammar
# ---------------------------------------------------------------------------
#   group  := exponent ("," exponent)*          e.g. "2,1" for Z/p^2 x Z/p
#   terms  := term ("," term)*                  empty string allowed
#   term   := INDEX ":" coeff
#   coeff  := part ("|" part)*                  one part per group factor
#   part   := comp (";" comp)*                  one component per Witt slot
#   comp   := base-p digits, constant digit first, field degree many
# ---------------------------------------------------------------------------

def parse_group(text: str, p: int) -> asw.GroupShape:
    try:
        exponents = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad group {text!r}")
    return asw.GroupShape(p, exponents)


def parse_cocycle(text: str, shape: asw.GroupShape,
                  field: gf.FieldDescriptor) -> asw.ReducedCocycle:
    entries: dict[int, asw.GroupWittElement] = {}
    if text.strip():
        for chunk in text.split(","):
            index_text, _, coeff_text = chunk.partition(":")
            index = int(index_text)
            parts = coeff_text.split("|")
            if len(parts) != shape.rank:
                raise ValueError(
                    f"term {chunk!r} needs {shape.rank} factor part(s)")
            vectors = []
            for part, exponent in zip(parts, shape.exponents):
                comps = part.split(";")
                if len(comps) != exponent:
                    raise ValueError(
                        f"part {part!r} needs {exponent} Witt component(s)")
                vectors.append(WittVector(
                    field, tuple(field.from_digits(c) for c in comps)))
            entries[index] = asw.GroupWittElement(shape, field, tuple(vectors))
    return asw.make_cocycle(shape, field, entries)


def parse_tpoly(text: str, field: gf.FieldDescriptor) -> SparseTPoly:
    terms = {}
    if text.strip():
        for chunk in text.split(","):
            exp_text, _, coeff_text = chunk.partition(":")
            terms[int(exp_text)] = field.from_digits(coeff_text)
    return SparseTPoly.from_terms(field, terms)


def _fraction_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


# ---------------------------------------------------------------------------
# handlers: each returns (result_dict, exit_code)
# ---------------------------------------------------------------------------

def _field(args) -> gf.FieldDescriptor:
    return gf.field_for_order(args.q, p=getattr(args, "p", None))


def cmd_lj(args):
    field = gf.field_for_order(args.q, p=args.p)
    shape = parse_group(args.group, args.p)
    m = parse_cocycle(args.terms, shape, field)
    return {"last_jump": asw.last_jump(m)}, 0


def cmd_disc(args):
    field = gf.field_for_order(args.q, p=args.p)
    shape = parse_group(args.group, args.p)
    m = parse_cocycle(args.terms, shape, field)
    return {"discriminant_exponent": asw.discriminant_exponent(m)}, 0


def cmd_count_abelian(args):
    shape = parse_group(args.group, args.p)
    count = asw.count_by_last_jump(shape, args.q, args.v, args.mode,
                                   budget=args.budget, threads=args.threads)
    return {"count": count, "mode": args.mode}, 0


def cmd_minlift(args):
    field = gf.field_for_order(args.q, p=2)
    a = parse_tpoly(args.a, field)
    c = parse_tpoly(args.c, field)
    return {"min_lift_jump": d4.min_lift_jump(a, c)}, 0


def cmd_lift_dist(args):
    field = gf.field_for_order(args.q, p=2)
    a = parse_tpoly(args.a, field)
    c = parse_tpoly(args.c, field)
    dist = d4.lift_jump_distribution(a, c, args.v_max)
    rows = [{"jump": v, "count": n} for v, n in dist.counts]
    return {"min_lift_jump": dist.minlift, "rows": rows}, 0


def cmd_urtwist_check(args):
    field = gf.field_for_order(args.q, p=2)
    a = parse_tpoly(args.a, field)
    c = parse_tpoly(args.c, field)
    report = d4.unramified_twist_report(a, c, args.v_max)
    rows = []
    for cmp in report.comparisons:
        rows.append({
            "alpha": field.digits(cmp.alpha),
            "gamma": field.digits(cmp.gamma),
            "closed_form_equal": cmp.closed_form_equal,
            "enumerated_equal": ("n/a" if cmp.enumerated_equal is None
                                 else cmp.enumerated_equal),
        })
    return ({"all_equal": report.all_equal, "rows": rows},
            0 if report.all_equal else 1)


def cmd_count_minlift(args):
    count = d4.count_min_lift(args.q, args.v, args.mode,
                              budget=args.budget, threads=args.threads)
    return {"count": count, "mode": args.mode}, 0


def cmd_count_d4(args):
    return {"count_le": d4.count_d4_le(args.q, args.v)}, 0


def cmd_local_a(args):
    return {"coefficient": d4.count_d4_exact(args.q, args.v)}, 0


def cmd_census(args):
    census = euler.place_census(args.q, args.max_degree)
    rows = [{"degree": d, "places": n} for d, n in census.counts]
    return {"q": args.q, "rows": rows}, 0


def cmd_global_series(args):
    if args.group:
        shape = parse_group(args.group, args.p)
        series = euler.abelian_global_series(shape, args.q, args.x_max,
                                             budget=args.budget)
    else:
        series = euler.d4_global_series(args.q, args.x_max)
    rows = [{"x": x, "coefficient": c}
            for x, c in enumerate(series.coefficients)]
    return {"q": args.q, "rows": rows}, 0


def cmd_growth(args):
    table = euler.growth_table(args.q, args.x_max)
    rows = []
    for row in table.rows:
        rows.append({
            "x": row.x,
            "count": row.count,
            "ratio": _fraction_str(row.ratio),
            "relative_change": ("n/a" if row.relative_change is None
                                else _fraction_str(row.relative_change)),
        })
    return {"stabilises": euler.growth_stabilises(table), "rows": rows}, 0


def cmd_counterexample(args):
    report = h3.counterexample_report(args.p, args.q)
    return {
        "p": report.p,
        "q": report.q,
        "local_count": report.local_count,
        "global_count": report.global_count,
        "discrepancy_ratio": _fraction_str(report.discrepancy_ratio),
        "local_breakdown": dict(report.local_breakdown),
        "global_breakdown": dict(report.global_breakdown),
    }, 0


def cmd_verify(args):
    names = args.suite if args.suite else checks.all_suite_names()
    results = checks.run_suites(names, seed=args.seed)
    rows = [{"check": r.name, "status": "pass" if r.passed else "fail",
             "detail": r.detail} for r in results]
    ok = all(r.passed for r in results)
    return {"all_passed": ok, "rows": rows}, 0 if ok else 1


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_json(document: dict) -> str:
    return json.dumps(document, indent=2)


def render_tsv(document: dict) -> str:
    lines = []
    result = document["result"]
    scalars = {k: v for k, v in result.items() if k != "rows"}
    for key, value in scalars.items():
        if isinstance(value, dict):
            for k2, v2 in value.items():
                lines.append(f"{key}.{k2}\t{v2}")
        else:
            lines.append(f"{key}\t{value}")
    rows = result.get("rows")
    if rows:
        header = list(rows[0])
        lines.append("\t".join(header))
        for row in rows:
            lines.append("\t".join(str(row[k]) for k in header))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramcount",
        description="Exact counts of wildly ramified extensions by their "
                    "ramification invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, q=True, prime=False, budget=False, threads=False):
        if prime:
            p.add_argument("--p", type=int, required=True, help="characteristic")
        if q:
            p.add_argument("--q", type=int, required=True,
                           help="field cardinality (a prime power)")
        if budget:
            p.add_argument("--budget", type=int, default=asw.DEFAULT_BUDGET)
        if threads:
            p.add_argument("--threads", type=int, default=1)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--out", help="also write the report to this file")

    p = sub.add_parser("lj", help="last jump of an abelian datum")
    common(p, prime=True)
    p.add_argument("--group", required=True, help="exponent list, e.g. 2,1")
    p.add_argument("--terms", required=True, help="index:coefficient terms")
    p.set_defaults(handler=cmd_lj)

    p = sub.add_parser("disc", help="discriminant exponent of an abelian datum")
    common(p, prime=True)
    p.add_argument("--group", required=True)
    p.add_argument("--terms", required=True)
    p.set_defaults(handler=cmd_disc)

    p = sub.add_parser("count-abelian", help="count abelian data by last jump")
    common(p, prime=True, budget=True, threads=True)
    p.add_argument("--group", required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--mode", choices=("homomorphisms", "inertial_types"),
                   default="homomorphisms")
    p.set_defaults(handler=cmd_count_abelian)

    p = sub.add_parser("minlift", help="smallest lift jump of a dihedral reduction")
    common(p)
    p.add_argument("--a", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(handler=cmd_minlift)

    p = sub.add_parser("lift-dist", help="lift counts by last jump")
    common(p)
    p.add_argument("--a", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--v-max", type=int, required=True)
    p.set_defaults(handler=cmd_lift_dist)

    p = sub.add_parser("urtwist-check",
                       help="compare lift distributions across constant twists")
    common(p)
    p.add_argument("--a", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--v-max", type=int, required=True)
    p.set_defaults(handler=cmd_urtwist_check)

    p = sub.add_parser("count-minlift",
                       help="quarter-count of reductions by smallest lift jump")
    common(p, budget=True, threads=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--mode", choices=("closed_form", "enumeration"),
                   default="closed_form")
    p.set_defaults(handler=cmd_count_minlift)

    p = sub.add_parser("count-d4",
                       help="eighth-count of dihedral data with jump <= v")
    common(p)
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(handler=cmd_count_d4)

    p = sub.add_parser("local-a",
                       help="eighth-count with jump exactly v (polynomial in q)")
    common(p)
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(handler=cmd_local_a)

    p = sub.add_parser("census", help="number of places by degree")
    common(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("global-series",
                       help="Euler-product coefficients of the global count")
    common(p, budget=True)
    p.add_argument("--x-max", type=int, required=True)
    p.add_argument("--group", default=None,
                   help="abelian exponent list; omit for the dihedral series")
    p.add_argument("--p", type=int, default=2,
                   help="characteristic (needed with --group)")
    p.set_defaults(handler=cmd_global_series)

    p = sub.add_parser("growth", help="growth ratios of the dihedral count")
    common(p)
    p.add_argument("--x-max", type=int, required=True)
    p.set_defaults(handler=cmd_growth)

    p = sub.add_parser("counterexample",
                       help="local vs global Heisenberg counts at a degree-p place")
    common(p, prime=True)
    p.set_defaults(handler=cmd_counterexample)

    p = sub.add_parser("verify", help="run invariant and acceptance suites")
    common(p, q=False)
    p.add_argument("--suite", action="append",
                   choices=checks.all_suite_names(),
                   help="restrict to a suite (repeatable); default: all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, status = args.handler(args)
    except RamcountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    document = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "result": result,
    }
    text = render_json(document) if args.format == "json" else render_tsv(document)
    print(text)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
