"""Command-line interface.

Exit status: 0 success, 2 fixture or parse failure, 3 value mismatch,
4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cosets import todd_coxeter
from .errors import CapExceeded, CosetLimitExceeded, CosetlabError, NotASubgroup, ParseError
from .formats import parse_perm_group, parse_presentation, parse_words
from .fp import abelian_invariants
from .gassmann import gassmann_equivalent, intersection_profile
from .low_index import class_size, index_histogram, low_index_classes
from .pipeline import EXIT_CAP, EXIT_FIXTURE, EXIT_MISMATCH, EXIT_OK, run_pipeline_353
from .zlinalg import IntMatrix, smith_normal_form


def _read(path):
    return Path(path).read_text()


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=False))


def cmd_reproduce(args):
    images = _read(args.images) if args.images else None
    report = run_pipeline_353(images, budget_minutes=args.budget_minutes)
    if args.json:
        _emit(report.to_json_dict(timings=args.timings))
    else:
        for s in report.stages:
            status = "PASS" if s.passed else "FAIL"
            print(f"{status}  {s.name}: expected {s.expected}, got {s.actual}")
        if args.timings:
            for name, ms in report.timings.items():
                print(f"  {name}: {ms:.1f} ms")
        print("all stages passed" if report.passed else f"failed (exit {report.exit_code})")
    return report.exit_code


def cmd_gassmann(args):
    g = parse_perm_group(_read(args.group))
    h1 = parse_perm_group(_read(args.sub1), g.degree)
    h2 = parse_perm_group(_read(args.sub2), g.degree)
    verdict = gassmann_equivalent(g, h1, h2)
    p1, p2 = intersection_profile(g, h1), intersection_profile(g, h2)
    if args.json:
        _emit({"equivalent": verdict.equivalent, "witness_class": verdict.witness,
               "witness_descriptor": None if verdict.descriptor is None
               else list(verdict.descriptor),
               "profile_1": p1.as_dict(), "profile_2": p2.as_dict()})
    else:
        print(f"classes: {len(p1.counts)}")
        print(f"profile 1: {list(p1.counts)}")
        print(f"profile 2: {list(p2.counts)}")
        if verdict.equivalent:
            print("rationally coset equivalent: true")
        else:
            order, size = verdict.descriptor
            print(f"rationally coset equivalent: false (class {verdict.witness + 1}, "
                  f"element order {order}, size {size})")
    return EXIT_OK


def cmd_sambale(args):
    from .sambale import sambale_report

    primes = [args.p] + ([7] if args.extended and args.p != 7 else [])
    reports = [sambale_report(p) for p in primes]
    if args.json:
        _emit([r.as_dict() for r in reports])
    else:
        for r in reports:
            print(f"p = {r.p}: |N| = {r.order_N}, |Aut(N)| = {r.order_Aut}, "
                  f"|Out(N)| = {r.order_Out}")
            for i, flag in enumerate(r.property_flags, start=1):
                print(f"  property {i}: {'true' if flag else 'false'}")
    return EXIT_OK if all(r.all_true for r in reports) else EXIT_MISMATCH


def cmd_aqi(args):
    p = parse_presentation(_read(args.presentation))
    torsion, rank = abelian_invariants(p)
    if args.json:
        _emit({"torsion": torsion, "free_rank": rank})
    else:
        print(list(torsion) + [0] * rank)
    return EXIT_OK


def cmd_low_index(args):
    p = parse_presentation(_read(args.presentation))
    tables = low_index_classes(p, args.min, args.max)
    if args.json:
        _emit({"classes": len(tables),
               "by_index": {str(k): v for k, v in index_histogram(tables).items()},
               "class_sizes": [class_size(t) for t in tables],
               "tables": [t.to_text() for t in tables] if args.tables else None})
    else:
        print(f"classes: {len(tables)}")
        for k, v in index_histogram(tables).items():
            print(f"  index {k}: {v}")
        if args.tables:
            for i, t in enumerate(tables, start=1):
                print(f"table {i}:")
                print(t.to_text(), end="")
    return EXIT_OK


def cmd_snf(args):
    m = IntMatrix.from_text(_read(args.matrix))
    d, u, v = smith_normal_form(m)
    if args.full:
        print("D:")
        print(d.to_text(), end="")
        print("U:")
        print(u.to_text(), end="")
        print("V:")
        print(v.to_text(), end="")
    else:
        print(d.diagonal())
    return EXIT_OK


def cmd_todd_coxeter(args):
    p = parse_presentation(_read(args.presentation))
    words = parse_words(_read(args.subgroup), p) if args.subgroup else []
    t = todd_coxeter(p, words, max_cosets=args.limit)
    print(f"index: {t.n_cosets}")
    if args.table:
        print(t.to_text(), end="")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="cosetlab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"cosetlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reproduce-353", help="run the golden pipeline on the embedded fixtures")
    r.add_argument("--json", action="store_true", help="print the JSON report")
    r.add_argument("--budget-minutes", type=float, default=None,
                   help="fail if the run takes longer than this")
    r.add_argument("--timings", action="store_true",
                   help="include per-stage wall times (makes output run-dependent)")
    r.add_argument("--images", metavar="FILE", default=None,
                   help="replace the three generator images (permutation file)")
    r.set_defaults(func=cmd_reproduce)

    g = sub.add_parser("gassmann-check", help="compare class intersection profiles")
    g.add_argument("--group", required=True, metavar="FILE")
    g.add_argument("--sub1", required=True, metavar="FILE")
    g.add_argument("--sub2", required=True, metavar="FILE")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gassmann)

    s = sub.add_parser("sambale-verify", help="check the Out(N) = C2 construction")
    s.add_argument("--p", type=int, default=5)
    s.add_argument("--extended", action="store_true", help="also run p = 7")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sambale)

    a = sub.add_parser("abelian-invariants", help="abelian quotient invariants")
    a.add_argument("--presentation", required=True, metavar="FILE")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_aqi)

    li = sub.add_parser("low-index", help="conjugacy classes of low-index subgroups")
    li.add_argument("--presentation", required=True, metavar="FILE")
    li.add_argument("--min", type=int, required=True)
    li.add_argument("--max", type=int, required=True)
    li.add_argument("--tables", action="store_true", help="print each coset table")
    li.add_argument("--json", action="store_true")
    li.set_defaults(func=cmd_low_index)

    n = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    n.add_argument("--matrix", required=True, metavar="FILE")
    n.add_argument("--full", action="store_true", help="also print U and V")
    n.set_defaults(func=cmd_snf)

    t = sub.add_parser("todd-coxeter", help="coset enumeration")
    t.add_argument("--presentation", required=True, metavar="FILE")
    t.add_argument("--subgroup", metavar="FILE", default=None,
                   help="subgroup generators as comma-separated words")
    t.add_argument("--limit", type=int, default=None, help="maximum live cosets")
    t.add_argument("--table", action="store_true", help="print the coset table")
    t.set_defaults(func=cmd_todd_coxeter)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, CosetLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, NotASubgroup, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except CosetlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FIXTURE


if __name__ == "__main__":
    sys.exit(main())
