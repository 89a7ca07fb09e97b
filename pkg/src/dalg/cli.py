"""Command-line front end: check, nabla, order, induce, enumerate, verify.

Every subcommand accepts --json for a machine-readable report with a fixed
key order and no environment-dependent content, so outputs can be compared
byte for byte. Exit codes: 0 success, 1 a failed assertion or a failed
non-informational statement, 2 parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from dalg.classify import FLAG_ORDER, check_axioms, check_formula_axioms
from dalg.core import FORMULA, SampleGrid, TblParseError, emit_table, parse_table
from dalg.enumeration import FILTER_NAMES, EnumSpec, enumerate_d_algebras
from dalg.nabla import build_normalizer
from dalg.order import check_poset, hasse_cover, induce_bck, order_relation
from dalg.verify import REGISTRY, Universe, verify_all, verify_statements

DEFAULT_GRID = "-2,-1,-1/2,0,1/2,1,2"


def _read_table(path):
    if path == "-":
        return parse_table(sys.stdin.read())
    with open(path, "rb") as fh:
        return parse_table(fh.read())


def _dump_json(obj):
    print(json.dumps(obj, indent=2))


def _fmt_witness(witness):
    if witness is None:
        return ""
    return " witness=(" + ", ".join(str(v) for v in witness) + ")"


def _run_check(args):
    if args.formula:
        grid = SampleGrid.from_text(args.grid)
        report = check_formula_axioms(FORMULA, grid)
    else:
        if not args.table:
            print("error: a table path is required unless --formula is given", file=sys.stderr)
            return 2
        report = check_axioms(_read_table(args.table))
    if args.json:
        if report.refutation_only:
            _dump_json({
                "refutation_only": True,
                "grid": [str(v) for v in report.grid.values],
                "flags": report.to_json(),
            })
        else:
            _dump_json(report.to_json())
    else:
        if report.refutation_only:
            print("refutation-only over grid {" + ", ".join(str(v) for v in report.grid.values) + "}")
        for name in FLAG_ORDER:
            fl = report[name]
            if report.refutation_only:
                verdict = "no counterexample in grid" if fl.holds else "counterexample"
            else:
                verdict = "holds" if fl.holds else "fails"
            print(f"{name}: {verdict}{_fmt_witness(fl.witness)}")
    failed = [name for name in args.asserts or [] if not report.holds(name)]
    for name in failed:
        print(f"assertion failed: {name}{_fmt_witness(report.witness(name))}", file=sys.stderr)
    return 1 if failed else 0


def _star_indices(na):
    table = na.star_table()
    out = []
    for row in table:
        out.append([na.rank(o.result) if o.defined else None for o in row])
    return out


def _run_nabla(args):
    alg = _read_table(args.table)
    na = build_normalizer(alg)
    star = _star_indices(na)
    diam = [na.diameter(t) for t in na.triples]
    if args.plot:
        from dalg import plots

        plots.save_star_figure(na.triples, star, args.plot)
    if args.json:
        _dump_json({
            "count": len(na),
            "members": [list(t) for t in na.triples],
            "star": star,
            "diameters": diam,
        })
    else:
        print(f"members: {len(na)}")
        for i, t in enumerate(na.triples):
            print(f"  {i}: ({t[0]},{t[1]},{t[2]})")
        print("star (entries are member indexes, - is undefined):")
        for row in star:
            print("  " + " ".join("-" if v is None else str(v) for v in row))
        print("diameters: " + " ".join(str(d) for d in diam))
    return 0


def _run_order(args):
    alg = _read_table(args.table)
    na = build_normalizer(alg)
    rel = order_relation(na)
    report = check_poset(rel)
    edges = hasse_cover(rel) if report.is_poset else None
    if args.plot:
        if not report.is_poset:
            print("error: cannot draw a cover diagram, the relation is not a poset", file=sys.stderr)
            return 1
        from dalg import plots

        plots.save_hasse_figure(rel.labels, edges, args.plot)
    if args.json:
        _dump_json({
            "points": [list(t) for t in rel.labels],
            "matrix": [[1 if v else 0 for v in row] for row in rel.matrix],
            "poset": report.to_json(),
            "hasse": None if edges is None else [list(e) for e in edges],
        })
    else:
        print(f"points: {rel.size}")
        for i, t in enumerate(rel.labels):
            print(f"  {i}: ({t[0]},{t[1]},{t[2]})")
        print("relation (row i, column j: 1 means point i <= point j):")
        for row in rel.matrix:
            print("  " + "".join("1" if v else "0" for v in row))
        print(f"poset: {'true' if report.is_poset else 'false'}")
        for part in ("reflexive", "antisymmetric", "transitive"):
            fl = getattr(report, part)
            print(f"  {part}: {'holds' if fl.holds else 'fails'}{_fmt_witness(fl.witness)}")
        if edges is None:
            print("hasse: (not a poset)")
        else:
            print("hasse edges:")
            for u, v in edges:
                print(f"  {u} -> {v}")
    return 0


def _run_induce(args):
    alg = _read_table(args.table)
    na = build_normalizer(alg)
    rel = order_relation(na)
    report = check_poset(rel)
    if not report.is_poset:
        for part in ("reflexive", "antisymmetric", "transitive"):
            fl = getattr(report, part)
            if not fl.holds:
                print(f"error: relation is not a poset, {part} fails{_fmt_witness(fl.witness)}",
                      file=sys.stderr)
        return 1
    induced = induce_bck(rel)
    if args.json:
        _dump_json({"n": induced.n, "rows": [list(r) for r in induced.rows]})
    else:
        sys.stdout.write(emit_table(induced))
    return 0


def _run_enumerate(args):
    spec = EnumSpec(args.order, frozenset(args.filters or ()), args.iso)
    stream = enumerate_d_algebras(spec, jobs=args.jobs)
    count = 0
    tables = None if args.count_only else []
    emit_dir = args.emit
    if emit_dir:
        os.makedirs(emit_dir, exist_ok=True)
    for alg in stream:
        if tables is not None:
            tables.append(alg)
        if emit_dir:
            name = os.path.join(emit_dir, f"{count:06d}.tbl")
            with open(name, "w", encoding="utf-8") as fh:
                fh.write(f"# id: {count}\n")
                fh.write(emit_table(alg))
        count += 1
    if args.json:
        payload = {
            "order": spec.n,
            "filters": sorted(spec.filters),
            "iso": spec.iso_reduce,
            "count": count,
        }
        if tables is not None and not emit_dir:
            payload["tables"] = [[list(r) for r in a.rows] for a in tables]
        _dump_json(payload)
    elif args.count_only or emit_dir:
        print(count)
    else:
        for i, alg in enumerate(tables):
            print(f"# id: {i}")
            sys.stdout.write(emit_table(alg))
            print()
    return 0


def _run_verify(args):
    if args.list:
        if args.json:
            _dump_json([{"id": s.id, "claim": s.claim, "informational": s.informational}
                        for s in REGISTRY.values()])
        else:
            for s in REGISTRY.values():
                tag = " (informational)" if s.informational else ""
                print(f"{s.id:<16} {s.claim}{tag}")
        return 0
    if args.table:
        universe = Universe.single(_read_table(args.table))
    elif args.order:
        universe = Universe.enumerated(EnumSpec(args.order, frozenset(args.filters or ())))
    else:
        print("error: one of --table or --order is required", file=sys.stderr)
        return 2
    if args.statement:
        if args.statement not in REGISTRY:
            print(f"error: unknown statement id {args.statement!r} (see verify --list)",
                  file=sys.stderr)
            return 2
        verdicts = verify_statements([args.statement], universe)
    else:
        verdicts = verify_all(universe)
    if args.json:
        _dump_json([v.to_json() for v in verdicts])
    else:
        for v in verdicts:
            status = "ok" if v.holds else "FAIL"
            tag = " (informational)" if v.informational else ""
            print(f"{v.statement_id:<16} {status:<4} checked={v.checked}{tag}")
            if v.counterexample is not None:
                print(f"  counterexample: {json.dumps(v.counterexample)}")
    failed = [v for v in verdicts if not v.holds and not v.informational]
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dalg",
        description="Classify finite d-algebra tables, build their triple normalizer, "
                    "and verify the recorded statements exhaustively.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="axiom and class report for a table or the formula algebra")
    p.add_argument("table", nargs="?", help=".tbl path, or - for stdin")
    p.add_argument("--formula", action="store_true",
                   help="check x*y = x*(x-y) over a sample grid (refutation-only)")
    p.add_argument("--grid", default=DEFAULT_GRID,
                   help="comma-separated rationals for --formula (default %(default)s)")
    p.add_argument("--assert", dest="asserts", action="append", choices=FLAG_ORDER,
                   metavar="FLAG", help="exit 1 unless FLAG holds (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_run_check)

    p = sub.add_parser("nabla", help="normalizer members, star table, diameters")
    p.add_argument("table", help=".tbl path, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="FILE", help="render the star table to an image file")
    p.set_defaults(func=_run_nabla)

    p = sub.add_parser("order", help="order relation on the normalizer, poset verdict, covers")
    p.add_argument("table", help=".tbl path, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="FILE", help="render the cover diagram to an image file")
    p.set_defaults(func=_run_order)

    p = sub.add_parser("induce", help="emit the poset-induced table in .tbl format")
    p.add_argument("table", help=".tbl path, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_run_induce)

    p = sub.add_parser("enumerate", help="stream all d-algebra tables of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--filter", dest="filters", action="append", choices=FILTER_NAMES,
                   metavar="CLASS", help="restrict to a class (repeatable)")
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--emit", metavar="DIR", help="write one .tbl file per table")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_run_enumerate)

    p = sub.add_parser("verify", help="check registered statements over a table or a family")
    p.add_argument("--statement", metavar="ID", help="a single statement id (default: all)")
    p.add_argument("--list", action="store_true", help="list statement ids and claims")
    p.add_argument("--table", metavar="FILE", help=".tbl path, or - for stdin")
    p.add_argument("--order", type=int, help="enumerated universe of this order")
    p.add_argument("--filter", dest="filters", action="append", choices=FILTER_NAMES,
                   metavar="CLASS", help="restrict the enumerated universe (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_run_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except TblParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
