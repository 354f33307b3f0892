"""Command-line interface.

    dihedral-linking colorings --p 5 --braid "1 -2 1 -2"
    dihedral-linking dln --p 5 --overstrands 6,4,0,7,2,3,1,5 --signs 1,1,1,-1,1,-1,1,-1 \\
        --coloring 2,3,2,2,0,4,0,1
    dihedral-linking tabulate --p 3 --input knots.csv --output table.csv --jobs 4
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import tabulate as tab
from .chains import assemble
from .coloring import equivalence_classes, fox_colorings, make_coloring, parse_coloring
from .cover import CONVENTIONS, ColoredDiagram, initial_configuration
from .errors import DihedralLinkingError, InvalidColoring, UnsupportedP
from .knot import diagram_from_braid, diagram_from_lists
from .linking import dln, format_value

log = logging.getLogger("dihedral_linking")

EXIT_PARSE = 2
EXIT_UNSUPPORTED_P = 3
EXIT_INVALID_COLORING = 4


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_knot_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="odd modulus of the coloring")
    parser.add_argument("--braid", help='braid word, e.g. "1 -2 1 -2"')
    parser.add_argument("--overstrands", type=_int_list, help="over-arc index per crossing")
    parser.add_argument("--signs", type=_int_list, help="local writhe (+1/-1) per crossing")
    parser.add_argument("--mirror", action="store_true", help="negate every crossing sign")


def _diagram(args):
    if args.braid is not None:
        if args.overstrands is not None or args.signs is not None:
            raise DihedralLinkingError("give either --braid or --overstrands/--signs, not both")
        return diagram_from_braid(args.braid, mirror=args.mirror)
    if args.overstrands is None or args.signs is None:
        raise DihedralLinkingError("need --braid or both --overstrands and --signs")
    d = diagram_from_lists(args.overstrands, args.signs)
    return d.mirror() if args.mirror else d


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-linking",
        description="Dihedral linking numbers of Fox p-colored knots.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p_col = sub.add_parser("colorings", help="list coloring classes of a knot")
    _add_knot_args(p_col)

    p_dln = sub.add_parser("dln", help="linking matrix and invariant of a colored knot")
    _add_knot_args(p_dln)
    p_dln.add_argument("--coloring", help="arc colors c0,c1,...; default: every class")
    p_dln.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_dln.add_argument("--name", default=None, help="knot name for json output")
    p_dln.add_argument("--arrows", choices=CONVENTIONS, default="centered",
                       help="arc-0 arrow labeling convention")
    p_dln.add_argument("--debug", action="store_true",
                       help="print configuration diagrams and augmented matrices to stderr")

    p_tab = sub.add_parser("tabulate", help="tabulate linking numbers for a CSV of knots")
    p_tab.add_argument("--p", type=int, required=True)
    p_tab.add_argument("--input", required=True, type=Path, help="CSV with name,braid[,determinant]")
    p_tab.add_argument("--output", required=True, type=Path)
    p_tab.add_argument("--format", choices=("csv", "text"), default="csv")
    p_tab.add_argument("--jobs", type=int, default=1)
    p_tab.add_argument("--per-coloring", action="store_true")
    p_tab.add_argument("--mirror", action="store_true")
    return parser


def cmd_colorings(args, out) -> int:
    d = _diagram(args)
    for col in equivalence_classes(fox_colorings(d, args.p)):
        print(col, file=out)
    return 0


def _debug_dump(cd: ColoredDiagram) -> None:
    print(f"# coloring {cd.coloring}", file=sys.stderr)
    print(cd.configurations.dump(), file=sys.stderr)
    for k in range(cd.coloring.q + 1):
        print(f"# system for K^{k}", file=sys.stderr)
        print(assemble(cd, k).augmented_text(), file=sys.stderr)


def cmd_dln(args, out) -> int:
    d = _diagram(args)
    if args.coloring is not None:
        colorings = [make_coloring(d, parse_coloring(args.coloring), args.p)]
    else:
        colorings = equivalence_classes(fox_colorings(d, args.p))
        if not colorings:
            log.warning("diagram has no nontrivial %d-colorings", args.p)

    results = []
    for col in colorings:
        initial = initial_configuration(col, args.arrows)[1:]
        if args.debug:
            _debug_dump(ColoredDiagram(d, col, tuple(initial)))
        results.append(dln(d, col, initial))

    if args.format == "json":
        payload = {
            "name": args.name,
            "p": args.p,
            "colorings": [
                {
                    "colors": list(r.coloring.colors),
                    "matrix": [[format_value(v) for v in row] for row in r.matrix],
                    "multiset": [format_value(v) for v in r.multiset],
                }
                for r in results
            ],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["coloring", "j", "k", "lk"])
        for r in results:
            for j, row in enumerate(r.matrix):
                for k, v in enumerate(row):
                    writer.writerow([str(r.coloring), j, k, format_value(v)])
        out.write(buf.getvalue())
    else:
        for idx, r in enumerate(results):
            if idx:
                print(file=out)
            print(f"coloring: {r.coloring}", file=out)
            print(r.text(), file=out)
            print("DLN: " + ", ".join(format_value(v) for v in r.multiset), file=out)
    return 0


def cmd_tabulate(args, out) -> int:
    if args.p < 3 or args.p % 2 == 0:
        raise UnsupportedP(f"p must be an odd integer >= 3, got {args.p}")
    with open(args.input, newline="") as fh:
        records, errors = tab.read_knot_csv(fh)
    outcomes = tab.run(records, args.p, jobs=args.jobs, mirror=args.mirror)
    rows = [o.row for o in outcomes if o.row is not None]
    errors += [(o.record.name, o.error) for o in outcomes if o.error]
    args.output.write_text(tab.format_rows(rows, args.format, args.per_coloring))

    err_path = args.output.with_name(args.output.name + ".errors")
    if errors:
        with open(err_path, "w") as fh:
            for name, message in errors:
                fh.write(f"{name}\t{message}\n")
        log.warning("%d knot(s) skipped; see %s", len(errors), err_path)
    elif err_path.exists():
        err_path.unlink()
    succeeded = sum(1 for o in outcomes if o.error is None)
    print(f"{len(rows)} colorable of {succeeded} processed, {len(errors)} errors", file=out)
    return 0 if succeeded or not errors else 1


COMMANDS = {"colorings": cmd_colorings, "dln": cmd_dln, "tabulate": cmd_tabulate}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except UnsupportedP as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED_P
    except InvalidColoring as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_COLORING
    except DihedralLinkingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
