"""The ``curvesim`` command.

Exit codes: 0 when the answer is positive (similar, identified, ...),
1 when it is negative, 2 on any input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bench import DISCLAIMER, BenchConfig, format_table, run_bench
from .catalog import default_db_path, identify, load_database
from .curve import ParamCurve, validate
from .curvefile import load_curve
from .detect import similar_gen, symmetries
from .errors import CurvesimError, UnequalDegrees
from .piecewise import PiecewiseCurve, global_similar, partial_similar
from .plot import render_svg
from .report import format_witness, interval_set_report, interval_str, witness_report

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _load(path, kind=ParamCurve):
    try:
        obj = load_curve(path)
    except CurvesimError as exc:
        raise InputError(str(exc)) from None
    if kind is not None and not isinstance(obj, kind):
        want = "rational" if kind is ParamCurve else "piecewise"
        raise InputError(f"{path}: expected a {want} curve file")
    return obj


def _validated(path) -> ParamCurve:
    z = _load(path)
    try:
        return validate(z)
    except CurvesimError as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from None


def _emit_witnesses(ws, args, verdict: str | None, extra: dict | None = None):
    reports = [witness_report(w, args.precision) for w in ws]
    if args.json:
        doc = dict(extra or {})
        doc.update(count=len(reports), witnesses=reports)
        print(json.dumps(doc, indent=2))
        return
    if verdict is not None:
        print(verdict)
    for k, v in (extra or {}).items():
        if k not in ("similar",):
            print(f"{k}: {v}")
    print(f"{len(reports)} witness{'es' if len(reports) != 1 else ''}")
    for i, r in enumerate(reports, 1):
        print(format_witness(r, i))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_similar(args) -> int:
    z1, z2 = _validated(args.file1), _validated(args.file2)
    try:
        ws = similar_gen(z1, z2, check=False)
    except UnequalDegrees as exc:
        if args.json:
            print(json.dumps({"similar": False, "reason": f"unequal degrees: {exc}",
                              "count": 0, "witnesses": []}, indent=2))
        else:
            print("FALSE")
            print(f"reason: unequal degrees ({exc})")
        return EXIT_FALSE
    _emit_witnesses(ws, args, "TRUE" if ws else "FALSE", {"similar": bool(ws)})
    return EXIT_TRUE if ws else EXIT_FALSE


def cmd_symmetries(args) -> int:
    z = _validated(args.file)
    ws = symmetries(z, check=False)
    _emit_witnesses(ws, args, None)
    return EXIT_TRUE


def cmd_identify(args) -> int:
    z = _validated(args.file)
    db_path = Path(args.db) if args.db else default_db_path()
    try:
        db = load_database(db_path)
    except CurvesimError as exc:
        raise InputError(str(exc)) from None
    matches = identify(z, db)
    if args.json:
        print(json.dumps({"matches": [
            {"name": m.name, "witnesses": m.count,
             "witness": witness_report(m.witness, args.precision)} for m in matches]},
            indent=2))
    elif not matches:
        print("unknown")
    else:
        for m in matches:
            print(f"{m.name}  ({m.count} similarit{'ies' if m.count != 1 else 'y'}; one shown)")
            print(format_witness(witness_report(m.witness, args.precision)))
    return EXIT_TRUE if matches else EXIT_FALSE


def cmd_bench(args) -> int:
    try:
        config = BenchConfig(args.degrees, args.bitsizes, args.trials, args.mode, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None

    def progress(cell):
        if args.verbose:
            print(f"d={cell.degree} tau={cell.bitsize} trial {len(cell.times)}: "
                  f"{cell.times[-1]:.3f}s", file=sys.stderr)

    cells = run_bench(config, progress)
    dump = {"config": vars(config), "disclaimer": DISCLAIMER,
            "cells": [c.to_dict() for c in cells]}
    if args.dump:
        Path(args.dump).write_text(json.dumps(dump, indent=2) + "\n", encoding="utf-8")
    if args.json:
        print(json.dumps(dump, indent=2))
    else:
        print(format_table(config, cells))
        print(DISCLAIMER)
        errors = [e for c in cells for e in c.errors]
        for e in errors:
            print(f"error: {e}")
    return EXIT_TRUE if not any(c.errors for c in cells) else EXIT_ERROR


def cmd_plot(args) -> int:
    obj = _load(args.file, kind=None)
    lo, hi = (Fraction(w) for w in args.window)
    if hi <= lo:
        raise InputError("--window needs lo < hi")
    svg = render_svg(obj, (lo, hi), args.samples, title=Path(args.file).stem)
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        Path(args.output).write_text(svg, encoding="utf-8")
    return EXIT_TRUE


def _validated_piecewise(path) -> PiecewiseCurve:
    p = _load(path, kind=PiecewiseCurve)
    try:
        return p.validate()
    except CurvesimError as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from None


def cmd_piecewise(args) -> int:
    p1, p2 = _validated_piecewise(args.file1), _validated_piecewise(args.file2)
    if not args.partial:
        ws = global_similar(p1, p2)
        _emit_witnesses(ws, args, "TRUE" if ws else "FALSE", {"similar": bool(ws)})
        return EXIT_TRUE if ws else EXIT_FALSE
    matches = partial_similar(p1, p2, allow_point=args.allow_point)
    if args.json:
        print(json.dumps({"count": len(matches), "matches": [
            {"i": m.i, "j": m.j, "overlap": interval_set_report(m.overlap, args.precision),
             "witness": witness_report(m.witness, args.precision)} for m in matches]},
            indent=2))
    else:
        print(f"{len(matches)} partial match{'es' if len(matches) != 1 else ''}")
        for k, m in enumerate(matches, 1):
            print(f"segment {m.i} -> segment {m.j}: J' = {interval_str(m.overlap)}")
            print(format_witness(witness_report(m.witness, args.precision), k))
    return EXIT_TRUE if matches else EXIT_FALSE


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(",", " ").split()] if text.strip() else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _output_flags(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--precision", type=int, default=10, metavar="K",
                   help="numeric values to within 10^-K (default 10)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvesim",
        description="Exact similarity and symmetry detection for rational plane curves.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("similar", help="decide whether two curves are similar")
    p.add_argument("file1")
    p.add_argument("file2")
    _output_flags(p)
    p.set_defaults(func=cmd_similar)

    p = sub.add_parser("symmetries", help="list the symmetries of a curve")
    p.add_argument("file")
    _output_flags(p)
    p.set_defaults(func=cmd_symmetries)

    p = sub.add_parser("identify", help="match a curve against a database of named curves")
    p.add_argument("file")
    p.add_argument("--db", help="database directory (default: $CURVESIM_DB or the bundled one)")
    _output_flags(p)
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("bench", help="time the detection on random polynomial curves")
    p.add_argument("--degrees", type=_int_list, default=[3, 6], help="e.g. 3,6,9")
    p.add_argument("--bitsizes", type=_int_list, default=[1, 8], help="e.g. 1,8,16")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("pol", "gen"), default="pol")
    p.add_argument("--dump", metavar="FILE", help="also write the results as JSON")
    p.add_argument("--json", action="store_true", help="print JSON instead of the table")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("plot", help="render a curve file as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", default="-", help="output file (default stdout)")
    p.add_argument("--window", nargs=2, default=("-10", "10"), metavar=("LO", "HI"))
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("piecewise", help="global or partial similarity of piecewise curves")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--partial", action="store_true", help="list partial matches")
    p.add_argument("--allow-point", action="store_true",
                   help="also report single-point overlaps")
    _output_flags(p)
    p.set_defaults(func=cmd_piecewise)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CurvesimError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
