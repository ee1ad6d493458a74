"""Command-line interface.

Subcommands: torsion | check | reconstruct | classify | plot | lemma1-verify.

Exit codes: 0 positive verdict / success, 1 negative verdict, 2 input or
I/O error, 3 undecided.  Output is deterministic for fixed flags; ANSI
color is used only on a terminal and never when NO_COLOR is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .classify import DEFAULT_JET_ORDER, classify
from .discriminant import (
    AdmissibilityStatus,
    admissible_check,
    reconstruct_from_disc,
    reconstruct_from_det,
)
from .exact_poly import BivariatePolynomial
from .jets import verify_lemma1
from .numeric_viz import (
    GridSpec,
    VizError,
    caption_discrepancy_note,
    default_levels,
    emit_csv,
    emit_svg,
    eval_eigenfield,
    extract_levels,
)
from .operator2 import OperatorField2, is_nijenhuis, torsion_components
from .parser import ParseError, parse_operator, parse_poly

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_UNDECIDED = 3

SCHEMA_VERSION = 1


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _tint(text: str, good: bool) -> str:
    if not _use_color():
        return text
    code = "32" if good else "31"
    return f"\x1b[{code}m{text}\x1b[0m"


def _emit(payload: dict, lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _parse_error(exc: ParseError) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def cmd_torsion(args) -> int:
    try:
        op = parse_operator(args.L)
    except ParseError as exc:
        return _parse_error(exc)
    tc = torsion_components(op)
    nij = tc.is_zero()
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "torsion",
        "operator": op.render_entries(),
        "n1": tc.n1.render(),
        "n2": tc.n2.render(),
        "nijenhuis": nij,
    }
    verdict = _tint("NIJENHUIS", True) if nij else _tint("NOT NIJENHUIS", False)
    lines = [
        f"n1 = {tc.n1.render()}",
        f"n2 = {tc.n2.render()}",
        verdict,
    ]
    _emit(payload, lines, args.format)
    return EXIT_OK if nij else EXIT_NEGATIVE


def cmd_check(args) -> int:
    try:
        g = parse_poly(args.g)
    except ParseError as exc:
        return _parse_error(exc)
    verdict = admissible_check(g)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "check",
        "g": g.render(),
        "verdict": verdict.to_json(),
    }
    lines = [f"g = {g.render()}", f"status: {_tint(verdict.status.value, verdict.accepted)}"]
    if verdict.quotient is not None:
        lines.append(f"quotient: {verdict.quotient.render()}")
    if verdict.alpha is not None:
        lines.append(f"alpha: {verdict.alpha}")
    if verdict.zero_family:
        lines.append("zero family: g == 0")
    if verdict.remainder_witness is not None:
        lines.append(f"remainder witness: {verdict.remainder_witness.render()}")
    if verdict.note:
        lines.append(f"note: {verdict.note}")
    _emit(payload, lines, args.format)
    return EXIT_OK if verdict.accepted else EXIT_NEGATIVE


def cmd_reconstruct(args) -> int:
    if (args.g is None) == (args.f is None):
        print("error: exactly one of --g / --f is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.g is not None:
            g = parse_poly(args.g)
            if g.partial_y().is_zero():
                return _reconstruct_degenerate(args, g)
            op = reconstruct_from_disc(g)
            source = {"g": g.render()}
        else:
            f = parse_poly(args.f)
            if f.partial_y().is_zero():
                x = BivariatePolynomial.variable_x()
                return _reconstruct_degenerate(args, x * x * Fraction(1, 4) - f)
            op = reconstruct_from_det(f)
            source = {"f": f.render()}
    except ParseError as exc:
        return _parse_error(exc)
    corner = op.c
    polynomial = corner.is_polynomial()
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "reconstruct",
        **source,
        "operator": op.render_entries(),
        "corner_polynomial": polynomial,
        "nijenhuis": is_nijenhuis(op),
    }
    lines = [f"L = {op}"]
    lines.append(
        "corner entry (2,1) is "
        + (_tint("polynomial", True) if polynomial else _tint("not polynomial", False))
    )
    _emit(payload, lines, args.format)
    return EXIT_OK if polynomial else EXIT_NEGATIVE


def _reconstruct_degenerate(args, g: BivariatePolynomial) -> int:
    result = classify(g)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "reconstruct",
        "g": g.render(),
        "degenerate": True,
        "classification": result.to_json(),
    }
    lines = [
        "determinant/discriminant has no y-dependence; reporting the "
        "y-independent family",
        f"branch: {result.branch}",
        f"admissible: {result.admissible}",
    ]
    if result.operator is not None:
        lines.append(f"family representative: {result.operator}")
    for note in result.notes:
        lines.append(f"note: {note}")
    _emit(payload, lines, args.format)
    if result.admissible:
        return EXIT_OK
    return EXIT_NEGATIVE


def cmd_classify(args) -> int:
    try:
        g = parse_poly(args.g)
    except ParseError as exc:
        return _parse_error(exc)
    result = classify(g, jet_order=args.jet_order)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "classify",
        "g": g.render(),
        "result": result.to_json(),
    }
    adm = result.admissible
    adm_text = {True: _tint("admissible", True), False: _tint("not admissible", False), None: "undecided"}[adm]
    lines = [
        f"g = {g.render()}",
        f"branch: {result.branch}",
        f"admissible: {adm_text}",
    ]
    if result.certificate:
        lines.append(f"certificate: {result.certificate}")
    if result.normal_form is not None:
        lines.append(f"normal form: {result.normal_form}")
    if result.substitution is not None:
        lines.append(f"substitution y~ = {result.substitution}")
    if result.operator is not None:
        lines.append(f"operator {result.operator_coordinates}: {result.operator}")
    if result.operator_original is not None and result.operator_original != result.operator:
        lines.append(f"operator (x, y): {result.operator_original}")
    for key, value in sorted(result.params.items()):
        lines.append(f"{key}: {value}")
    if result.verdict is not None:
        lines.append(f"raw check: {result.verdict.status.value}")
    for note in result.notes:
        lines.append(f"note: {note}")
    _emit(payload, lines, args.format)
    if adm is True:
        return EXIT_OK
    if adm is False:
        return EXIT_NEGATIVE
    return EXIT_UNDECIDED


def cmd_plot(args) -> int:
    if (args.g is None) == (args.L is None):
        print("error: exactly one of --g / --L is required", file=sys.stderr)
        return EXIT_INPUT
    notes: list[str] = []
    try:
        if args.L is not None:
            op = parse_operator(args.L)
        else:
            g = parse_poly(args.g)
            if g.partial_y().is_zero():
                print(
                    "error: g has no y-dependence; reconstruction needs g_y != 0",
                    file=sys.stderr,
                )
                return EXIT_INPUT
            op = reconstruct_from_disc(g)
    except ParseError as exc:
        return _parse_error(exc)
    grid = GridSpec(args.xmin, args.xmax, args.ymin, args.ymax, args.nx, args.ny)
    try:
        field = eval_eigenfield(op, grid)
    except VizError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    note = caption_discrepancy_note(op)
    if note:
        notes.append(note)

    out = args.out
    levels: list[float] = []
    try:
        if out.endswith(".csv"):
            emit_csv(field, out)
        elif out.endswith(".svg"):
            levels = default_levels(field, args.levels)
            contours = extract_levels(field, levels)
            emit_svg(field, contours, out)
        else:
            print("error: --out must end in .svg or .csv", file=sys.stderr)
            return EXIT_INPUT
    except VizError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "plot",
        "operator": op.render_entries(),
        "grid": {
            "x": [grid.x0, grid.x1],
            "y": [grid.y0, grid.y1],
            "nx": grid.nx,
            "ny": grid.ny,
        },
        "levels": levels,
        "out": out,
        "notes": notes,
    }
    lines = [f"wrote {out}"]
    for note in notes:
        lines.append(f"note: {note}")
    _emit(payload, lines, args.format)
    return EXIT_OK


def cmd_lemma1_verify(args) -> int:
    cs = []
    for text in args.c:
        try:
            cs.append(Fraction(text))
        except (ValueError, ZeroDivisionError):
            print(f"error: invalid rational {text!r}", file=sys.stderr)
            return EXIT_INPUT
    if any(c == 0 for c in cs):
        print("error: c must be nonzero", file=sys.stderr)
        return EXIT_INPUT
    results = []
    all_ok = True
    for k in range(args.k_max + 1):
        for c in cs:
            ok = verify_lemma1(k, c)
            all_ok &= ok
            results.append({"k": k, "c": str(c), "ok": ok})
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "lemma1-verify",
        "results": results,
        "all_ok": all_ok,
    }
    lines = [
        f"k={r['k']} c={r['c']}: " + (_tint("ok", True) if r["ok"] else _tint("FAIL", False))
        for r in results
    ]
    lines.append("all formulas verified" if all_ok else "FAILURES present")
    _emit(payload, lines, args.format)
    return EXIT_OK if all_ok else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# Argument wiring.
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nij2d",
        description="Nijenhuis torsion, admissible discriminants and "
        "singularity classification for 2x2 operator fields",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )

    p = sub.add_parser("torsion", parents=[common], help="torsion components and Nijenhuis verdict")
    p.add_argument("--L", nargs=4, required=True, metavar=("A", "B", "C", "D"),
                   help="row-major operator entries")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("check", parents=[common], help="admissibility of a discriminant")
    p.add_argument("--g", required=True, help="discriminant polynomial")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reconstruct", parents=[common],
                       help="operator from determinant (--f) or discriminant (--g)")
    p.add_argument("--g", help="discriminant polynomial")
    p.add_argument("--f", help="determinant polynomial")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("classify", parents=[common], help="singularity classification at the origin")
    p.add_argument("--g", required=True, help="discriminant polynomial")
    p.add_argument("--jet-order", type=int, default=DEFAULT_JET_ORDER,
                   help="truncation order for the normal-form paths")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("plot", parents=[common], help="eigenvalue level lines / field export")
    p.add_argument("--g", help="discriminant polynomial (reconstructs the operator)")
    p.add_argument("--L", nargs=4, metavar=("A", "B", "C", "D"), help="operator entries")
    p.add_argument("--out", required=True, help="output path (.svg or .csv)")
    p.add_argument("--xmin", type=float, default=-1.0)
    p.add_argument("--xmax", type=float, default=1.0)
    p.add_argument("--ymin", type=float, default=-1.0)
    p.add_argument("--ymax", type=float, default=1.0)
    p.add_argument("--nx", type=int, default=201)
    p.add_argument("--ny", type=int, default=201)
    p.add_argument("--levels", type=int, default=21, help="number of eigenvalue levels")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("lemma1-verify", parents=[common],
                       help="verify the derivative formulas over a k/c sweep")
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--c", nargs="+", default=["1", "2", "3", "-1", "1/2"],
                   help="nonzero rational values of c")
    p.set_defaults(func=cmd_lemma1_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
