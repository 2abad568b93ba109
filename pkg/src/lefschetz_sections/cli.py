"""Command-line front end.

Exit status: 0 on success (a failing Lefschetz property is data, not an
error), 2 on usage errors, 3 on domain errors such as a non-Artinian section.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .errors import LefschetzError
from .exactfield import FieldCtx, scalar_from_string, scalar_to_string
from .families import hyperplane_section, ideal_I, ideal_J, lifted_I, point_set
from .graded import graded_span_dim, hilbert_function
from .lefschetz import (
    LefschetzReport,
    det_M_closed,
    linear_form,
    matrix_M,
    slp_conjecture_check,
    slp_full,
    wlp_full,
    wlp_via_det,
)
from .linalg import det_gauss
from .sweep import SweepSpec, format_table, sweep, to_structured

EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _t_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N..M, got {text!r}") from None


def _csv(text: str) -> list[str]:
    return [p.strip() for p in text.split(",") if p.strip()]


def _int_csv(text: str) -> list[int]:
    try:
        return [int(p) for p in _csv(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_family(p: argparse.ArgumentParser, *, bc: bool = False) -> None:
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--a", default="0", help="integer or p/q; use --a=-1/2 for negative fractions")
    if bc:
        p.add_argument("--b", default="1")
        p.add_argument("--c", default="1")


def _add_char(p: argparse.ArgumentParser) -> None:
    p.add_argument("--char", type=int, default=0, dest="characteristic")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "structured"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz-sections",
        description="Lefschetz properties of I_t = (x^{t+1}, y^{t+1}, z^{t+1}, xyz) and its sections J_{t,a}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="closed-form vs eliminated determinant of M_{t,a,b,c}")
    _add_family(p, bc=True)
    _add_char(p)

    p = sub.add_parser("hilbert", help="Hilbert function of S/J_{t,a} in degrees 0..2t+1")
    _add_family(p)
    _add_char(p)

    p = sub.add_parser("points", help="list the points of the lifted ideal")
    p.add_argument("--t", type=int, required=True)
    _add_char(p)

    for name, what in (("wlp", "weak"), ("slp", "strong")):
        p = sub.add_parser(name, help=f"{what} Lefschetz check of S/J_{{t,a}} for b x + c y - z")
        _add_family(p, bc=True)
        _add_char(p)
        _add_format(p)
        if name == "wlp":
            p.add_argument("--method", choices=("full", "det"), default="full")

    p = sub.add_parser("sweep", help="verdict table over t, a and characteristics")
    p.add_argument("--t", type=_t_range, required=True, help="N or N..M")
    p.add_argument("--a", type=_csv, default=["0"], help="comma-separated values")
    p.add_argument("--char", type=_int_csv, default=[0], dest="characteristics")
    p.add_argument("--property", choices=("WLP", "SLP"), default="WLP")
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)

    p = sub.add_parser("conjecture", help="odd-power middle maps of S/J_{t,a} for x + y - z")
    p.add_argument("--t", type=_t_range, default=(1, 8), help="N or N..M (default 1..8)")
    p.add_argument("--a", type=_csv, default=["1", "2"])
    _add_char(p)
    _add_format(p)

    p = sub.add_parser("section", help="hyperplane section w = -a x of the lifted ideal")
    _add_family(p)
    _add_char(p)
    return parser


def _report_table(report: LefschetzReport) -> str:
    lines = [
        f"property: {report.property}",
        f"verdict: {'true' if report.verdict else 'false'}",
    ]
    if report.witness:
        lines.append("witness: " + ", ".join(f"{k}={v}" for k, v in sorted(report.witness.items())))
    if report.note:
        lines.append(f"note: {report.note}")
    ctx = report.context
    lines.append("context: " + ", ".join(f"{k}={ctx[k]}" for k in sorted(ctx)))
    header = ("d", "k", "dim_source", "dim_target", "rank", "maximal")
    body = [
        (str(e.d), str(e.k), str(e.dim_source), str(e.dim_target), str(e.rank), "true" if e.maximal else "false")
        for e in report.degree_data
    ]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in [header, *body]]
    return "\n".join(lines)


def _emit_report(report: LefschetzReport, fmt: str, out) -> None:
    print(report.to_json() if fmt == "structured" else _report_table(report), file=out)


def _family_ideal(t: int, a, ctx: FieldCtx):
    return ideal_I(t, ctx) if a.is_zero() else ideal_J(t, a)


def _dispatch(args, out) -> None:
    ctx = FieldCtx(getattr(args, "characteristic", 0))
    cmd = args.command

    if cmd == "det":
        a, b, c = (scalar_from_string(v, ctx) for v in (args.a, args.b, args.c))
        closed = det_M_closed(args.t, a, b, c)
        gauss = det_gauss(matrix_M(args.t, a, b, c))
        print(f"closed: {scalar_to_string(closed)}", file=out)
        print(f"gauss: {scalar_to_string(gauss)}", file=out)
        print(f"agree: {'true' if closed == gauss else 'false'}", file=out)

    elif cmd == "hilbert":
        ideal = _family_ideal(args.t, scalar_from_string(args.a, ctx), ctx)
        print(" ".join(str(hilbert_function(ideal, d)) for d in range(2 * args.t + 2)), file=out)

    elif cmd == "points":
        for line in point_set(args.t, ctx).to_lines():
            print(line, file=out)

    elif cmd in ("wlp", "slp"):
        a, b, c = (scalar_from_string(v, ctx) for v in (args.a, args.b, args.c))
        if cmd == "wlp" and args.method == "det":
            report = wlp_via_det(args.t, a, ctx)
        else:
            ideal = _family_ideal(args.t, a, ctx)
            decide = wlp_full if cmd == "wlp" else slp_full
            report = decide(ideal, linear_form(b, c, ctx))
        _emit_report(report, args.format, out)

    elif cmd == "sweep":
        t_min, t_max = args.t
        spec = SweepSpec(t_min, t_max, tuple(args.a), tuple(args.characteristics), args.property, args.format)
        rows = sweep(spec, jobs=args.jobs)
        print(to_structured(spec, rows) if args.format == "structured" else format_table(rows), file=out)

    elif cmd == "conjecture":
        reports = []
        for t in range(args.t[0], args.t[1] + 1):
            for a_text in args.a:
                reports.append(slp_conjecture_check(t, scalar_from_string(a_text, ctx), ctx))
        if args.format == "structured":
            print(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2), file=out)
        else:
            rows = [("t", "a", "verdict", "maps")]
            for r in reports:
                maps = " ".join(f"{e.d}->{e.d + e.k}:{e.rank}/{e.dim_source}" for e in r.degree_data)
                rows.append((str(r.context["t"]), r.context["a"], "true" if r.verdict else "false", maps))
            widths = [max(len(x) for x in col) for col in zip(*rows)]
            for row in rows:
                print("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip(), file=out)

    elif cmd == "section":
        a = scalar_from_string(args.a, ctx)
        section = hyperplane_section(lifted_I(args.t, ctx), a)
        target = ideal_J(args.t, a)
        for g in section.generators:
            print(g.format(), file=out)
        agree = True
        for d in range(2 * args.t + 2):
            s, j = graded_span_dim(section, d), graded_span_dim(target, d)
            agree &= s == j
            print(f"degree {d}: section {s}, J {j}", file=out)
        print(f"agree: {'true' if agree else 'false'}", file=out)


def run(argv=None, out=None, err=None) -> int:
    """Entry point returning the exit status instead of calling ``sys.exit``."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        _dispatch(args, out)
    except LefschetzError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
