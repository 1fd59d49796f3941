"""Command-line interface.

Every command prints plain ``key=value`` text.  Exit status is 0 on success,
1 on a domain error (the error class name goes to stderr) and 2 on a usage
error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import presets
from .core import GscSpec, Point, format_word, spec_from_json
from .decider import decide_cut_points, essential_exists_at_depth, point_components
from .errors import CarpetError
from .fragility import fragility_witness, is_connected_gsc
from .hata import build_hata, chi, export_edge_list, export_graph_text, has_long_tail, max_vertices
from .render import render_svg


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact fraction: {text!r}") from None


def _mark(text: str) -> Point:
    try:
        x, y = text.split(",")
        return Point(_fraction(x), _fraction(y))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y with fractions, got {text!r}") from None


def _bool(v: bool) -> str:
    return "true" if v else "false"


def load_spec(arg: str) -> GscSpec:
    """``preset:NAME`` or a path to a JSON document ``{"n": .., "digits": ..}``."""
    if arg.startswith("preset:"):
        return presets.resolve(arg[len("preset:") :])
    path = Path(arg)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise UsageError(f"cannot read spec file {arg}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"spec file {arg} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "digits" not in doc:
        raise UsageError(f"spec file {arg} needs keys 'n' and 'digits'")
    return spec_from_json(doc, name=path.stem)


class UsageError(Exception):
    pass


def _bits_text(bits) -> str:
    pre, per = bits
    word = lambda bs: "".join("1" if b else "0" for b in bs)  # noqa: E731
    return f"{word(pre)}({word(per)})"


# -- commands ----------------------------------------------------------------


def cmd_validate(args, out):
    spec = load_spec(args.spec)
    out.write(f"valid n={spec.n_base} size={spec.size} name={spec}\n")


def cmd_analyze(args, out):
    spec = load_spec(args.spec)
    connected = is_connected_gsc(spec)
    fields = [f"n={spec.n_base}", f"size={spec.size}", f"connected={_bool(connected)}"]
    if connected:
        witness = fragility_witness(spec)
        fields.append(f"fragile={_bool(witness is not None)}")
        fields.append(f"essential_bits={_bits_text(essential_exists_at_depth(spec, allow_fragile=True))}")
    fields.append(f"verdict={decide_cut_points(spec)}")
    out.write(" ".join(fields) + "\n")


def cmd_hata(args, out):
    spec = load_spec(args.spec)
    G = build_hata(spec, args.level, args.max_vertices)
    if args.dot:
        Path(args.dot).write_text(export_graph_text(G))
    if args.edges:
        Path(args.edges).write_text(export_edge_list(G))
    fields = [
        f"level={G.level}",
        f"vertices={G.order}",
        f"edges={G.edge_count}",
        f"connected={_bool(G.is_connected)}",
    ]
    if G.is_connected:
        fields.append(f"cut_vertices={len(G.cut_vertices())}")
    out.write(" ".join(fields) + "\n")


def cmd_chi(args, out):
    spec = load_spec(args.spec)
    G = build_hata(spec, args.level, args.max_vertices)
    value = chi(G)
    fields = [f"level={args.level}", f"chi={value}"]
    if args.level >= 2:
        fields.append(f"long_tail={_bool(has_long_tail(spec, args.level, cap=args.max_vertices))}")
        fields.append(f"long_tail_strict={_bool(has_long_tail(spec, args.level, strict=True, cap=args.max_vertices))}")
    out.write(" ".join(fields) + "\n")


def cmd_essential(args, out):
    spec = load_spec(args.spec)
    reports = build_hata(spec, args.level, args.max_vertices).cut_vertex_reports()
    for r in reports:
        out.write(f"{r}\n")
    essential = [format_word(r.vertex) for r in reports if r.essential]
    out.write(f"cut_vertices={len(reports)} essential={','.join(essential) or '-'}\n")


def cmd_decide(args, out):
    spec = load_spec(args.spec)
    verdict = decide_cut_points(spec)
    out.write(f"{verdict}\n")
    if args.evidence and verdict.evidence:
        out.write(f"{verdict.evidence}\n")


def cmd_is_cut_point(args, out):
    spec = load_spec(args.spec)
    report = point_components(spec, (args.x, args.y))
    if args.verbose:
        addrs = ",".join(str(a) for a in report.addresses)
        out.write(
            f"{_bool(report.is_cut_point)} components={report.components} "
            f"frozen={report.frozen} addresses={addrs}\n"
        )
    else:
        out.write(f"{_bool(report.is_cut_point)}\n")


def cmd_render(args, out):
    spec = load_spec(args.spec)
    svg = render_svg(spec, args.level, args.mark or (), cap=args.max_vertices)
    Path(args.out).write_text(svg)
    out.write(f"wrote={args.out} squares={spec.size**args.level} marks={len(args.mark or ())}\n")


def cmd_presets(args, out):
    for name in presets.list_presets():
        out.write(f"{name}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="carpetcut", description="Cut points of generalized Sierpinski carpets.")
    parser.add_argument(
        "--max-vertices",
        type=int,
        default=None,
        help=f"largest Hata graph to build (default {max_vertices()})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, spec=True):
        p = sub.add_parser(name, help=help_text)
        if spec:
            p.add_argument("spec", help="JSON spec file or preset:NAME")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a spec")
    add("analyze", cmd_analyze, "connectivity, fragility, essential bits and verdict")
    p = add("hata", cmd_hata, "build the n-th Hata graph")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--dot", help="write the graph as DOT text")
    p.add_argument("--edges", help="write an edge list")
    p = add("chi", cmd_chi, "chi of the n-th Hata graph")
    p.add_argument("--level", type=int, required=True)
    p = add("essential", cmd_essential, "cut vertices with the essential flag")
    p.add_argument("--level", type=int, required=True)
    p = add("decide", cmd_decide, "decide whether cut points exist")
    p.add_argument("--evidence", action="store_true", help="also print the certificate or witness")
    p = add("is-cut-point", cmd_is_cut_point, "test one point")
    p.add_argument("--x", type=_fraction, required=True)
    p.add_argument("--y", type=_fraction, required=True)
    p.add_argument("--verbose", action="store_true")
    p = add("render", cmd_render, "draw a level-n approximation as SVG")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--mark", type=_mark, action="append", help="x,y point to circle (repeatable)")
    p = add("presets", cmd_presets, "list preset names", spec=False)
    p.add_argument("--list", action="store_true")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "level", 1) < 1:
        err.write("usage error: --level must be >= 1\n")
        return 2
    try:
        args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except CarpetError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
