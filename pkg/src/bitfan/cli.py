"""Command-line front end.

Exit status: 0 on a positive mathematical answer, 1 on a negative one
(not a bar, not covered, fuel exhausted), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence

from .balls import Ball, ball_to_cylinder
from .bars import (
    FuelExceeded,
    find_escape,
    extract_finite_subbar,
    is_bar,
    minimal_antichain,
    read_prefix_set,
    sorted_prefixes,
    subcover_cantor,
)
from .bitstring import EPB, beta, parse_rational, render_prefix, render_rational
from .heine_borel import NotCovered, heine_borel_subcover, iota, iota_inv, read_intervals, verify_cover
from .sat import dimacs_emit, dimacs_parse, dpll_solve, encode_bar_cnf

DEFAULT_DEPTH = 32


class _Out:
    def __init__(self, args, stream):
        self.json = args.json
        self.quiet = args.quiet
        self.stream = stream

    def emit(self, text: str, payload) -> None:
        if self.quiet:
            return
        if self.json:
            self.stream.write(json.dumps(payload) + "\n")
        else:
            self.stream.write(text if text.endswith("\n") else text + "\n")


def _read_lines(path: str) -> list[str]:
    with open(path) as fh:
        return fh.read().splitlines()


def _depth(args, default=DEFAULT_DEPTH):
    return default if args.depth is None else args.depth


def _indices_text(indices: list[int]) -> str:
    return " ".join(map(str, indices))


def cmd_dist(args, out: _Out) -> int:
    d = beta(EPB.parse(args.a), EPB.parse(args.b))
    out.emit(render_rational(d), {"distance": render_rational(d)})
    return 0


def cmd_ball_cyl(args, out: _Out) -> int:
    stem = ball_to_cylinder(Ball.parse(args.ball)).stem
    out.emit(render_prefix(stem), {"stem": render_prefix(stem)})
    return 0


def cmd_bar_check(args, out: _Out) -> int:
    B = read_prefix_set(_read_lines(args.file))
    if is_bar(B):
        out.emit("bar", {"is_bar": True})
        return 0
    esc = find_escape(B)
    out.emit(
        f"not a bar; escape {esc.witness}",
        {"is_bar": False, "escape": str(esc.witness), "checked_depth": esc.checked_depth},
    )
    return 1


def cmd_bar_min(args, out: _Out) -> int:
    members = sorted_prefixes(minimal_antichain(read_prefix_set(_read_lines(args.file))))
    out.emit("\n".join(map(render_prefix, members)), {"antichain": [render_prefix(p) for p in members]})
    return 0


def cmd_bar_escape(args, out: _Out) -> int:
    esc = find_escape(read_prefix_set(_read_lines(args.file)))
    if esc is None:
        out.emit("none; the set is a bar", {"escape": None})
        return 0
    out.emit(
        f"{esc.witness} checked to depth {esc.checked_depth}",
        {"escape": str(esc.witness), "checked_depth": esc.checked_depth},
    )
    return 1


def cmd_bar_extract(args, out: _Out) -> int:
    B = read_prefix_set(_read_lines(args.file))
    depth = _depth(args)
    try:
        found = extract_finite_subbar(B.__contains__, depth)
    except FuelExceeded as exc:
        stem = render_prefix(exc.unresolved)
        out.emit(
            f"fuel exceeded at depth {depth}; unresolved {stem}",
            {"fuel_exceeded": {"unresolved": stem, "depth": depth}},
        )
        return 1
    members = sorted_prefixes(found)
    out.emit("\n".join(map(render_prefix, members)), {"subbar": [render_prefix(p) for p in members]})
    return 0


def _is_dimacs(lines: list[str]) -> bool:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            return line[0] in "pc%"
    return False


def cmd_cnf_emit(args, out: _Out) -> int:
    text = dimacs_emit(encode_bar_cnf(read_prefix_set(_read_lines(args.file))))
    if not out.quiet:
        out.stream.write(json.dumps({"dimacs": text}) + "\n" if out.json else text)
    return 0


def cmd_cnf_solve(args, out: _Out) -> int:
    lines = _read_lines(args.file)
    if _is_dimacs(lines):
        f = dimacs_parse(lines)
    else:
        B = read_prefix_set(lines)
        if "" in B:
            out.emit("UNSAT", {"result": "UNSAT"})
            return 0
        f = encode_bar_cnf(B)
    model = dpll_solve(f)
    if model is None:
        out.emit("UNSAT", {"result": "UNSAT"})
        return 0
    lits = [v if bit else -v for v, bit in sorted(model.items())]
    out.emit("SAT\nv " + " ".join(map(str, lits + [0])), {"result": "SAT", "model": lits})
    return 0


def cmd_iota(args, out: _Out) -> int:
    x = iota(EPB.parse(args.epb))
    out.emit(render_rational(x), {"value": render_rational(x)})
    return 0


def cmd_iota_inv(args, out: _Out) -> int:
    e = iota_inv(parse_rational(args.x))
    out.emit(str(e), {"bits": str(e)})
    return 0


def _read_balls(path: str) -> list[Ball]:
    balls = []
    for line in _read_lines(path):
        line = line.split("#", 1)[0].strip()
        if line:
            balls.append(Ball.parse(line))
    return balls


def cmd_cover_cantor(args, out: _Out) -> int:
    balls = _read_balls(args.file)
    try:
        indices = subcover_cantor(balls, args.depth)
    except FuelExceeded as exc:
        stem = render_prefix(exc.unresolved)
        out.emit(
            f"not covered; uncovered cylinder {stem}",
            {"not_covered": {"stem": stem, "depth": exc.depth}},
        )
        return 1
    out.emit(_indices_text(indices), {"indices": indices})
    return 0


def cmd_cover_interval(args, out: _Out) -> int:
    intervals = read_intervals(_read_lines(args.file))
    try:
        indices = heine_borel_subcover(intervals, _depth(args))
    except NotCovered as exc:
        d = exc.diagnostic
        stem = render_prefix(d.unresolved_stem)
        point = render_rational(d.pinned_point)
        out.emit(
            f"not covered at depth {d.depth_reached}; stem {stem} near {point}",
            {"not_covered": {"stem": stem, "point": point, "depth": d.depth_reached}},
        )
        return 1
    out.emit(_indices_text(indices), {"indices": indices})
    return 0


def cmd_cover_verify(args, out: _Out) -> int:
    intervals = read_intervals(_read_lines(args.file))
    if args.indices is not None:
        for i in args.indices:
            if not 0 <= i < len(intervals):
                raise ValueError(f"interval index {i} out of range")
        intervals = [intervals[i] for i in args.indices]
    ok = verify_cover(intervals)
    out.emit("covered" if ok else "not covered", {"covered": ok})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted both before and after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="exit status only")
    common.add_argument(
        "--depth", type=int, default=argparse.SUPPRESS, help=f"search depth (default {DEFAULT_DEPTH})"
    )

    parser = argparse.ArgumentParser(
        prog="bitfan", description="Exact bars, bit-metric balls and finite subcovers.", parents=[common]
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = verbs.add_parser("dist", parents=[common], help="bit-metric distance of two HEAD(PERIOD) strings")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_dist)

    ball = verbs.add_parser("ball", help="ball operations").add_subparsers(dest="op", required=True)
    p = ball.add_parser("cyl", parents=[common], help="cylinder equal to CENTER@RADIUS")
    p.add_argument("ball")
    p.set_defaults(func=cmd_ball_cyl)

    bar = verbs.add_parser("bar", help="prefix-set operations").add_subparsers(dest="op", required=True)
    for name, func, text in [
        ("check", cmd_bar_check, "decide whether FILE is a bar"),
        ("min", cmd_bar_min, "prefix-minimal members of FILE"),
        ("escape", cmd_bar_escape, "an infinite bitstring avoiding FILE"),
        ("extract", cmd_bar_extract, "finite sub-bar search within --depth"),
    ]:
        p = bar.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    cnf = verbs.add_parser("cnf", help="SAT encoding").add_subparsers(dest="op", required=True)
    p = cnf.add_parser("emit", parents=[common], help="DIMACS for a prefix-set FILE")
    p.add_argument("file")
    p.set_defaults(func=cmd_cnf_emit)
    p = cnf.add_parser("solve", parents=[common], help="solve a DIMACS or prefix-set FILE")
    p.add_argument("file")
    p.set_defaults(func=cmd_cnf_solve)

    p = verbs.add_parser("iota", parents=[common], help="binary value of HEAD(PERIOD)")
    p.add_argument("epb")
    p.set_defaults(func=cmd_iota)
    p = verbs.add_parser("iota-inv", parents=[common], help="standard-form bits of a rational in [0,1]")
    p.add_argument("x")
    p.set_defaults(func=cmd_iota_inv)

    cover = verbs.add_parser("cover", help="finite subcovers").add_subparsers(dest="op", required=True)
    p = cover.add_parser("cantor", parents=[common], help="subcover of Cantor space by balls")
    p.add_argument("file")
    p.set_defaults(func=cmd_cover_cantor)
    p = cover.add_parser("interval", parents=[common], help="subcover of [0,1] by open intervals")
    p.add_argument("file")
    p.set_defaults(func=cmd_cover_interval)
    p = cover.add_parser("verify", parents=[common], help="check that intervals cover [0,1]")
    p.add_argument("file")
    p.add_argument("--indices", type=int, nargs="*", default=None)
    p.set_defaults(func=cmd_cover_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    for flag, default in (("json", False), ("quiet", False), ("depth", None)):
        if not hasattr(args, flag):
            setattr(args, flag, default)
    if args.depth is not None and args.depth < 0:
        stderr.write(f"error: invalid depth {args.depth}\n")
        return 2
    try:
        return args.func(args, _Out(args, stdout))
    except (ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
