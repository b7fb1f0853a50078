"""CLI fixture matrix shared by the golden tests and the determinism check."""

import io
from pathlib import Path

from bitfan.cli import run

FIXTURES = Path(__file__).parent / "fixtures"


def fx(name):
    return str(FIXTURES / name)


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


# (argv, exit status, exact stdout); stdout None means "don't care"
SCENARIOS = [
    (["dist", "101(0)", "1011(1)"], 0, "1/8\n"),
    (["bar", "check", fx("nonbar.txt")], 1, "not a bar; escape 11(0)\n"),
    (["bar", "check", fx("bar.txt")], 0, "bar\n"),
    (["bar", "min", fx("redundant.txt")], 0, "0\n1\n"),
    (["bar", "escape", fx("nonbar.txt")], 1, "11(0) checked to depth 2\n"),
    (["bar", "extract", fx("nonbar.txt"), "--depth", "5"], 1, "fuel exceeded at depth 5; unresolved 11000\n"),
    (["cnf", "emit", fx("bar.txt")], 0, "p cnf 2 3\n1 0\n-1 2 0\n-1 -2 0\n"),
    (["cnf", "solve", fx("sat.cnf")], 0, "SAT\nv 1 2 0\n"),
    (["cover", "interval", fx("cover_ok.txt"), "--depth", "4"], 0, "0 1\n"),
    (["cover", "interval", fx("cover_gap.txt"), "--depth", "6"], 1, "not covered at depth 6; stem 011111 near 63/128\n"),
    (["cover", "cantor", fx("balls_gap.txt")], 1, "not covered; uncovered cylinder 11\n"),
    (["bar", "check", fx("malformed.txt")], 2, ""),
]

EXTRA = [
    (["cover", "cantor", fx("balls_ok.txt")], 0, "0 1\n"),
    (["iota-inv", "3/2"], 2, ""),
    (["iota-inv", "1/3"], 0, "(01)\n"),
    (["iota", "(01)"], 0, "1/3\n"),
    (["ball", "cyl", "0110(0)@1/4"], 0, "011\n"),
    (["cnf", "emit", fx("with_empty.txt")], 2, ""),
    (["cnf", "solve", fx("unsat.cnf")], 0, "UNSAT\n"),
    (["cnf", "solve", fx("nonbar.txt")], 0, "SAT\nv 1 2 0\n"),
    (["cnf", "solve", fx("with_empty.txt")], 0, "UNSAT\n"),
    (["cover", "verify", fx("cover_gap.txt")], 1, "not covered\n"),
    (["cover", "verify", fx("cover_ok.txt"), "--indices", "0", "1"], 0, "covered\n"),
    (["cover", "verify", fx("cover_ok.txt"), "--indices", "0", "2"], 1, "not covered\n"),
    (["cover", "verify", fx("cover_ok.txt"), "--indices", "7"], 2, ""),
    (["bar", "escape", fx("bar.txt")], 0, "none; the set is a bar\n"),
    (["bar", "extract", fx("redundant.txt")], 0, "0\n1\n"),
    (["--quiet", "bar", "check", fx("nonbar.txt")], 1, ""),
    (["bar", "check", fx("missing.txt")], 2, ""),
    (["dist", "1(0)", "12"], 2, ""),
    (["frobnicate"], 2, None),
    ([], 2, None),
]
