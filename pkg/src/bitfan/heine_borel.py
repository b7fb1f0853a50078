"""From bitstrings to [0, 1]: the binary-value map and finite subcovers of the unit interval."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .balls import Cylinder
from .bars import FuelExceeded, extract_finite_subbar
from .bitstring import EPB, normalize, parse_rational, render_prefix, render_rational


def _value(bits: str) -> Fraction:
    return Fraction(int(bits, 2), 1 << len(bits)) if bits else Fraction(0)


def iota(e: EPB) -> Fraction:
    """The number ``0.b1 b2 b3 ...`` in binary."""
    n = len(e.period)
    tail = Fraction(int(e.period, 2), (1 << n) - 1)
    return _value(e.head) + tail / (1 << len(e.head))


def iota_inv(x: Fraction) -> EPB:
    """Standard-form expansion of ``x`` (infinitely many zeros); ``1`` maps to ``(1)``."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"iota_inv needs 0 <= x <= 1, got {x}")
    if x == 1:
        return EPB("", "1")
    p, q = x.numerator, x.denominator
    seen: dict[int, int] = {}
    digits = []
    r = p
    while r not in seen:
        seen[r] = len(digits)
        r *= 2
        digits.append(str(r // q))
        r %= q
    start = seen[r]
    return normalize(EPB("".join(digits[:start]), "".join(digits[start:])))


def cylinder_to_interval(c: Cylinder) -> tuple[Fraction, Fraction]:
    lo = _value(c.stem)
    return lo, lo + Fraction(1, 1 << len(c.stem))


@dataclass(frozen=True)
class OpenInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    def __contains__(self, x) -> bool:
        return self.lo < x < self.hi

    def __str__(self) -> str:
        return f"{render_rational(self.lo)} {render_rational(self.hi)}"


@dataclass(frozen=True)
class CoverDiagnostic:
    unresolved_stem: str
    pinned_point: Fraction
    depth_reached: int


class NotCovered(Exception):
    """No finite subcover was certified down to the requested depth.

    Either [0, 1] has a real gap near ``diagnostic.pinned_point`` or the
    overlaps there are thinner than the depth can resolve.
    """

    def __init__(self, diagnostic: CoverDiagnostic):
        self.diagnostic = diagnostic
        super().__init__(
            f"not covered at depth {diagnostic.depth_reached}: "
            f"stem {render_prefix(diagnostic.unresolved_stem)}, "
            f"near {render_rational(diagnostic.pinned_point)}"
        )


def _holder(bounds: Sequence[tuple[int, int, int, int]], stem: str) -> int | None:
    # closed [v/2^k, (v+1)/2^k] strictly inside (ln/ld, hn/hd), cross-multiplied
    k = len(stem)
    v = int(stem, 2) if stem else 0
    for i, (ln, ld, hn, hd) in enumerate(bounds):
        if ln << k < v * ld and (v + 1) * hd < hn << k:
            return i
    return None


def heine_borel_subcover(intervals: Sequence[OpenInterval], depth: int) -> list[int]:
    """Indices of a finite subfamily of ``intervals`` covering [0, 1].

    A dyadic cylinder qualifies when its closed image sits inside a single
    open interval, so success is a certificate even at dyadic endpoints.
    Raises :class:`NotCovered` otherwise.
    """
    if not intervals:
        raise ValueError("need at least one interval")
    bounds = [(iv.lo.numerator, iv.lo.denominator, iv.hi.numerator, iv.hi.denominator) for iv in intervals]
    try:
        found = extract_finite_subbar(lambda s: _holder(bounds, s) is not None, depth)
    except FuelExceeded as exc:
        lo, hi = cylinder_to_interval(Cylinder(exc.unresolved))
        raise NotCovered(CoverDiagnostic(exc.unresolved, (lo + hi) / 2, depth)) from None
    return sorted({_holder(bounds, s) for s in found})


def verify_cover(intervals: Iterable[OpenInterval]) -> bool:
    """Exact sweep: does the union of the open intervals contain [0, 1]?"""
    intervals = list(intervals)
    point = Fraction(0)  # leftmost point of [0, 1] not yet known to be covered
    while point <= 1:
        reach = max((iv.hi for iv in intervals if iv.lo < point < iv.hi), default=None)
        if reach is None:
            return False
        point = reach
    return True


def read_intervals(lines: Iterable[str]) -> list[OpenInterval]:
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"invalid interval line {line!r} (expected 'lo hi')")
        out.append(OpenInterval(parse_rational(parts[0]), parse_rational(parts[1])))
    return out
