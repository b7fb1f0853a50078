"""Open balls under the bit-metric and the cylinders they coincide with."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .bitstring import EPB, beta, parse_rational, render_prefix, render_rational


@dataclass(frozen=True)
class Ball:
    """Open ball ``{x : beta(center, x) < radius}``."""

    center: EPB
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError(f"ball radius must be positive, got {self.radius}")

    @classmethod
    def parse(cls, text: str) -> "Ball":
        center, sep, radius = text.strip().partition("@")
        if not sep:
            raise ValueError(f"invalid ball {text!r} (expected CENTER@RADIUS)")
        return cls(EPB.parse(center), parse_rational(radius))

    def __str__(self) -> str:
        return f"{self.center}@{render_rational(self.radius)}"


@dataclass(frozen=True)
class Cylinder:
    """All infinite bitstrings that start with ``stem``."""

    stem: str = ""

    def __str__(self) -> str:
        return render_prefix(self.stem)


class Relation(enum.Enum):
    DISJOINT = "disjoint"
    SUBSET = "subset"
    SUPERSET = "superset"
    EQUAL = "equal"


def stem_length(radius: Fraction) -> int:
    """``max(0, floor(log2(1/radius)) + 1)``, by exact doubling."""
    radius = Fraction(radius)
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if radius > 1:
        return 0
    # floor(log2(q/p)) == floor(log2(q // p)) whenever q/p >= 1
    return (radius.denominator // radius.numerator).bit_length()


def ball_to_cylinder(b: Ball) -> Cylinder:
    return Cylinder(b.center.take(stem_length(b.radius)))


def cylinder_contains(c: Cylinder, x: EPB) -> bool:
    return x.take(len(c.stem)) == c.stem


def ball_contains(b: Ball, x: EPB) -> bool:
    return beta(b.center, x) < b.radius


def balls_relation(b1: Ball, b2: Ball) -> Relation:
    s1 = ball_to_cylinder(b1).stem
    s2 = ball_to_cylinder(b2).stem
    if s1 == s2:
        return Relation.EQUAL
    if s1.startswith(s2):
        return Relation.SUBSET
    if s2.startswith(s1):
        return Relation.SUPERSET
    return Relation.DISJOINT
