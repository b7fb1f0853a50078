"""Finite and eventually periodic bitstrings, and the bit-metric on them.

Finite prefixes are plain ``str`` objects over ``"0"``/``"1"``.  Infinite
sequences are restricted to the eventually periodic ones, ``head`` followed
by ``period`` repeated forever, which keeps equality and distance exactly
decidable.  All distances are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

INFINITE = math.inf

EMPTY_TOKEN = "e"

_BITS = re.compile(r"[01]*")
_EPB = re.compile(r"([01]*)\(([01]+)\)")
_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


def _check_bits(bits: str, what: str = "bitstring") -> str:
    if not isinstance(bits, str) or not _BITS.fullmatch(bits):
        raise ValueError(f"invalid {what} {bits!r}")
    return bits


def parse_prefix(text: str) -> str:
    """Parse a prefix token; ``"e"`` is the empty prefix."""
    text = text.strip()
    if text == EMPTY_TOKEN:
        return ""
    if not text:
        raise ValueError("invalid bitstring '' (write 'e' for the empty prefix)")
    return _check_bits(text)


def render_prefix(bits: str) -> str:
    return bits if bits else EMPTY_TOKEN


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a reduced fraction."""
    text = text.strip()
    if not _RATIONAL.fullmatch(text):
        raise ValueError(f"invalid rational {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"invalid rational {text!r} (zero denominator)") from None


def render_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class EPB:
    """The infinite bitstring ``head + period + period + ...``.

    Instances are not canonicalized on construction; use :func:`normalize`
    (or :meth:`parse`, which normalizes) when structural equality must mean
    equality of the denoted sequences.
    """

    head: str = ""
    period: str = "0"

    def __post_init__(self):
        _check_bits(self.head, "head")
        _check_bits(self.period, "period")
        if not self.period:
            raise ValueError("period must contain at least one bit")

    @classmethod
    def parse(cls, text: str) -> "EPB":
        m = _EPB.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"invalid bitstring {text!r} (expected HEAD(PERIOD))")
        return normalize(cls(m.group(1), m.group(2)))

    def take(self, n: int) -> str:
        """The first ``n`` bits as a prefix."""
        if n <= len(self.head):
            return self.head[:n]
        rest = n - len(self.head)
        reps = -(-rest // len(self.period))
        return self.head + (self.period * reps)[:rest]

    def __str__(self) -> str:
        return f"{self.head}({self.period})"


def _primitive_root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def normalize(e: EPB) -> EPB:
    """Return the canonical representative of ``e``.

    The period is reduced to its primitive root and trailing head bits are
    absorbed into the period by rotation for as long as they match.
    """
    head, period = e.head, _primitive_root(e.period)
    while head and head[-1] == period[-1]:
        head = head[:-1]
        period = period[-1] + period[:-1]
    return EPB(head, period)


def bit_at(e: EPB, i: int) -> int:
    """The ``i``-th bit of ``e``, counting from 1."""
    if i < 1:
        raise ValueError(f"bit index must be >= 1, got {i}")
    if i <= len(e.head):
        return int(e.head[i - 1])
    return int(e.period[(i - len(e.head) - 1) % len(e.period)])


def agreement_bound(a: EPB, b: EPB) -> int:
    """Number of leading bits after which agreement implies equality."""
    return max(len(a.head), len(b.head)) + math.lcm(len(a.period), len(b.period))


def lcp_length(a: EPB, b: EPB) -> int | float:
    """Length of the longest common prefix, or ``INFINITE`` if ``a == b`` as sequences."""
    n = agreement_bound(a, b)
    sa, sb = a.take(n), b.take(n)
    for k in range(n):
        if sa[k] != sb[k]:
            return k
    return INFINITE


def same_sequence(a: EPB, b: EPB) -> bool:
    return lcp_length(a, b) == INFINITE


def beta(a: EPB, b: EPB) -> Fraction:
    """The bit-metric: ``2**-k`` where ``k`` is the common-prefix length, 0 if equal."""
    k = lcp_length(a, b)
    if k == INFINITE:
        return Fraction(0)
    return Fraction(1, 1 << k)


def is_standard_form(e: EPB) -> bool:
    """True iff the (canonical) sequence has infinitely many zeros."""
    return "0" in e.period
