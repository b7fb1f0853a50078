"""Shared strategies and brute-force oracles.

The oracles here deliberately avoid the package's own helpers (``take``,
``lcp_length``, the trie) so they can check them independently.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from hypothesis import strategies as st

from bitfan.bitstring import EPB, normalize


def expand(e: EPB, n: int) -> list[int]:
    """First ``n`` bits, unrolled with itertools."""
    stream = itertools.chain(e.head, itertools.cycle(e.period))
    return [int(b) for b in itertools.islice(stream, n)]


def equality_bound(a: EPB, b: EPB) -> int:
    return len(a.head) + len(b.head) + math.lcm(len(a.period), len(b.period))


def same_sequence_oracle(a: EPB, b: EPB) -> bool:
    n = equality_bound(a, b)
    return expand(a, n) == expand(b, n)


def beta_oracle(a: EPB, b: EPB) -> Fraction:
    n = equality_bound(a, b)
    xa, xb = expand(a, n), expand(b, n)
    for k in range(n):
        if xa[k] != xb[k]:
            return Fraction(1, 2**k)
    return Fraction(0)


def iota_oracle(e: EPB) -> Fraction:
    """Sum the head bits, then the periodic tail as a geometric series term by term."""
    total = sum(Fraction(int(b), 2 ** (i + 1)) for i, b in enumerate(e.head))
    block = sum(Fraction(int(b), 2 ** (i + 1)) for i, b in enumerate(e.period))
    ratio = Fraction(1, 2 ** len(e.period))
    return total + block / (1 - ratio) / 2 ** len(e.head)


def brute_force_is_bar(prefixes) -> bool:
    ps = set(prefixes)
    if not ps:
        return False
    L = max(len(p) for p in ps)
    lengths = sorted({len(p) for p in ps})
    for bits in itertools.product("01", repeat=L):
        s = "".join(bits)
        if not any(s[:k] in ps for k in lengths):
            return False
    return True


def has_prefix_in(witness: EPB, prefixes, depth: int) -> bool:
    bits = "".join(map(str, expand(witness, depth)))
    return any(bits[:k] in prefixes for k in range(depth + 1))


bitstrings = st.text(alphabet="01", max_size=8)
periods = st.text(alphabet="01", min_size=1, max_size=4)
raw_epbs = st.builds(EPB, bitstrings, periods)
epbs = raw_epbs.map(normalize)
positive_rationals = st.builds(
    Fraction, st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=300)
)


def random_epb(rng: random.Random, max_head: int = 8, max_period: int = 4) -> EPB:
    head = "".join(rng.choice("01") for _ in range(rng.randint(0, max_head)))
    period = "".join(rng.choice("01") for _ in range(rng.randint(1, max_period)))
    return normalize(EPB(head, period))


def random_bar_antichain(rng: random.Random, max_depth: int, stop: float = 0.3) -> list[str]:
    """A random antichain bar: split the tree at random down to ``max_depth``."""
    out = []
    stack = [""]
    while stack:
        p = stack.pop()
        if len(p) == max_depth or (p and rng.random() < stop):
            out.append(p)
        else:
            stack += [p + "0", p + "1"]
    return out
