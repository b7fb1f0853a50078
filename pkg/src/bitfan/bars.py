"""Bars on the binary fan.

A set of finite prefixes is a *bar* when every infinite bitstring starts
with one of them.  :class:`BarTrie` stores a finite prefix set as a marked
binary trie; :func:`extract_finite_subbar` searches a possibly infinite set,
given as a membership predicate, for a finite sub-bar within a depth budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .balls import Ball, ball_to_cylinder
from .bitstring import EPB, normalize, parse_prefix, render_prefix


class FuelExceeded(Exception):
    """No finite sub-bar was certified within the depth budget.

    ``unresolved`` is the leftmost prefix at the budget depth that has no
    member of the set as an initial segment.  For a general membership
    predicate this only means "unknown", not "not a bar".
    """

    def __init__(self, unresolved: str, depth: int):
        self.unresolved = unresolved
        self.depth = depth
        super().__init__(f"no sub-bar within depth {depth}; unresolved {render_prefix(unresolved)}")


class _Node:
    __slots__ = ("children", "marked")

    def __init__(self):
        self.children: list[_Node | None] = [None, None]
        self.marked = False


class BarTrie:
    """A finite set of prefixes stored as a prefix-closed binary trie."""

    def __init__(self, prefixes: Iterable[str] = ()):
        self._root = _Node()
        self._count = 0
        for p in prefixes:
            self.add(p)

    def add(self, prefix: str) -> None:
        node = self._root
        for bit in prefix:
            if bit not in "01":
                raise ValueError(f"invalid bitstring {prefix!r}")
            i = int(bit)
            if node.children[i] is None:
                node.children[i] = _Node()
            node = node.children[i]
        if not node.marked:
            node.marked = True
            self._count += 1

    def __contains__(self, prefix: str) -> bool:
        node = self._root
        for bit in prefix:
            node = node.children[int(bit)] if bit in "01" else None
            if node is None:
                return False
        return node.marked

    def __len__(self) -> int:
        return self._count

    def __iter__(self) -> Iterator[str]:
        """Members in trie preorder (a prefix before its extensions, 0 before 1)."""
        stack = [(self._root, "")]
        while stack:
            node, path = stack.pop()
            if node.marked:
                yield path
            for i in (1, 0):
                child = node.children[i]
                if child is not None:
                    stack.append((child, path + str(i)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BarTrie):
            return NotImplemented
        return set(self) == set(other)

    def __repr__(self) -> str:
        return f"BarTrie({sorted_prefixes(self)!r})"

    @property
    def max_length(self) -> int:
        return max((len(p) for p in self), default=0)

    def has_member_prefix_of(self, bits: str) -> bool:
        """True iff some member is an initial segment of ``bits``."""
        node = self._root
        if node.marked:
            return True
        for bit in bits:
            node = node.children[int(bit)]
            if node is None:
                return False
            if node.marked:
                return True
        return False

    def _barred(self) -> dict[int, bool]:
        # node is barred iff marked, or both children exist and are barred
        barred: dict[int, bool] = {}
        stack = [(self._root, False)]
        while stack:
            node, expanded = stack.pop()
            if node.marked:
                barred[id(node)] = True
            elif expanded:
                zero, one = node.children
                barred[id(node)] = (
                    zero is not None and one is not None and barred[id(zero)] and barred[id(one)]
                )
            else:
                stack.append((node, True))
                stack.extend((c, False) for c in node.children if c is not None)
        return barred


def sorted_prefixes(prefixes: Iterable[str]) -> list[str]:
    """Shortlex order: by length, then lexicographically."""
    return sorted(prefixes, key=lambda p: (len(p), p))


def is_bar(B: BarTrie) -> bool:
    return B._barred()[id(B._root)]


def minimal_antichain(B: BarTrie) -> BarTrie:
    """Members of ``B`` with no proper initial segment in ``B``."""
    out = BarTrie()
    stack = [(B._root, "")]
    while stack:
        node, path = stack.pop()
        if node.marked:
            out.add(path)
            continue
        for i in (1, 0):
            child = node.children[i]
            if child is not None:
                stack.append((child, path + str(i)))
    return out


def is_antichain(prefixes: Iterable[str]) -> bool:
    ps = set(prefixes)
    return not any(p[:k] in ps for p in ps for k in range(len(p)))


@dataclass(frozen=True)
class EscapeWitness:
    witness: EPB
    checked_depth: int


def find_escape(B: BarTrie) -> EscapeWitness | None:
    """Leftmost infinite bitstring with no initial segment in ``B``, if any.

    The witness is ``p`` followed by zeros, where ``p`` is the lexicographically
    first length-``L`` string with no member prefix, ``L = B.max_length``.
    """
    barred = B._barred()
    if barred[id(B._root)]:
        return None
    depth = B.max_length
    node, path = B._root, ""
    while node is not None:
        zero, one = node.children
        if zero is None or not barred[id(zero)]:
            node, path = zero, path + "0"
        else:
            node, path = one, path + "1"
    path = path[:depth].ljust(depth, "0")
    return EscapeWitness(normalize(EPB(path, "0")), depth)


def extract_finite_subbar(oracle: Callable[[str], bool], depth: int) -> BarTrie:
    """Find a finite antichain bar made of prefixes accepted by ``oracle``.

    Explores the binary tree from the empty prefix: an accepted prefix is
    collected and not extended, a rejected one is extended by ``0`` then
    ``1``.  Raises :class:`FuelExceeded` with the leftmost rejected prefix of
    length ``depth`` if one is reached.

    The result equals that of a breadth-first sweep.  The traversal itself
    is depth-first so that a failure is found without expanding every
    rejected level above it.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    found = BarTrie()
    stack = [""]
    while stack:
        prefix = stack.pop()
        if oracle(prefix):
            found.add(prefix)
        elif len(prefix) >= depth:
            raise FuelExceeded(prefix, depth)
        else:
            stack.append(prefix + "1")
            stack.append(prefix + "0")
    return found


def _first_index(stems: Sequence[str], prefix: str) -> int | None:
    for i, s in enumerate(stems):
        if prefix.startswith(s):
            return i
    return None


def subcover_cantor(balls: Sequence[Ball], depth: int | None = None) -> list[int]:
    """Indices of a finite subfamily of ``balls`` covering all of Cantor space.

    With the default depth (the longest ball stem) a :class:`FuelExceeded`
    is a definite answer: the unresolved prefix is a cylinder missed by
    every ball.
    """
    if not balls:
        raise ValueError("need at least one ball")
    stems = [ball_to_cylinder(b).stem for b in balls]
    if depth is None:
        depth = max(len(s) for s in stems)
    members = BarTrie(stems)
    found = extract_finite_subbar(members.has_member_prefix_of, depth)
    return sorted({_first_index(stems, p) for p in found})


def read_prefix_set(lines: Iterable[str]) -> BarTrie:
    """Parse the prefix-set text format: one prefix per line, ``e`` for empty."""
    B = BarTrie()
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            B.add(parse_prefix(line))
    return B


def write_prefix_set(prefixes: Iterable[str]) -> str:
    return "".join(render_prefix(p) + "\n" for p in sorted_prefixes(prefixes))
