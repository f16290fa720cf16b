"""Weak compositions, compositions and descent sets.

Compositions are plain tuples of ints.  A weak composition may contain zeros;
a composition may not.  The empty tuple is the unique composition of size 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

WeakComposition = tuple[int, ...]
Composition = tuple[int, ...]

EMPTY: Composition = ()


def is_weak_composition(w: Sequence[int]) -> bool:
    return all(isinstance(p, int) and p >= 0 for p in w)


def is_composition(c: Sequence[int]) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in c)


def flatten(w: Sequence[int]) -> Composition:
    """Drop the zero parts of a weak composition."""
    return tuple(p for p in w if p)


def concat(a: Sequence[int], b: Sequence[int]) -> WeakComposition:
    return tuple(a) + tuple(b)


def underlying_partition(c: Sequence[int]) -> Composition:
    return tuple(sorted(flatten(c), reverse=True))


def size(w: Sequence[int]) -> int:
    return sum(w)


@dataclass(frozen=True)
class DescentSet:
    """A subset of ``[n-1]``; ``n`` is the size of the matching composition."""

    elements: frozenset[int]
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"ambient size must be nonnegative, got {self.n}")
        bad = [e for e in self.elements if not 1 <= e <= self.n - 1]
        if bad:
            raise ValueError(f"elements {sorted(bad)} outside [1, {self.n - 1}]")

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)


def set_of(c: Sequence[int]) -> DescentSet:
    """Partial sums of ``c`` excluding the total."""
    sums, total = [], 0
    for p in c[:-1]:
        total += p
        sums.append(total)
    return DescentSet(frozenset(sums), sum(c))


def comp_of(s: DescentSet) -> Composition:
    """Inverse of :func:`set_of`."""
    if s.n == 0:
        return EMPTY
    cuts = [0, *sorted(s.elements), s.n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def compositions(n: int) -> list[Composition]:
    """All compositions of ``n`` in lexicographic order."""
    if n == 0:
        return [EMPTY]
    out = []
    for k in range(n - 1, -1, -1):
        for cuts in combinations(range(1, n), k):
            out.append(comp_of(DescentSet(frozenset(cuts), n)))
    return sorted(out)


def compositions_upto(n: int) -> Iterator[Composition]:
    """Compositions of size ``0..n``, graded then lexicographic."""
    for m in range(n + 1):
        yield from compositions(m)


def bounded_compositions(n: int, max_len: int, max_part: int) -> list[Composition]:
    """Compositions of ``n`` with at most ``max_len`` parts each ``<= max_part``."""
    out: list[Composition] = []

    def rec(rem: int, prefix: list[int]) -> None:
        if rem == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_len:
            return
        for p in range(1, min(rem, max_part) + 1):
            prefix.append(p)
            rec(rem - p, prefix)
            prefix.pop()

    rec(n, [])
    return sorted(out)


def weak_compositions(max_len: int, max_part: int) -> Iterator[WeakComposition]:
    """Every weak composition of length ``<= max_len`` with parts ``<= max_part``."""
    for length in range(max_len + 1):
        yield from product(range(max_part + 1), repeat=length)


def partitions(n: int, max_part: int | None = None) -> list[Composition]:
    """Partitions of ``n`` as weakly decreasing tuples, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [EMPTY]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first, *rest))
    return out


def sort_key(c: Sequence[int]) -> tuple:
    """Canonical total order: by size, then lexicographic."""
    return (sum(c), tuple(c))


def format_composition(w: Sequence[int]) -> str:
    return ",".join(str(p) for p in w)


def parse_composition(text: str, weak: bool = False) -> WeakComposition:
    """Parse the canonical comma-separated form; ``""`` is the empty composition."""
    text = text.strip()
    if text in ("", "()", "∅"):
        return EMPTY
    text = text.strip("()")
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"not a composition: {text!r}") from None
    floor = 0 if weak else 1
    if any(p < floor for p in parts):
        kind = "weak composition" if weak else "composition"
        raise ValueError(f"not a {kind}: {text!r}")
    return parts
