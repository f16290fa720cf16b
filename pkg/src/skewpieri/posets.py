"""Composition posets, saturated chains in the left poset, skew composition tableaux."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .compositions import Composition, DescentSet, comp_of, flatten
from .formal import FormalSum
from .operators import add_box, jdt, remove_box, remove_set

INNER = None
Cell = Optional[int]


def covers_up_R(c: Composition) -> FormalSum:
    """Upper covers in the right poset: ``flatten(jdt(i, c))`` for ``i >= 1``."""
    out = []
    for i in range(1, max(c, default=0) + 2):
        w = jdt(i, c)
        if w is not None:
            out.append(flatten(w))
    return FormalSum.count(out)


def covers_up_L(c: Composition) -> FormalSum:
    out = []
    for i in range(1, max(c, default=0) + 2):
        w = add_box(i, c)
        if w is not None:
            out.append(w)
    return FormalSum.count(out)


def covers_down_Q(c: Composition) -> FormalSum:
    out = []
    for i in range(1, max(c, default=0) + 1):
        w = remove_box(i, c)
        if w is not None:
            out.append(flatten(w))
    return FormalSum.count(out)


def covers_down_Qt(c: Composition) -> FormalSum:
    """``flatten(remove_set(I, c))`` over every nonempty ``I``; coefficients count the ``I``."""
    top = max(c, default=0)
    out = []
    # Parts only shrink along remove_set, so I must lie inside [max part].
    for k in range(1, top + 1):
        for I in combinations(range(1, top + 1), k):
            w = remove_set(I, c)
            if w is not None:
                out.append(flatten(w))
    return FormalSum.count(out)


@lru_cache(maxsize=None)
def predecessors_L(c: Composition) -> tuple[tuple[int, Composition], ...]:
    """Pairs ``(i, b)`` with ``add_box(i, b) == c``."""
    out = []
    if c and c[0] == 1 and add_box(1, c[1:]) == c:
        out.append((1, c[1:]))
    for pos, p in enumerate(c):
        if p >= 2:
            b = c[:pos] + (p - 1,) + c[pos + 1:]
            if add_box(p, b) == c:
                out.append((p, b))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def leq_L(inner: Composition, outer: Composition) -> bool:
    """Order of the left poset: is there a saturated chain from ``inner`` up to ``outer``?"""
    inner, outer = tuple(inner), tuple(outer)
    if sum(inner) > sum(outer):
        return False
    if sum(inner) == sum(outer):
        return inner == outer
    return any(leq_L(inner, b) for _, b in predecessors_L(outer))


@dataclass(frozen=True)
class ChainL:
    """Saturated chain ``steps[0] < steps[1] < ...`` in the left poset.

    ``indices[k]`` is the ``add_box`` index taking ``steps[k]`` to ``steps[k+1]``.
    """

    steps: tuple[Composition, ...]
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.steps) - 1:
            raise ValueError("a chain needs one index per step")
        for i, lo, hi in zip(self.indices, self.steps, self.steps[1:]):
            if add_box(i, lo) != hi:
                raise ValueError(f"add_box({i}, {lo}) != {hi}")

    @property
    def inner(self) -> Composition:
        return self.steps[0]

    @property
    def outer(self) -> Composition:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.indices)


@lru_cache(maxsize=None)
def _chains_down(inner: Composition, outer: Composition) -> tuple[tuple[tuple[int, Composition], ...], ...]:
    # Each chain is a sequence of (index, composition reached) pairs, bottom up.
    if inner == outer:
        return ((),)
    if sum(inner) >= sum(outer):
        return ()
    out = []
    for i, b in predecessors_L(outer):
        if not leq_L(inner, b):
            continue
        for ch in _chains_down(inner, b):
            out.append(ch + ((i, outer),))
    return tuple(out)


def chains_L(inner: Composition, outer: Composition) -> list[ChainL]:
    """Every saturated chain from ``inner`` to ``outer`` in the left poset."""
    inner, outer = tuple(inner), tuple(outer)
    out = []
    for ch in _chains_down(inner, outer):
        steps = (inner,) + tuple(c for _, c in ch)
        out.append(ChainL(steps, tuple(i for i, _ in ch)))
    return out


@dataclass(frozen=True)
class SkewShape:
    """The skew composition diagram ``outer // inner``; requires inner <= outer in the left poset."""

    outer: Composition
    inner: Composition = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", tuple(self.outer))
        object.__setattr__(self, "inner", tuple(self.inner))
        if not leq_L(self.inner, self.outer):
            raise ValueError(f"{self.inner} is not below {self.outer} in the left poset")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def __str__(self) -> str:
        o = ",".join(map(str, self.outer))
        i = ",".join(map(str, self.inner))
        return f"({o})//({i})"


@dataclass(frozen=True)
class Tableau:
    """Standard skew composition tableau; ``None`` cells belong to the inner shape."""

    rows: tuple[tuple[Cell, ...], ...]
    shape: SkewShape = field(compare=False)

    @property
    def size(self) -> int:
        return self.shape.size

    def positions(self) -> dict[int, tuple[int, int]]:
        """Entry -> (row, column), both 0-based."""
        return {
            v: (r, col)
            for r, row in enumerate(self.rows)
            for col, v in enumerate(row)
            if v is not INNER
        }

    def render(self) -> str:
        width = max([len(str(self.size)), 1])
        lines = []
        for row in self.rows:
            cells = ["•".rjust(width) if v is INNER else str(v).rjust(width) for v in row]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def tableau_of_chain(ch: ChainL) -> Tableau:
    """Fill each box with ``m - k + 1`` where ``k`` is the step that created it."""
    m = len(ch)
    rows: list[list[Cell]] = [[INNER] * p for p in ch.inner]
    for k, i in enumerate(ch.indices, start=1):
        entry = m - k + 1
        if i == 1:
            rows.insert(0, [entry])
            continue
        for row in rows:
            if len(row) == i - 1:
                row.append(entry)
                break
        else:  # pragma: no cover - ChainL validation rules this out
            raise ValueError(f"no row of length {i - 1} at step {k}")
    return Tableau(tuple(tuple(r) for r in rows), SkewShape(ch.outer, ch.inner))


def descent_set(t: Tableau) -> DescentSet:
    """``j`` is a descent when ``j + 1`` sits weakly right of ``j``."""
    pos = t.positions()
    des = frozenset(j for j in range(1, t.size) if pos[j + 1][1] >= pos[j][1])
    return DescentSet(des, t.size)


def descent_composition(t: Tableau) -> Composition:
    return comp_of(descent_set(t))


def tableaux(shape: SkewShape) -> list[Tableau]:
    return [tableau_of_chain(ch) for ch in chains_L(shape.inner, shape.outer)]
