"""Box removing, appending, jeu de taquin and box adding operators.

Every operator acts on weak compositions and returns a tuple, or ``None`` when
the result is annihilated.  ``None`` is absorbing: feeding it to any operator
returns ``None`` again.  In a written product of operators the rightmost
factor acts first; the composite helpers below spell out the order they use.
"""

from __future__ import annotations

from typing import Callable, Iterable, Literal, Optional

from .compositions import WeakComposition

OperatorResult = Optional[WeakComposition]
Operator = Callable[[OperatorResult], OperatorResult]

Flavor = Literal["horizontal", "vertical"]
Side = Literal["right", "left"]


def _check_index(i: int) -> None:
    if i < 0:
        raise ValueError(f"operator index must be >= 0, got {i}")


def remove_box(i: int, w: OperatorResult) -> OperatorResult:
    """Subtract 1 from the rightmost part equal to ``i``."""
    _check_index(i)
    if w is None or i == 0:
        return w
    for pos in range(len(w) - 1, -1, -1):
        if w[pos] == i:
            return w[:pos] + (i - 1,) + w[pos + 1:]
    return None


def append_row(i: int, w: OperatorResult) -> OperatorResult:
    _check_index(i)
    if w is None:
        return None
    return w + (i,)


def remove_set(I: Iterable[int], w: OperatorResult) -> OperatorResult:
    """Apply ``remove_box`` for the elements of ``I``, largest first."""
    for i in sorted(set(I), reverse=True):
        w = remove_box(i, w)
        if w is None:
            return None
    return w


def jdt(i: int, w: OperatorResult) -> OperatorResult:
    """``append_row(i)`` after removing one box from each of the sizes ``i-1, ..., 1``."""
    _check_index(i)
    if w is None or i == 0:
        return w
    return append_row(i, remove_set(range(1, i), w))


def jdt_set(I: Iterable[int], w: OperatorResult) -> OperatorResult:
    """Apply ``jdt`` for the elements of ``I``, smallest first."""
    for i in sorted(set(I)):
        w = jdt(i, w)
        if w is None:
            return None
    return w


def add_box(i: int, w: OperatorResult) -> OperatorResult:
    """Prepend a part 1 (``i == 1``) or add 1 to the leftmost part equal to ``i - 1``."""
    _check_index(i)
    if w is None or i == 0:
        return w
    if i == 1:
        return (1,) + w
    for pos, p in enumerate(w):
        if p == i - 1:
            return w[:pos] + (i,) + w[pos + 1:]
    return None


def compose(*ops: Operator) -> Operator:
    """Operator product; the last argument acts first."""

    def run(w: OperatorResult) -> OperatorResult:
        for op in reversed(ops):
            w = op(w)
        return w

    return run


def d(i: int) -> Operator:
    return lambda w: remove_box(i, w)


def a(i: int) -> Operator:
    return lambda w: append_row(i, w)


def u(i: int) -> Operator:
    return lambda w: jdt(i, w)


def t(i: int) -> Operator:
    return lambda w: add_box(i, w)


def d_set(I: Iterable[int]) -> Operator:
    I = frozenset(I)
    return lambda w: remove_set(I, w)


def u_set(I: Iterable[int]) -> Operator:
    I = frozenset(I)
    return lambda w: jdt_set(I, w)


def _max_part(w: WeakComposition) -> int:
    return max(w, default=0)


def enumerate_removals(
    w: WeakComposition, k: int, flavor: Flavor
) -> list[tuple[tuple[int, ...], WeakComposition]]:
    """All ``k``-strips removable from ``w`` as ``(indices, result)`` pairs.

    Indices are listed as in the written product: strictly increasing for a
    horizontal strip, weakly decreasing for a vertical one.  In both cases the
    last listed index acts first.
    """
    if k < 0:
        raise ValueError("strip size must be >= 0")
    out: list[tuple[tuple[int, ...], WeakComposition]] = []

    # ``applied`` is in application order, i.e. the written order reversed.
    def rec(cur: WeakComposition, applied: list[int]) -> None:
        if len(applied) == k:
            out.append((tuple(reversed(applied)), cur))
            return
        top = _max_part(cur)
        if flavor == "horizontal":
            lo, hi = 1, (applied[-1] - 1 if applied else top)
        else:
            lo, hi = (applied[-1] if applied else 1), top
        for i in range(lo, hi + 1):
            nxt = remove_box(i, cur)
            if nxt is not None:
                applied.append(i)
                rec(nxt, applied)
                applied.pop()

    if flavor not in ("horizontal", "vertical"):
        raise ValueError(f"unknown flavor {flavor!r}")
    rec(tuple(w), [])
    return out


def enumerate_additions(
    w: WeakComposition, k: int, side: Side, flavor: Flavor
) -> list[tuple[tuple[int, ...], WeakComposition]]:
    """All ``k``-strips that can be added to ``w`` as ``(indices, result)`` pairs.

    ``side`` selects ``jdt`` (right) or ``add_box`` (left).  Indices are
    strictly increasing (horizontal) or weakly decreasing (vertical) and are
    applied in the listed order.
    """
    if k < 0:
        raise ValueError("strip size must be >= 0")
    if side == "right":
        op = jdt
    elif side == "left":
        op = add_box
    else:
        raise ValueError(f"unknown side {side!r}")
    if flavor not in ("horizontal", "vertical"):
        raise ValueError(f"unknown flavor {flavor!r}")
    out: list[tuple[tuple[int, ...], WeakComposition]] = []

    def rec(cur: WeakComposition, applied: list[int]) -> None:
        if len(applied) == k:
            out.append((tuple(applied), cur))
            return
        # Both operators annihilate once i - 1 exceeds every part.
        top = _max_part(cur) + 1
        if flavor == "horizontal":
            lo, hi = (applied[-1] + 1 if applied else 1), top
        else:
            lo, hi = 1, (min(applied[-1], top) if applied else top)
        for i in range(lo, hi + 1):
            nxt = op(i, cur)
            if nxt is not None:
                applied.append(i)
                rec(nxt, applied)
                applied.pop()

    rec(tuple(w), [])
    return out
