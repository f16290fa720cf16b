"""Operator identities, checked by brute force over bounded weak compositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .compositions import WeakComposition, flatten, weak_compositions
from .operators import (
    OperatorResult,
    add_box,
    append_row,
    jdt,
    jdt_set,
    remove_box,
    remove_set,
)

# A check maps (w, max_index) to the pairs of sides it compares, each tagged
# with a label naming the indices involved.
Sides = Iterator[tuple[str, OperatorResult, OperatorResult]]
Check = Callable[[WeakComposition, int], Sides]


@dataclass(frozen=True)
class LemmaBounds:
    max_len: int = 5
    max_part: int = 5
    max_index: int = 6
    # Compare results after dropping zero parts instead of literally.
    modulo_zeros: bool = False


@dataclass
class LemmaReport:
    bounds: LemmaBounds
    checked: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, str, WeakComposition, OperatorResult, OperatorResult]] = field(
        default_factory=list
    )

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        bad: dict[str, int] = {}
        for f in self.failures:
            bad[f[0]] = bad.get(f[0], 0) + 1
        lines = [f"{name}: {n} cases, {bad.get(name, 0)} failures" for name, n in self.checked.items()]
        lines.append(f"total: {sum(self.checked.values())} cases, {len(self.failures)} failures")
        return "\n".join(lines)


def _pos(m: int) -> range:
    return range(1, m + 1)


def _append_then_remove(w, m):
    for i in range(0, min(m, 6)):
        yield f"i={i}", append_row(i, w), remove_box(i + 1, append_row(i + 1, w))


def _telescoping_append(w, m):
    for i in _pos(min(m, 5)):
        for j in range(1, i + 1):
            yield f"j={j},i={i}", remove_set(range(j, i + 1), append_row(i, w)), append_row(j - 1, w)


def _remove_append_commute(w, m):
    for i in _pos(m):
        for j in _pos(m):
            if i != j:
                yield f"i={i},j={j}", remove_box(i, append_row(j, w)), append_row(j, remove_box(i, w))


def _far_removals_commute(w, m):
    for i in _pos(m):
        for j in _pos(m):
            if abs(i - j) >= 2:
                yield (
                    f"i={i},j={j}",
                    remove_box(i, remove_box(j, w)),
                    remove_box(j, remove_box(i, w)),
                )


def _braid_lower(w, m):
    for i in _pos(m - 1):
        lhs = remove_box(i, remove_box(i, remove_box(i + 1, w)))
        rhs = remove_box(i, remove_box(i + 1, remove_box(i, w)))
        yield f"i={i}", lhs, rhs


def _braid_upper(w, m):
    for i in _pos(m - 1):
        lhs = remove_box(i, remove_box(i + 1, remove_box(i + 1, w)))
        rhs = remove_box(i + 1, remove_box(i, remove_box(i + 1, w)))
        yield f"i={i}", lhs, rhs


def _jdt_remove_commute(w, m):
    for i in _pos(m):
        for j in _pos(m):
            if i != j:
                yield f"i={i},j={j}", jdt(i, remove_box(j, w)), remove_box(j, jdt(i, w))


def _jdt_remove_shift(w, m):
    for i in _pos(m - 1):
        yield f"i={i}", jdt(i, remove_box(i, w)), remove_box(i + 1, jdt(i + 1, w))


def _flat(r: OperatorResult) -> OperatorResult:
    return None if r is None else flatten(r)


def _jdt_set_form(w, m):
    # Each jdt after the first empties the row appended before it, leaving a
    # zero part that the closed form never produces.  Literal comparison
    # therefore fails whenever |I| >= 2 and both sides are defined; the
    # sides agree once zero parts are dropped (see ``modulo_zeros``).
    for k in _pos(m):
        for I in combinations(_pos(m), k):
            top = I[-1]
            rest = set(range(1, top + 1)) - set(I)
            yield f"I={set(I)}", jdt_set(I, w), append_row(top, remove_set(rest, w))


def _add_remove_commute(w, m):
    for i in _pos(m):
        for j in _pos(m):
            if i != j:
                yield f"i={i},j={j}", add_box(i, remove_box(j, w)), remove_box(j, add_box(i, w))


def _add_remove_same(w, m):
    for i in _pos(m):
        if i == 1:
            applies = 1 in w
        else:
            applies = i in w and (i - 1) in w
        if applies:
            yield f"i={i}", remove_box(i, add_box(i, w)), add_box(i, remove_box(i, w))


def _interval_removals_commute(w, m):
    for i in _pos(min(m, 5)):
        for j in _pos(min(m, 5)):
            yield (
                f"i={i},j={j}",
                remove_set(range(1, i + 1), remove_set(range(1, j + 1), w)),
                remove_set(range(1, j + 1), remove_set(range(1, i + 1), w)),
            )


_SINGLE_OPS = {
    "remove_box": remove_box,
    "append_row": append_row,
    "jdt": jdt,
    "add_box": add_box,
}


def _flatten_compatible(w, m):
    fw = flatten(w)
    for name, op in _SINGLE_OPS.items():
        for i in range(0, m + 1):
            yield f"{name}({i})", _flat(op(i, w)), _flat(op(i, fw))
    for k in range(0, m + 1):
        for I in combinations(_pos(m), k):
            for name, op in (("remove_set", remove_set), ("jdt_set", jdt_set)):
                yield f"{name}({set(I)})", _flat(op(I, w)), _flat(op(I, fw))


LEMMAS: dict[str, Check] = {
    "append_then_remove": _append_then_remove,
    "telescoping_append": _telescoping_append,
    "remove_append_commute": _remove_append_commute,
    "far_removals_commute": _far_removals_commute,
    "braid_lower": _braid_lower,
    "braid_upper": _braid_upper,
    "jdt_remove_commute": _jdt_remove_commute,
    "jdt_remove_shift": _jdt_remove_shift,
    "jdt_set_form": _jdt_set_form,
    "add_remove_commute": _add_remove_commute,
    "add_remove_same": _add_remove_same,
    "interval_removals_commute": _interval_removals_commute,
    "flatten_compatible": _flatten_compatible,
}


def check_lemma(name: str, bounds: LemmaBounds = LemmaBounds()) -> LemmaReport:
    report = LemmaReport(bounds)
    check = LEMMAS[name]
    norm = _flat if bounds.modulo_zeros else (lambda r: r)
    n = 0
    for w in weak_compositions(bounds.max_len, bounds.max_part):
        for label, lhs, rhs in check(w, bounds.max_index):
            n += 1
            if norm(lhs) != norm(rhs):
                report.failures.append((name, label, w, lhs, rhs))
    report.checked[name] = n
    return report


def verify_lemmas(bounds: LemmaBounds = LemmaBounds(), names=None) -> LemmaReport:
    report = LemmaReport(bounds)
    for name in names or LEMMAS:
        part = check_lemma(name, bounds)
        report.checked.update(part.checked)
        report.failures.extend(part.failures)
    return report
