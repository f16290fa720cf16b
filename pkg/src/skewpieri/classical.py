"""Partitions, classical strips and skew Schur polynomials built from semistandard tableaux.

Nothing here touches compositions or the quasisymmetric machinery, so it can
serve as an independent check on it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Literal, Sequence

from .compositions import Composition, partitions
from .formal import FormalSum

Partition = tuple[int, ...]
Polynomial = FormalSum  # keyed by exponent vectors of a fixed length
StripKind = Literal["horizontal", "vertical"]


def is_partition(p: Sequence[int]) -> bool:
    return all(x >= 1 for x in p) and all(a >= b for a, b in zip(p, p[1:]))


def _pad(p: Sequence[int], n: int) -> list[int]:
    return list(p) + [0] * (n - len(p))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, _pad(inner, len(outer))))


def is_strip(outer: Partition, inner: Partition, kind: StripKind) -> bool:
    """Horizontal: no two boxes of ``outer/inner`` share a column.  Vertical: no two share a row."""
    if not contains(outer, inner):
        return False
    n = len(outer)
    o, i = _pad(outer, n + 1), _pad(inner, n + 1)
    if kind == "horizontal":
        return all(i[r] >= o[r + 1] for r in range(n))
    return all(o[r] - i[r] <= 1 for r in range(n))


def add_strips(lam: Partition, k: int, kind: StripKind) -> list[Partition]:
    return [p for p in partitions(sum(lam) + k) if is_strip(p, lam, kind)]


def remove_strips(mu: Partition, k: int, kind: StripKind) -> list[Partition]:
    if k > sum(mu):
        return []
    return [p for p in partitions(sum(mu) - k) if is_strip(mu, p, kind)]


def skew_pieri_classical(lam: Partition, mu: Partition, n: int, flavor: str) -> FormalSum:
    """Signed sum of pairs ``(lam+, mu-)`` describing ``s_{lam/mu} * s_(n)`` or ``* s_(1^n)``."""
    up, down = ("horizontal", "vertical") if flavor == "row" else ("vertical", "horizontal")
    out: dict = {}
    for j in range(n + 1):
        for lp in add_strips(lam, n - j, up):
            for mm in remove_strips(mu, j, down):
                out[(lp, mm)] = out.get((lp, mm), 0) + (-1) ** j
    return FormalSum(out)


# -- polynomials ----------------------------------------------------------------


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return FormalSum(out)


def complete_poly(n: int, m: int) -> Polynomial:
    """``h_n`` in ``m`` variables."""
    out = []
    for idx in combinations_with_replacement(range(m), n):
        e = [0] * m
        for v in idx:
            e[v] += 1
        out.append(tuple(e))
    return FormalSum.count(out)


def elementary_poly(n: int, m: int) -> Polynomial:
    """``e_n`` in ``m`` variables."""
    out = []
    for idx in combinations(range(m), n):
        e = [0] * m
        for v in idx:
            e[v] = 1
        out.append(tuple(e))
    return FormalSum.count(out)


@lru_cache(maxsize=None)
def skew_schur_poly(lam: Partition, mu: Partition, m: int) -> Polynomial:
    """``s_{lam/mu}(x_1..x_m)`` summed over semistandard fillings; zero unless ``mu`` sits inside ``lam``."""
    lam, mu = tuple(lam), tuple(mu)
    if not contains(lam, mu):
        return FormalSum()
    inner = _pad(mu, len(lam))
    out: dict = {}
    rows: list[list[int]] = []  # entries of each row, indexed by column

    def fill_row(r: int, exps: list[int]) -> None:
        if r == len(lam):
            key = tuple(exps)
            out[key] = out.get(key, 0) + 1
            return
        cols = range(inner[r], lam[r])
        row = [0] * lam[r]

        def place(ci: int, lo: int) -> None:
            if ci == len(cols):
                rows.append(row[:])
                fill_row(r + 1, exps)
                rows.pop()
                return
            c = cols[ci]
            floor = lo
            if r > 0 and c < lam[r - 1] and c >= inner[r - 1]:
                floor = max(floor, rows[r - 1][c] + 1)
            for v in range(floor, m + 1):
                row[c] = v
                exps[v - 1] += 1
                place(ci + 1, v)
                exps[v - 1] -= 1

        place(0, 1)

    fill_row(0, [0] * m)
    return FormalSum(out)


def fundamental_poly(alpha: Composition, m: int) -> Polynomial:
    """``F_alpha(x_1..x_m)``: weakly increasing index words, strict at the partial sums of ``alpha``."""
    n = sum(alpha)
    if n == 0:
        return FormalSum.single((0,) * m)
    cuts, total = set(), 0
    for p in alpha[:-1]:
        total += p
        cuts.add(total)
    out = []

    def rec(pos: int, last: int, e: list[int]) -> None:
        if pos == n:
            out.append(tuple(e))
            return
        lo = last + 1 if pos in cuts else max(last, 1)
        for v in range(lo, m + 1):
            e[v - 1] += 1
            rec(pos + 1, v, e)
            e[v - 1] -= 1

    rec(0, 1, [0] * m)
    return FormalSum.count(out)


def F_sum_poly(v: FormalSum, m: int) -> Polynomial:
    out = FormalSum()
    for a, k in v.items():
        out = out + k * fundamental_poly(a, m)
    return out
