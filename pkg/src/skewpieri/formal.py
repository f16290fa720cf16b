"""Integer linear combinations of hashable symbols."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Callable, Hashable, Iterable, Iterator


def canonical_key(k) -> tuple:
    """Deterministic sort key for compositions, pairs of them and skew shapes."""
    if hasattr(k, "outer") and hasattr(k, "inner"):
        return (sum(k.outer), tuple(k.outer), sum(k.inner), tuple(k.inner))
    if isinstance(k, tuple) and all(isinstance(p, int) for p in k):
        return (sum(k), k)
    if isinstance(k, tuple):
        return tuple(canonical_key(x) for x in k)
    return (k,)


class FormalSum(Mapping):
    """Finitely supported map from symbols to nonzero integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple[Hashable, int]] | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, v in items:
                acc[k] = acc.get(k, 0) + v
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def single(cls, key: Hashable, coeff: int = 1) -> FormalSum:
        return cls({key: coeff})

    @classmethod
    def count(cls, keys: Iterable[Hashable]) -> FormalSum:
        return cls((k, 1) for k in keys)

    def __getitem__(self, key) -> int:
        return self._terms[key]

    def get(self, key, default: int = 0) -> int:
        return self._terms.get(key, default)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: Mapping) -> FormalSum:
        acc = dict(self._terms)
        for k, v in other.items():
            acc[k] = acc.get(k, 0) + v
        return FormalSum(acc)

    def __neg__(self) -> FormalSum:
        return FormalSum({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Mapping) -> FormalSum:
        return self + FormalSum(other).__neg__()

    def __mul__(self, scalar: int) -> FormalSum:
        return FormalSum({k: scalar * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def apply(self, f: Callable[[Hashable], Mapping]) -> FormalSum:
        """Linear extension of ``f`` from symbols to sums."""
        acc: dict = {}
        for k, v in self._terms.items():
            for k2, v2 in f(k).items():
                acc[k2] = acc.get(k2, 0) + v * v2
        return FormalSum(acc)

    def sorted_items(self) -> list[tuple]:
        return sorted(self._terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        body = " + ".join(f"{v}*{k}" for k, v in self.sorted_items())
        return f"FormalSum({body})"
