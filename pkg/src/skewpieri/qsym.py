"""Quasisymmetric functions in the monomial and fundamental bases.

Homogeneous elements are :class:`QSymVector` values.  Internally most work is
done on :class:`FormalSum` objects keyed by compositions, which may mix
degrees; the basis is then implicit in the function name.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Literal, Mapping

from .compositions import Composition, DescentSet, comp_of, compositions, set_of
from .formal import FormalSum
from .posets import SkewShape, chains_L, descent_composition, tableau_of_chain

Basis = Literal["M", "F"]


@dataclass(frozen=True)
class QSymVector:
    """Homogeneous quasisymmetric function of degree ``degree`` in basis ``basis``."""

    basis: Basis
    degree: int
    coeffs: FormalSum = field(default_factory=FormalSum)

    def __post_init__(self) -> None:
        if self.basis not in ("M", "F"):
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "coeffs", FormalSum(self.coeffs))
        bad = [c for c in self.coeffs if sum(c) != self.degree]
        if bad:
            raise ValueError(f"terms {bad} are not of degree {self.degree}")

    @classmethod
    def of(cls, basis: Basis, coeffs: Mapping) -> QSymVector:
        """Infer the degree from the terms; the zero vector gets degree 0."""
        coeffs = FormalSum(coeffs)
        degrees = {sum(c) for c in coeffs}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous terms of degrees {sorted(degrees)}")
        return cls(basis, degrees.pop() if degrees else 0, coeffs)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [{"comp": list(c), "coeff": k} for c, k in self.coeffs.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> QSymVector:
        if isinstance(data, str):
            data = json.loads(data)
        terms = FormalSum((tuple(t["comp"]), t["coeff"]) for t in data["terms"])
        return cls(data["basis"], data["degree"], terms)


@dataclass(frozen=True)
class QSCoefficients:
    """Coordinates in the quasisymmetric Schur basis."""

    degree: int
    coeffs: FormalSum

    def to_F(self) -> QSymVector:
        out = FormalSum()
        for g, k in self.coeffs.items():
            out = out + k * qs_F(g)
        return QSymVector("F", self.degree, out)

    def to_json(self) -> dict:
        return {
            "basis": "qs",
            "degree": self.degree,
            "terms": [{"comp": list(c), "coeff": k} for c, k in self.coeffs.sorted_items()],
        }


# -- basis change -------------------------------------------------------------


@lru_cache(maxsize=None)
def _F_to_M_single(alpha: Composition) -> FormalSum:
    s = set_of(alpha)
    free = [j for j in range(1, s.n) if j not in s.elements]
    out = []
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            out.append(comp_of(DescentSet(s.elements | frozenset(extra), s.n)))
    return FormalSum.count(out)


@lru_cache(maxsize=None)
def _M_to_F_single(alpha: Composition) -> FormalSum:
    s = set_of(alpha)
    free = [j for j in range(1, s.n) if j not in s.elements]
    out: dict = {}
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            beta = comp_of(DescentSet(s.elements | frozenset(extra), s.n))
            out[beta] = (-1) ** k
    return FormalSum(out)


def F_to_M_sum(v: Mapping) -> FormalSum:
    return FormalSum(v).apply(_F_to_M_single)


def M_to_F_sum(v: Mapping) -> FormalSum:
    return FormalSum(v).apply(_M_to_F_single)


def _require(v: QSymVector, basis: Basis) -> None:
    if v.basis != basis:
        raise ValueError(f"expected a vector in the {basis} basis, got {v.basis}")


def F_to_M(v: QSymVector) -> QSymVector:
    _require(v, "F")
    return QSymVector("M", v.degree, F_to_M_sum(v.coeffs))


def M_to_F(v: QSymVector) -> QSymVector:
    _require(v, "M")
    return QSymVector("F", v.degree, M_to_F_sum(v.coeffs))


# -- products -----------------------------------------------------------------


@lru_cache(maxsize=None)
def quasi_shuffle(a: Composition, b: Composition) -> FormalSum:
    """``M_a * M_b`` in the monomial basis."""
    if not a:
        return FormalSum.single(b)
    if not b:
        return FormalSum.single(a)
    out: dict = {}
    for head, rest in (
        (a[0], quasi_shuffle(a[1:], b)),
        (b[0], quasi_shuffle(a, b[1:])),
        (a[0] + b[0], quasi_shuffle(a[1:], b[1:])),
    ):
        for c, k in rest.items():
            key = (head,) + c
            out[key] = out.get(key, 0) + k
    return FormalSum(out)


def M_product_sum(x: Mapping, y: Mapping) -> FormalSum:
    out: dict = {}
    for a, ka in x.items():
        for b, kb in y.items():
            for c, k in quasi_shuffle(a, b).items():
                out[c] = out.get(c, 0) + ka * kb * k
    return FormalSum(out)


def product(x: QSymVector, y: QSymVector) -> QSymVector:
    _require(x, "M")
    _require(y, "M")
    return QSymVector("M", x.degree + y.degree, M_product_sum(x.coeffs, y.coeffs))


def _word_with_descents(alpha: Composition, offset: int) -> list[int]:
    # Increasing within blocks, decreasing between them: descents exactly at set(alpha).
    word, top = [], offset + sum(alpha)
    for p in alpha:
        word.extend(range(top - p + 1, top + 1))
        top -= p
    return word


def _shuffles(u: list[int], v: list[int]):
    n = len(u) + len(v)
    for pos in combinations(range(n), len(u)):
        w, iu, iv, chosen = [], 0, 0, set(pos)
        for k in range(n):
            if k in chosen:
                w.append(u[iu])
                iu += 1
            else:
                w.append(v[iv])
                iv += 1
        yield w


@lru_cache(maxsize=None)
def fundamental_product(a: Composition, b: Composition) -> FormalSum:
    """``F_a * F_b`` via shuffles of words on disjoint alphabets with the given descents."""
    u = _word_with_descents(a, 0)
    v = _word_with_descents(b, sum(a))
    n = len(u) + len(v)
    out = []
    for w in _shuffles(u, v):
        des = frozenset(i + 1 for i in range(n - 1) if w[i] > w[i + 1])
        out.append(comp_of(DescentSet(des, n)))
    return FormalSum.count(out)


def F_product_sum(x: Mapping, y: Mapping) -> FormalSum:
    out: dict = {}
    for a, ka in x.items():
        for b, kb in y.items():
            for c, k in fundamental_product(a, b).items():
                out[c] = out.get(c, 0) + ka * kb * k
    return FormalSum(out)


# -- quasisymmetric Schur functions --------------------------------------------


@lru_cache(maxsize=None)
def qs_F(outer: Composition, inner: Composition = ()) -> FormalSum:
    """F-expansion of the skew quasisymmetric Schur function; zero unless inner <= outer."""
    out = [descent_composition(tableau_of_chain(ch)) for ch in chains_L(tuple(inner), tuple(outer))]
    return FormalSum.count(out)


def qs_in_F(shape: SkewShape) -> QSymVector:
    return QSymVector("F", shape.size, qs_F(shape.outer, shape.inner))


@lru_cache(maxsize=None)
def _F_in_qs(n: int) -> dict[Composition, FormalSum]:
    """Each ``F_b`` of degree ``n`` written in the quasisymmetric Schur basis."""
    # Rows start as (F-expansion of qs_g, label qs_g); Gauss-Jordan turns the
    # F-parts into unit vectors while the labels record the inverse.
    rows: list[tuple[dict, dict]] = [
        ({b: Fraction(k) for b, k in qs_F(g).items()}, {g: Fraction(1)}) for g in compositions(n)
    ]
    solved: dict[Composition, tuple[dict, dict]] = {}
    pending = rows
    while pending:
        # Prefer the sparsest row with a unit coefficient to keep fill-in low.
        pivot_row = min(
            pending,
            key=lambda r: (min(abs(x) for x in r[0].values()) != 1, len(r[0]), len(r[1])),
        )
        vec, lab = pivot_row
        if not vec:
            raise ArithmeticError(f"quasisymmetric Schur functions of degree {n} are dependent")
        b = min((k for k, x in vec.items() if abs(x) == 1), default=next(iter(vec)))
        scale = vec[b]
        vec = {k: x / scale for k, x in vec.items()}
        lab = {k: x / scale for k, x in lab.items()}
        pending = [r for r in pending if r is not pivot_row]

        def eliminate(r: tuple[dict, dict]) -> tuple[dict, dict]:
            c = r[0].get(b)
            if not c:
                return r
            v2, l2 = dict(r[0]), dict(r[1])
            for k, x in vec.items():
                v2[k] = v2.get(k, 0) - c * x
                if not v2[k]:
                    del v2[k]
            for k, x in lab.items():
                l2[k] = l2.get(k, 0) - c * x
                if not l2[k]:
                    del l2[k]
            return v2, l2

        pending = [eliminate(r) for r in pending]
        solved = {k: eliminate(r) for k, r in solved.items()}
        solved[b] = (vec, lab)
    out = {}
    for b, (vec, lab) in solved.items():
        assert vec == {b: 1}, "elimination did not reach the identity"
        if any(x.denominator != 1 for x in lab.values()):
            raise ArithmeticError(f"non-integral inverse at F_{b}")
        out[b] = FormalSum({g: int(x) for g, x in lab.items()})
    return out


def expand_F_sum_in_qs(v: Mapping) -> FormalSum:
    """qs-coordinates of an F-combination; degrees may be mixed."""
    out: dict = {}
    for b, k in v.items():
        for g, x in _F_in_qs(sum(b))[b].items():
            out[g] = out.get(g, 0) + k * x
    return FormalSum(out)


def expand_in_qs(v: QSymVector) -> QSCoefficients:
    _require(v, "F")
    return QSCoefficients(v.degree, expand_F_sum_in_qs(v.coeffs))


@lru_cache(maxsize=None)
def qs_product_in_qs(g: Composition, d: Composition) -> FormalSum:
    """``qs_g * qs_d`` in the quasisymmetric Schur basis."""
    return expand_F_sum_in_qs(F_product_sum(qs_F(g), qs_F(d)))


def structure_constant(g: Composition, d: Composition, b: Composition) -> int:
    """Coefficient of ``qs_b`` in ``qs_g * qs_d``."""
    if sum(g) + sum(d) != sum(b):
        raise ValueError("sizes do not add up")
    return qs_product_in_qs(tuple(g), tuple(d)).get(tuple(b))


@lru_cache(maxsize=None)
def _ncs_skew(outer: Composition, inner: Composition) -> FormalSum:
    n = sum(outer) - sum(inner)
    return FormalSum((g, structure_constant(g, inner, outer)) for g in compositions(n))


def ncs_skew_expand(outer: Composition, inner: Composition) -> QSCoefficients:
    """Noncommutative skew Schur function in the noncommutative Schur basis."""
    outer, inner = tuple(outer), tuple(inner)
    n = sum(outer) - sum(inner)
    if n < 0:
        raise ValueError("inner is larger than outer")
    return QSCoefficients(n, _ncs_skew(outer, inner))
