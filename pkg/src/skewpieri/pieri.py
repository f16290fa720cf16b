"""Pieri and skew Pieri expansions, plus verifiers binding each rule to an oracle.

Coefficients always count realizing index sequences.  Multiplicities are
therefore observable, and :func:`multiplicity_survey` reports any above one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Literal

from .classical import (
    F_sum_poly,
    complete_poly,
    elementary_poly,
    is_partition,
    is_strip,
    poly_mul,
    skew_pieri_classical,
    skew_schur_poly,
)
from .compositions import Composition, bounded_compositions, compositions, flatten, partitions
from .dualgraphs import IdentityReport
from .formal import FormalSum
from .operators import append_row, enumerate_additions, enumerate_removals, remove_set
from .posets import SkewShape, leq_L
from .qsym import F_product_sum, expand_F_sum_in_qs, ncs_skew_expand, qs_F

Flavor = Literal["row", "column"]
SignedSkewSum = FormalSum  # keyed by SkewShape, or by (outer, inner) pairs
PIERI_FAMILIES = (
    "qs_row", "qs_col",
    "skew_qs_row", "skew_qs_col",
    "ncs_right_row", "ncs_right_col",
    "ncs_left_row", "ncs_left_col",
    "ncs_skew_row", "ncs_skew_col",
    "schur_row", "schur_col",
)


def _strip(flavor: Flavor) -> str:
    if flavor == "row":
        return "horizontal"
    if flavor == "column":
        return "vertical"
    raise ValueError(f"unknown flavor {flavor!r}")


def _other(flavor: Flavor) -> Flavor:
    return "column" if flavor == "row" else "row"


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")


def one_row(n: int, flavor: Flavor) -> Composition:
    """``(n)`` for rows, ``(1^n)`` for columns."""
    return (n,) if flavor == "row" else (1,) * n


# -- strip counting -------------------------------------------------------------


@lru_cache(maxsize=None)
def strips_onto(alpha: Composition, k: int, kind: str) -> FormalSum:
    """Compositions ``a`` from which removing a ``k``-strip of ``kind`` leaves ``alpha``, counted by sequence."""
    if k == 0:
        return FormalSum.single(alpha)
    out: dict = {}
    top = max(alpha, default=0) + k
    for cand in bounded_compositions(sum(alpha) + k, len(alpha) + k, top):
        hits = sum(1 for _, w in enumerate_removals(cand, k, kind) if flatten(w) == alpha)
        if hits:
            out[cand] = hits
    return FormalSum(out)


@lru_cache(maxsize=None)
def strips_off(beta: Composition, k: int, kind: str) -> FormalSum:
    """Flattened results of removing a ``k``-strip of ``kind`` from ``beta``, counted by sequence."""
    return FormalSum.count(flatten(w) for _, w in enumerate_removals(beta, k, kind))


@lru_cache(maxsize=None)
def right_additions(alpha: Composition, k: int, kind: str) -> FormalSum:
    return FormalSum.count(flatten(w) for _, w in enumerate_additions(alpha, k, "right", kind))


@lru_cache(maxsize=None)
def right_additions_onto(beta: Composition, k: int, kind: str) -> FormalSum:
    """Compositions ``b`` such that adding a ``k``-right strip of ``kind`` to ``b`` gives ``beta``."""
    if k == 0:
        return FormalSum.single(beta)
    out: dict = {}
    # jdt never shortens a composition nor lowers its largest part.
    for cand in bounded_compositions(sum(beta) - k, len(beta), max(beta, default=0)):
        hits = right_additions(cand, k, kind).get(beta)
        if hits:
            out[cand] = hits
    return FormalSum(out)


# -- straight Pieri rules -----------------------------------------------------------


def qs_pieri(alpha: Composition, n: int, flavor: Flavor) -> FormalSum:
    """``qs_alpha * qs_(n)`` (row) or ``* qs_(1^n)`` (column) in the quasisymmetric Schur basis."""
    _check_n(n)
    return strips_onto(tuple(alpha), n, _strip(flavor))


def _right_row_simplified(alpha: Composition, n: int) -> FormalSum:
    out = []
    for i in range(n, n + max(alpha, default=0) + 1):
        for I in combinations(range(1, i), i - n):
            w = append_row(i, remove_set(I, alpha))
            if w is not None:
                out.append(flatten(w))
    return FormalSum.count(out)


def _submultisets(parts: list[int], k: int) -> Iterator[tuple[int, ...]]:
    """Distinct weakly increasing ``k``-submultisets of ``parts``."""
    seen = set()
    for pick in combinations(sorted(parts), k):
        if pick not in seen:
            seen.add(pick)
            yield pick


def _right_col_simplified(alpha: Composition, n: int) -> FormalSum:
    out = []
    for k in range(0, min(n, len(alpha)) + 1):
        for ms in _submultisets(list(alpha), k):
            # ms = (i_1 - 1 <= ... <= i_k - 1); the largest interval acts first.
            w = alpha
            for m in reversed(ms):
                w = remove_set(range(1, m + 1), w)
            if w is None:
                continue
            tail = tuple(m + 1 for m in reversed(ms)) + (1,) * (n - k)
            out.append(flatten(w + tail))
    return FormalSum.count(out)


def ncs_right_pieri(
    alpha: Composition, n: int, flavor: Flavor, form: Literal["simplified", "jdt"] = "simplified"
) -> FormalSum:
    """``s_alpha * s_(n)`` (row) or ``* s_(1^n)`` (column) in the noncommutative Schur basis."""
    _check_n(n)
    alpha = tuple(alpha)
    if form == "jdt":
        return right_additions(alpha, n, _strip(flavor))
    if form != "simplified":
        raise ValueError(f"unknown form {form!r}")
    if flavor == "row":
        return _right_row_simplified(alpha, n)
    _strip(flavor)
    return _right_col_simplified(alpha, n)


def ncs_left_pieri(alpha: Composition, n: int, flavor: Flavor) -> FormalSum:
    """``s_(n) * s_alpha`` (row) or ``s_(1^n) * s_alpha`` (column)."""
    _check_n(n)
    return FormalSum.count(
        flatten(w) for _, w in enumerate_additions(tuple(alpha), n, "left", _strip(flavor))
    )


# -- skew rules -------------------------------------------------------------------


def qs_skew_pieri(shape: SkewShape, n: int, flavor: Flavor) -> SignedSkewSum:
    """``qs_{outer//inner} * qs_(n)`` (or ``qs_(1^n)``) as a signed sum of skew shapes."""
    _check_n(n)
    up, down = _strip(flavor), _strip(_other(flavor))
    out: dict = {}
    for j in range(n + 1):
        tops = strips_onto(shape.outer, n - j, up)
        bottoms = strips_off(shape.inner, j, down)
        for a, ca in tops.items():
            for b, cb in bottoms.items():
                if leq_L(b, a):
                    key = SkewShape(a, b)
                    out[key] = out.get(key, 0) + (-1) ** j * ca * cb
    return FormalSum(out)


def embed_partition_pair(lam, mu) -> SkewShape:
    """The skew shape ``lam + 1^N // mu + 1^N`` with ``N = len(lam)``."""
    N = len(lam)
    outer = tuple(p + 1 for p in lam)
    inner = tuple(p + 1 for p in mu) + (1,) * (N - len(mu))
    return SkewShape(outer, inner)


def _unembed(term: SkewShape, lam, mu, flavor: Flavor):
    """Recover ``(lam+, mu-)`` from a term of the embedded expansion, or ``None``.

    The last ``N = len(lam)`` rows of the outer shape are ``lam+`` shifted by
    one column; any earlier rows are rows new to ``lam+``, which the left
    poset places on top, so they are read in reverse.  The inner shape must be
    ``mu- + 1^N``.  Only pairs where ``lam+/lam`` and ``mu/mu-`` are strips
    of the kinds the flavor prescribes are kept.
    """
    N = len(lam)
    a, b = term.outer, term.inner
    k = len(a) - N
    if k < 0 or len(b) != N or not is_partition(b) or any(p < 2 for p in a[k:]):
        return None
    lam_plus = tuple(p - 1 for p in a[k:]) + tuple(reversed(a[:k]))
    mu_minus = tuple(p - 1 for p in b if p > 1)
    up, down = ("horizontal", "vertical") if flavor == "row" else ("vertical", "horizontal")
    if not (is_partition(lam_plus) and is_strip(lam_plus, lam, up) and is_strip(mu, mu_minus, down)):
        return None
    return lam_plus, mu_minus


def skew_schur_pieri(lam, mu, n: int, flavor: Flavor) -> FormalSum:
    """``s_{lam/mu} * s_(n)`` (or ``s_(1^n)``) as a signed sum over partition pairs ``(lam+, mu-)``.

    Computed through the quasisymmetric skew rule on the embedded shape.
    Terms that do not come from a partition pair must cancel as functions;
    a :class:`ArithmeticError` is raised otherwise.
    """
    lam, mu = tuple(lam), tuple(mu)
    if not (is_partition(lam) and (is_partition(mu) or not mu)):
        raise ValueError("lam and mu must be partitions")
    if len(lam) <= len(mu):
        raise ValueError("need len(lam) > len(mu)")
    expansion = qs_skew_pieri(embed_partition_pair(lam, mu), n, flavor)
    kept: dict = {}
    leftover: dict = {}
    for term, c in expansion.items():
        pair = _unembed(term, lam, mu, flavor)
        if pair is None:
            for f, k in qs_F(term.outer, term.inner).items():
                leftover[f] = leftover.get(f, 0) + c * k
        else:
            kept[pair] = kept.get(pair, 0) + c
    if FormalSum(leftover):
        raise ArithmeticError(f"terms outside the partition form do not cancel: {FormalSum(leftover)}")
    return FormalSum(kept)


def ncs_skew_pieri(outer: Composition, inner: Composition, n: int, flavor: Flavor) -> SignedSkewSum:
    """``s_{outer/inner} * s_(n)`` (or ``s_(1^n)``) as a signed sum keyed by ``(outer+, inner-)`` pairs."""
    _check_n(n)
    outer, inner = tuple(outer), tuple(inner)
    up, down = _strip(flavor), _strip(_other(flavor))
    out: dict = {}
    for j in range(n + 1):
        if j > sum(inner):
            break
        tops = right_additions(outer, n - j, up)
        bottoms = right_additions_onto(inner, j, down)
        for a, ca in tops.items():
            for b, cb in bottoms.items():
                out[(a, b)] = out.get((a, b), 0) + (-1) ** j * ca * cb
    return FormalSum(out)


# -- verification -------------------------------------------------------------------


@dataclass(frozen=True)
class PieriBounds:
    max_alpha: int = 5
    max_beta: int = 3
    max_n: int = 3
    # Used by the right Pieri form comparison and the duality triangle.
    max_gamma: int = 6


def _s_product_right(v: FormalSum, n: int, flavor: Flavor) -> FormalSum:
    """Right multiplication by ``s_(n)`` (or ``s_(1^n)``) on an s-basis vector."""
    out = FormalSum()
    for g, c in v.items():
        out = out + c * ncs_right_pieri(g, n, flavor)
    return out


def _ncs_skew_vector(outer: Composition, inner: Composition) -> FormalSum:
    return ncs_skew_expand(outer, inner).coeffs


def _check_qs(alpha, n, flavor):
    lhs = F_product_sum(qs_F(alpha), qs_F(one_row(n, flavor)))
    rhs = FormalSum()
    for g, c in qs_pieri(alpha, n, flavor).items():
        rhs = rhs + c * qs_F(g)
    return lhs, rhs


def _check_skew_qs(alpha, beta, n, flavor):
    lhs = F_product_sum(qs_F(alpha, beta), qs_F(one_row(n, flavor)))
    rhs = FormalSum()
    for shape, c in qs_skew_pieri(SkewShape(alpha, beta), n, flavor).items():
        rhs = rhs + c * qs_F(shape.outer, shape.inner)
    return lhs, rhs


def _check_ncs_right(alpha, n, flavor):
    # [s_g](s_alpha s_(n)) is the coefficient of qs_alpha in qs_{g // (n)}.
    lhs = ncs_right_pieri(alpha, n, flavor)
    row = one_row(n, flavor)
    rhs = {}
    for g in compositions(sum(alpha) + n):
        c = expand_F_sum_in_qs(qs_F(g, row)).get(alpha)
        if c:
            rhs[g] = c
    return lhs, FormalSum(rhs)


def _check_ncs_left(alpha, n, flavor):
    # [s_d](s_(n) s_alpha) is the coefficient of qs_(n) in qs_{d // alpha}.
    lhs = ncs_left_pieri(alpha, n, flavor)
    row = one_row(n, flavor)
    rhs = {}
    for d in compositions(sum(alpha) + n):
        c = expand_F_sum_in_qs(qs_F(d, alpha)).get(row)
        if c:
            rhs[d] = c
    return lhs, FormalSum(rhs)


def _check_ncs_skew(alpha, beta, n, flavor):
    lhs = _s_product_right(_ncs_skew_vector(alpha, beta), n, flavor)
    rhs = FormalSum()
    for (a, b), c in ncs_skew_pieri(alpha, beta, n, flavor).items():
        rhs = rhs + c * _ncs_skew_vector(a, b)
    return lhs, rhs


def schur_polynomial_sides(lam, mu, n: int, flavor: Flavor, expansion: FormalSum):
    """``s_{lam/mu} * h_n`` (or ``e_n``) against the signed sum, in ``|lam| + n`` variables."""
    m = sum(lam) + n
    factor = complete_poly(n, m) if flavor == "row" else elementary_poly(n, m)
    lhs = poly_mul(skew_schur_poly(lam, mu, m), factor)
    rhs = FormalSum()
    for (lp, mm), c in expansion.items():
        rhs = rhs + c * skew_schur_poly(lp, mm, m)
    return lhs, rhs


def embedding_sides(lam, mu):
    """``s_{lam/mu}`` from semistandard tableaux against the embedded skew quasisymmetric Schur function."""
    m = max(sum(lam), 1)
    shape = embed_partition_pair(lam, mu)
    return skew_schur_poly(lam, mu, m), F_sum_poly(qs_F(shape.outer, shape.inner), m)


def _check_schur(lam, mu, n, flavor):
    got = skew_schur_pieri(lam, mu, n, flavor)
    want = skew_pieri_classical(lam, mu, n, flavor)
    if got != want:
        return got, want
    lhs, rhs = schur_polynomial_sides(lam, mu, n, flavor, got)
    return lhs, rhs


def partition_pairs(max_lam: int) -> Iterator[tuple[tuple, tuple]]:
    """Pairs ``mu`` inside ``lam`` with ``len(lam) > len(mu)``, ``1 <= |lam| <= max_lam``."""
    from .classical import contains

    for size in range(1, max_lam + 1):
        for lam in partitions(size):
            for msize in range(0, size + 1):
                for mu in partitions(msize):
                    if len(mu) < len(lam) and contains(lam, mu):
                        yield lam, mu


def skew_pairs(max_alpha: int, max_beta: int) -> Iterator[tuple[Composition, Composition]]:
    """Pairs ``beta <= alpha`` in the left poset."""
    for sa in range(0, max_alpha + 1):
        for alpha in compositions(sa):
            for sb in range(0, min(sa, max_beta) + 1):
                for beta in compositions(sb):
                    if leq_L(beta, alpha):
                        yield alpha, beta


def _cases(which: str, b: PieriBounds) -> Iterator[tuple[tuple, Callable]]:
    family, _, fl = which.rpartition("_")
    flavor: Flavor = "row" if fl == "row" else "column"
    ns = range(1, b.max_n + 1)
    if family == "qs":
        for alpha in (a for s in range(b.max_alpha + 1) for a in compositions(s)):
            for n in ns:
                yield (alpha, n, flavor), _check_qs
    elif family == "skew_qs":
        for alpha, beta in skew_pairs(b.max_alpha, b.max_beta):
            for n in ns:
                yield (alpha, beta, n, flavor), _check_skew_qs
    elif family in ("ncs_right", "ncs_left"):
        check = _check_ncs_right if family == "ncs_right" else _check_ncs_left
        for alpha in (a for s in range(b.max_alpha + 1) for a in compositions(s)):
            for n in ns:
                yield (alpha, n, flavor), check
    elif family == "ncs_skew":
        for sa in range(b.max_alpha + 1):
            for alpha in compositions(sa):
                for sb in range(min(sa, b.max_beta) + 1):
                    for beta in compositions(sb):
                        for n in ns:
                            yield (alpha, beta, n, flavor), _check_ncs_skew
    elif family == "schur":
        for lam, mu in partition_pairs(b.max_alpha):
            for n in ns:
                yield (lam, mu, n, flavor), _check_schur
    else:
        raise ValueError(f"unknown Pieri family {which!r}")


def verify_pieri_theorem(which: str, bounds: PieriBounds = PieriBounds()) -> IdentityReport:
    if which not in PIERI_FAMILIES:
        raise ValueError(f"unknown Pieri family {which!r}")
    report = IdentityReport(which, bounds.max_alpha)
    for args, check in _cases(which, bounds):
        lhs, rhs = check(*args)
        report.checked += 1
        if lhs != rhs:
            report.failures.append((args, lhs, rhs))
    return report


# -- multiplicities ------------------------------------------------------------------


@dataclass
class MultiplicityReport:
    checked: int = 0
    max_coefficient: int = 0
    above_one: list[tuple[str, tuple, Composition, int]] = field(default_factory=list)


def multiplicity_survey(max_alpha: int = 5, max_n: int = 3) -> MultiplicityReport:
    """Largest coefficient seen in ``qs_pieri`` and ``ncs_right_pieri`` (both forms) over the range."""
    rep = MultiplicityReport()
    engines: dict[str, Callable[[Composition, int, Flavor], FormalSum]] = {
        "qs_pieri": qs_pieri,
        "ncs_right_pieri": ncs_right_pieri,
        "ncs_right_pieri_jdt": lambda a, n, f: ncs_right_pieri(a, n, f, "jdt"),
        "ncs_left_pieri": ncs_left_pieri,
    }
    for s in range(max_alpha + 1):
        for alpha in compositions(s):
            for n in range(1, max_n + 1):
                for flavor in ("row", "column"):
                    for name, engine in engines.items():
                        for g, c in engine(alpha, n, flavor).items():
                            rep.checked += 1
                            rep.max_coefficient = max(rep.max_coefficient, c)
                            if c > 1:
                                rep.above_one.append((name, (alpha, n, flavor), g, c))
    return rep


def verify_right_forms(max_alpha: int = 8, max_n: int = 4) -> IdentityReport:
    """The simplified and jdt forms of the right Pieri rules agree."""
    report = IdentityReport("ncs_right_forms", max_alpha)
    for s in range(max_alpha + 1):
        for alpha in compositions(s):
            for n in range(1, max_n + 1):
                for flavor in ("row", "column"):
                    a = ncs_right_pieri(alpha, n, flavor, "simplified")
                    b = ncs_right_pieri(alpha, n, flavor, "jdt")
                    report.checked += 1
                    if a != b:
                        report.failures.append(((alpha, n, flavor), a, b))
    return report


def verify_duality_triangle(max_gamma: int = 6) -> IdentityReport:
    """``[s_g](s_alpha * s_(n))`` equals ``[qs_alpha] qs_{g // (n)}`` for every ``|g| <= max_gamma``."""
    report = IdentityReport("duality_triangle", max_gamma)
    for size in range(1, max_gamma + 1):
        for g in compositions(size):
            for n in range(1, size + 1):
                # Zero unless (n) <= g, which qs_F encodes by an empty chain set.
                via_qs = expand_F_sum_in_qs(qs_F(g, (n,)))
                for alpha in compositions(size - n):
                    lhs = ncs_right_pieri(alpha, n, "row").get(g)
                    rhs = via_qs.get(alpha)
                    report.checked += 1
                    if lhs != rhs:
                        report.failures.append(((g, alpha, n), lhs, rhs))
    return report
