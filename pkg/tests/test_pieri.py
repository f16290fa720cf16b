import pytest
from hypothesis import given, settings, strategies as st

from oracles import ssyt_poly
from skewpieri.classical import F_sum_poly, skew_pieri_classical, skew_schur_poly
from skewpieri.compositions import compositions, compositions_upto
from skewpieri.formal import FormalSum
from skewpieri.pieri import (
    PIERI_FAMILIES,
    PieriBounds,
    _unembed,
    embed_partition_pair,
    embedding_sides,
    multiplicity_survey,
    ncs_left_pieri,
    ncs_right_pieri,
    ncs_skew_pieri,
    one_row,
    partition_pairs,
    qs_pieri,
    qs_skew_pieri,
    skew_pairs,
    skew_schur_pieri,
    verify_duality_triangle,
    verify_pieri_theorem,
    verify_right_forms,
)
from skewpieri.posets import SkewShape
from skewpieri.qsym import F_product_sum, expand_F_sum_in_qs, qs_F

FLAVORS = ["row", "column"]
SMALL = PieriBounds(max_alpha=3, max_beta=2, max_n=2)
small = st.sampled_from(list(compositions_upto(4)))


@pytest.mark.parametrize("family", PIERI_FAMILIES)
def test_theorems_small_range(family):
    rep = verify_pieri_theorem(family, SMALL)
    assert rep.ok, rep.failures[:2]
    assert rep.checked > 0


def test_unknown_family():
    with pytest.raises(ValueError):
        verify_pieri_theorem("qs_diagonal")


def test_bad_arguments():
    with pytest.raises(ValueError):
        qs_pieri((1,), 0, "row")
    with pytest.raises(ValueError):
        ncs_right_pieri((1,), 1, "diagonal")
    with pytest.raises(ValueError):
        ncs_right_pieri((1,), 1, "row", form="other")
    with pytest.raises(ValueError):
        skew_schur_pieri((1,), (1,), 1, "row")
    with pytest.raises(ValueError):
        skew_schur_pieri((1, 2), (), 1, "row")


# -- single-shape rules -------------------------------------------------------------


def test_qs_pieri_trivial():
    assert qs_pieri((), 3, "row") == FormalSum.single((3,))
    assert qs_pieri((), 2, "column") == FormalSum.single((1, 1))
    assert one_row(3, "column") == (1, 1, 1)


@settings(max_examples=30)
@given(small, st.integers(1, 3), st.sampled_from(FLAVORS))
def test_qs_pieri_product(alpha, n, flavor):
    lhs = F_product_sum(qs_F(alpha), qs_F(one_row(n, flavor)))
    rhs = FormalSum()
    for g, c in qs_pieri(alpha, n, flavor).items():
        rhs = rhs + c * qs_F(g)
    assert lhs == rhs


def test_right_pieri_examples():
    assert ncs_right_pieri((3, 1, 3, 2), 3, "row") == FormalSum.count(
        [(3, 1, 3, 2, 3), (3, 3, 2, 4), (3, 1, 3, 1, 4), (3, 1, 2, 2, 4),
         (3, 1, 3, 5), (3, 2, 2, 5), (3, 1, 2, 1, 5), (3, 1, 2, 6)]
    )
    col = ncs_right_pieri((3, 1, 3, 2), 3, "column")
    assert len(col) == 11 and col.get((3, 1, 3, 2, 1, 1, 1)) == 1 and col.get((1, 4, 4, 3)) == 1


@settings(max_examples=40)
@given(small, st.integers(1, 4), st.sampled_from(FLAVORS))
def test_right_forms_agree(alpha, n, flavor):
    assert ncs_right_pieri(alpha, n, flavor) == ncs_right_pieri(alpha, n, flavor, "jdt")


def test_right_forms_and_triangle_small():
    assert verify_right_forms(5, 3).ok
    assert verify_duality_triangle(4).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_left_pieri_from_empty(n):
    assert ncs_left_pieri((), n, "row") == FormalSum.single((n,))
    assert ncs_left_pieri((), n, "column") == FormalSum.single((1,) * n)


def test_multiplicity_free_small():
    rep = multiplicity_survey(3, 2)
    assert rep.checked > 0 and rep.max_coefficient == 1 and not rep.above_one


# -- skew rules ---------------------------------------------------------------------


def test_skew_rule_example_counts():
    shape = SkewShape((1, 3, 2), (2, 1))
    row, col = qs_skew_pieri(shape, 2, "row"), qs_skew_pieri(shape, 2, "column")
    assert len(row) == 16 and len(col) == 18
    assert row[SkewShape((1, 3, 2), (1,))] == 1 == col[SkewShape((1, 3, 2), (1,))]
    assert sum(1 for c in row.values() if c < 0) == 8


def test_skew_pairs_are_comparable():
    pairs = list(skew_pairs(3, 2))
    assert ((2, 1), (1,)) in pairs and ((1, 3), (2, 1)) not in pairs
    assert all(SkewShape(a, b) for a, b in pairs)


def test_ncs_skew_example():
    assert ncs_skew_pieri((1, 3), (1,), 1, "row") == FormalSum(
        {((1, 3), ()): -1, ((1, 3, 1), (1,)): 1, ((1, 4), (1,)): 1, ((3, 2), (1,)): 1}
    )


def test_ncs_skew_empty_inner_is_right_pieri():
    for alpha in compositions_upto(3):
        for n in (1, 2):
            got = ncs_skew_pieri(alpha, (), n, "row")
            assert got == FormalSum({(g, ()): c for g, c in ncs_right_pieri(alpha, n, "row").items()})


# -- partitions ---------------------------------------------------------------------


def test_embedding():
    assert embed_partition_pair((2, 1), (1,)) == SkewShape((3, 2), (2, 1))
    assert embed_partition_pair((1,), ()) == SkewShape((2,), (1,))


@pytest.mark.parametrize("lam,mu", list(partition_pairs(4)))
def test_embedding_is_skew_schur(lam, mu):
    lhs, rhs = embedding_sides(lam, mu)
    assert lhs == rhs == FormalSum(ssyt_poly(lam, mu, max(sum(lam), 1)))


def test_skew_schur_pieri_small():
    assert skew_schur_pieri((1,), (), 1, "row") == FormalSum.count([((2,), ()), ((1, 1), ())])
    assert skew_schur_pieri((2, 1), (1,), 1, "row") == FormalSum(
        {((2, 1), ()): -1, ((2, 1, 1), (1,)): 1, ((2, 2), (1,)): 1, ((3, 1), (1,)): 1}
    )


def test_skew_schur_pieri_new_rows():
    # Each extra row in the product needs a term whose outer shape gains rows.
    got = skew_schur_pieri((1,), (), 3, "row")
    assert got == FormalSum.count([((4,), ()), ((3, 1), ())])
    got = skew_schur_pieri((1,), (), 3, "column")
    assert got == FormalSum.count([((2, 1, 1), ()), ((1, 1, 1, 1), ())])


@pytest.mark.parametrize("lam,mu", list(partition_pairs(4)))
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("flavor", FLAVORS)
def test_skew_schur_pieri_matches_classical(lam, mu, n, flavor):
    assert skew_schur_pieri(lam, mu, n, flavor) == skew_pieri_classical(lam, mu, n, flavor)


@pytest.mark.parametrize("lam,mu", list(partition_pairs(4)))
@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("flavor", FLAVORS)
def test_kept_terms_are_skew_schur(lam, mu, n, flavor):
    # Each kept embedded term is, as a function, the Schur function of its partition pair.
    m = sum(lam) + n
    for term, _ in qs_skew_pieri(embed_partition_pair(lam, mu), n, flavor).items():
        pair = _unembed(term, lam, mu, flavor)
        if pair is not None:
            lp, mm = pair
            assert F_sum_poly(qs_F(term.outer, term.inner), m) == skew_schur_poly(lp, mm, m)


def test_left_pieri_duality_example():
    # [s_d](s_(n) s_alpha) is the coefficient of qs_(n) in qs_{d // alpha}.
    for d in compositions(4):
        assert ncs_left_pieri((2, 1), 1, "row").get(d) == expand_F_sum_in_qs(qs_F(d, (2, 1))).get((1,))
