"""Acceptance criteria 1 through 9.

Each ``criterion_N`` returns ``(ok, detail)``.  Under pytest the results are
also printed as one PASS/FAIL line each at the end of the run; executed as a
script the module prints the same lines and exits nonzero on any failure.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import linear_poly, monomial_poly, poly_mul  # noqa: E402

from skewpieri.compositions import compositions, flatten  # noqa: E402
from skewpieri.dualgraphs import (  # noqa: E402
    IDENTITIES,
    apply_D,
    apply_Dt,
    apply_U,
    apply_Ut,
    commutator,
    verify_identity,
)
from skewpieri.formal import FormalSum  # noqa: E402
from skewpieri.lemmas import LEMMAS, LemmaBounds, check_lemma  # noqa: E402
from skewpieri.operators import add_box, append_row, jdt, jdt_set, remove_box, remove_set  # noqa: E402
from skewpieri.pieri import (  # noqa: E402
    PieriBounds,
    embedding_sides,
    ncs_right_pieri,
    one_row,
    partition_pairs,
    qs_pieri,
    qs_skew_pieri,
    verify_duality_triangle,
    verify_pieri_theorem,
    verify_right_forms,
)
from skewpieri.posets import SkewShape, chains_L, tableaux  # noqa: E402
from skewpieri.qsym import F_to_M_sum, M_product_sum, M_to_F_sum, qs_F, quasi_shuffle  # noqa: E402

SEED = 20240611
FLAVORS = ("row", "column")


def c(s: str) -> tuple[int, ...]:
    """Digit-string shorthand: ``c("213") == (2, 1, 3)``."""
    return tuple(int(ch) for ch in s)


def cf(s: str) -> tuple[int, ...]:
    return flatten(c(s))


def fs(*keys) -> FormalSum:
    return FormalSum.count(keys)


def skew(*terms) -> FormalSum:
    """``skew(("+", "132", "1"), ...)`` as a signed sum of skew shapes."""
    return FormalSum(
        {SkewShape(c(o), c(i)): (1 if sign == "+" else -1) for sign, o, i in terms}
    )


def _summarize(failed: list[str], checked: int) -> tuple[bool, str]:
    if failed:
        return False, f"{len(failed)} of {checked} checks failed: " + "; ".join(failed[:6])
    return True, f"{checked} checks, 0 failures"


# -- criterion 1 ------------------------------------------------------------------


def random_weak_composition(rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randint(0, 10) for _ in range(rng.randint(0, 16)))


def _u_I_identity(samples: int = 200) -> tuple[list, int]:
    rng = random.Random(SEED)
    I = (1, 4, 6, 7, 10)
    rest = tuple(x for x in range(1, 11) if x not in I)
    bad, defined = [], 0
    for _ in range(samples):
        w = random_weak_composition(rng)
        lhs, rhs = jdt_set(I, w), append_row(10, remove_set(rest, w))
        defined += lhs is not None or rhs is not None
        if lhs != rhs:
            bad.append((w, lhs, rhs))
    return bad, defined


def _example_checks():
    """Pairs (label, got, expected) for the worked examples."""
    yield "d1(212)", remove_box(1, c("212")), (2, 0, 2)
    yield "d2(212)", remove_box(2, c("212")), (2, 1, 1)
    yield "d[3](352412)", remove_set((1, 2, 3), c("352412")), (2, 5, 2, 4, 1, 0)
    yield "u4(352412)", jdt(4, c("352412")), (2, 5, 2, 4, 1, 0, 4)
    expected_t = {1: c("132312"), 2: c("32322"), 3: c("33312"), 4: c("42312")}
    for i in range(1, 9):
        yield f"t{i}(32312)", add_box(i, c("32312")), expected_t.get(i)
    a = FormalSum.single(c("213"))
    b = FormalSum.single(c("12"))
    yield "U(213)", apply_U(a), fs(c("2131"), c("232"), c("133"), c("214"))
    yield "Ut(213)", apply_Ut(a), fs(c("1213"), c("223"), c("313"), c("214"))
    yield "D(213)", apply_D(a), fs(c("23"), c("113"), c("212"))
    yield "Dt(12)", apply_Dt(b), fs(c("2"), c("11"), c("1"))
    # Intermediate terms are written with their zero parts; the operators flatten.
    yield "DU(213)", apply_D(apply_U(a)), fs(
        *map(cf, ["213", "1131", "2121", "2031", "2022", "33", "1032", "24", "114", "2103"])
    )
    yield "UD(213)", apply_U(apply_D(a)), fs(
        *map(cf, ["2031", "33", "24", "1131", "1032", "114", "2121", "2022", "2103"])
    )
    yield "(DU-UD)(213)", commutator("RcQc", c("213"))[0], a
    yield "(DtU-UDt)(12)", commutator("RcQct", c("12"))[0], fs(c("12"), c("2"), c("11"), c("1"))
    yield "(DUt-UtD)(213)", commutator("LcQc", c("213"))[0], a
    yield "(DtUt-UtDt)(12)", commutator("LcQct", c("12"))[0], fs(c("12"), c("2"), c("11"), c("1"))
    yield "s3132*s3", ncs_right_pieri(c("3132"), 3, "row"), fs(
        *map(c, ["31323", "3324", "31314", "31224", "3135", "3225", "31215", "3126"])
    )
    yield "s3132*s111", ncs_right_pieri(c("3132"), 3, "column"), fs(
        *map(c, ["3432", "2442", "1443", "33321", "32421", "31431",
                 "21441", "332211", "313311", "312411", "3132111"])
    )
    yield "qs_213//1", qs_F(c("213"), c("1")), fs(c("212"), c("221"), c("1211"))
    negatives = [("-", o, i) for o, i in [
        ("1132", "2"), ("1132", "11"), ("1312", "2"), ("1321", "11"),
        ("133", "2"), ("133", "11"), ("142", "2"), ("142", "11"),
    ]]
    yield "qs_132//21*qs_2", qs_skew_pieri(SkewShape(c("132"), c("21")), 2, "row"), skew(
        ("+", "132", "1"), *negatives,
        *[("+", o, "21") for o in ["1133", "1142", "1322", "1331", "1421", "143", "152"]],
    )
    yield "qs_132//21*qs_11", qs_skew_pieri(SkewShape(c("132"), c("21")), 2, "column"), skew(
        ("+", "132", "1"), *negatives,
        *[("+", o, "21") for o in ["13121", "11321", "11132", "1331", "1133",
                                   "233", "1421", "1142", "143"]],
    )


def criterion_1() -> tuple[bool, str]:
    failed, checked = [], 0
    for label, got, want in _example_checks():
        checked += 1
        if got != want:
            failed.append(f"{label}: got {got}, expected {want}")
    # Term counts, stated separately so a silent duplicate cannot hide.
    counts = {
        "s3132*s3": (len(ncs_right_pieri(c("3132"), 3, "row")), 8),
        "s3132*s111": (len(ncs_right_pieri(c("3132"), 3, "column")), 11),
        "qs_213//1": (len(tableaux(SkewShape(c("213"), c("1")))), 3),
        "skew row": (len(qs_skew_pieri(SkewShape(c("132"), c("21")), 2, "row")), 16),
        "skew column": (len(qs_skew_pieri(SkewShape(c("132"), c("21")), 2, "column")), 18),
    }
    for label, (got, want) in counts.items():
        checked += 1
        if got != want:
            failed.append(f"{label}: {got} terms, expected {want}")
    bad, defined = _u_I_identity()
    checked += 1
    if bad:
        w, lhs, rhs = bad[0]
        failed.append(
            f"u_I = a10 d_([10]-I) for I={{1,4,6,7,10}}: {len(bad)}/200 random inputs differ "
            f"({defined} not annihilated), "
            f"e.g. w={w}: {lhs} vs {rhs}"
        )
    return _summarize(failed, checked)


# -- criterion 2 ------------------------------------------------------------------


def criterion_2() -> tuple[bool, str]:
    bounds = LemmaBounds(max_len=5, max_part=5)
    failed, total = [], 0
    for name in LEMMAS:
        rep = check_lemma(name, bounds)
        total += rep.checked[name]
        if rep.failures:
            _, label, w, lhs, rhs = rep.failures[0]
            failed.append(
                f"{name}: {len(rep.failures)}/{rep.checked[name]} (e.g. {label} on {w}: {lhs} vs {rhs})"
            )
    ok = not failed
    detail = f"{len(LEMMAS)} identities, {total} cases, " + ("0 failures" if ok else "; ".join(failed))
    return ok, detail


# -- criterion 3 ------------------------------------------------------------------


def criterion_3() -> tuple[bool, str]:
    failed, checked = [], 0
    for which in IDENTITIES:
        rep = verify_identity(which, 7)
        checked += rep.checked
        failed += [f"{which} at {f[0]}" for f in rep.failures]
    return _summarize(failed, checked)


# -- criterion 4 ------------------------------------------------------------------


def _qs_product_quasi_shuffle(alpha, n, flavor) -> FormalSum:
    m_prod = M_product_sum(F_to_M_sum(qs_F(alpha)), F_to_M_sum(qs_F(one_row(n, flavor))))
    return M_to_F_sum(m_prod)


def _random_pair(rng: random.Random):
    total = rng.randint(0, 6)
    k = rng.randint(0, total)
    a = rng.choice(compositions(k))
    b = rng.choice(compositions(total - k))
    return a, b


def criterion_4() -> tuple[bool, str]:
    failed, checked = [], 0
    for s in range(6):
        for alpha in compositions(s):
            for n in (1, 2, 3):
                for flavor in FLAVORS:
                    lhs = _qs_product_quasi_shuffle(alpha, n, flavor)
                    rhs = FormalSum()
                    for g, k in qs_pieri(alpha, n, flavor).items():
                        rhs = rhs + k * qs_F(g)
                    checked += 1
                    if lhs != rhs:
                        failed.append(f"qs_{alpha}*{flavor}{n}")
    rng = random.Random(SEED)
    for _ in range(50):
        a, b = _random_pair(rng)
        m = max(len(a) + len(b), 1)
        lhs = poly_mul(monomial_poly(a, m), monomial_poly(b, m))
        rhs = linear_poly(quasi_shuffle(a, b), monomial_poly, m)
        checked += 1
        if lhs != rhs:
            failed.append(f"M_{a}*M_{b} in {m} variables")
    return _summarize(failed, checked)


# -- criteria 5 through 8 ---------------------------------------------------------


def _theorem(family: str, bounds: PieriBounds) -> tuple[list[str], int]:
    failed, checked = [], 0
    for flavor in FLAVORS:
        rep = verify_pieri_theorem(f"{family}_{flavor[:3]}", bounds)
        checked += rep.checked
        failed += [f"{family}_{flavor} at {f[0]}" for f in rep.failures]
    return failed, checked


def criterion_5() -> tuple[bool, str]:
    return _summarize(*_theorem("skew_qs", PieriBounds(max_alpha=5, max_beta=3, max_n=2)))


def criterion_6() -> tuple[bool, str]:
    forms = verify_right_forms(8, 4)
    tri = verify_duality_triangle(6)
    failed = [f"forms at {f[0]}" for f in forms.failures]
    failed += [f"triangle at {f[0]}" for f in tri.failures]
    return _summarize(failed, forms.checked + tri.checked)


def criterion_7() -> tuple[bool, str]:
    return _summarize(*_theorem("ncs_skew", PieriBounds(max_alpha=5, max_beta=2, max_n=2)))


def criterion_8() -> tuple[bool, str]:
    # Symbol-level match with the classical rule, then both sides as polynomials.
    failed, checked = _theorem("schur", PieriBounds(max_alpha=5, max_n=2))
    for lam, mu in partition_pairs(5):
        lhs, rhs = embedding_sides(lam, mu)
        checked += 1
        if lhs != rhs:
            failed.append(f"embedding of {lam}/{mu}")
    return _summarize(failed, checked)


# -- criterion 9 ------------------------------------------------------------------


def _path_counts(max_size: int) -> dict:
    """Number of saturated chains from the empty composition, by dynamic programming."""
    counts = {(): 1}
    layer = [()]
    for _ in range(max_size):
        nxt: dict = {}
        for b in layer:
            for i in range(1, max(b, default=0) + 2):
                up = add_box(i, b)
                if up is not None:
                    nxt[up] = nxt.get(up, 0) + counts[b]
        counts.update(nxt)
        layer = list(nxt)
    return counts


def criterion_9() -> tuple[bool, str]:
    paths = _path_counts(6)
    failed, checked, total = [], 0, 0
    for s in range(7):
        for alpha in compositions(s):
            chains = chains_L((), alpha)
            tabs = tableaux(SkewShape(alpha))
            checked += 1
            total += len(tabs)
            distinct = len({t.rows for t in tabs})
            standard = all(
                sorted(v for row in t.rows for v in row) == list(range(1, s + 1)) for t in tabs
            )
            if not (len(chains) == paths[alpha] == len(tabs) == distinct) or not standard:
                failed.append(f"{alpha}: {len(chains)} chains, {paths[alpha]} paths, {distinct} distinct")
    ok, detail = _summarize(failed, checked)
    return ok, f"{detail}, {total} tableaux"


# -- pytest entry points ----------------------------------------------------------


def _run(n, fn, record):
    ok, detail = fn()
    record(n, ok, detail)
    assert ok, detail


def test_criterion_1_worked_examples(acceptance_record):
    _run(1, criterion_1, acceptance_record)


def test_criterion_2_operator_identities(acceptance_record):
    _run(2, criterion_2, acceptance_record)


def test_criterion_3_dual_graphs(acceptance_record):
    _run(3, criterion_3, acceptance_record)


def test_criterion_4_qs_pieri(acceptance_record):
    _run(4, criterion_4, acceptance_record)


def test_criterion_5_skew_qs_pieri(acceptance_record):
    _run(5, criterion_5, acceptance_record)


def test_criterion_6_right_forms_and_duality(acceptance_record):
    _run(6, criterion_6, acceptance_record)


def test_criterion_7_ncs_skew_pieri(acceptance_record):
    _run(7, criterion_7, acceptance_record)


def test_criterion_8_skew_schur_pieri(acceptance_record):
    _run(8, criterion_8, acceptance_record)


def test_criterion_9_chains_and_tableaux(acceptance_record):
    _run(9, criterion_9, acceptance_record)


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9,
}

if __name__ == "__main__":
    all_ok = True
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        all_ok &= ok
        print(f"criterion {n} {'PASS' if ok else 'FAIL'}: {detail}", flush=True)
    sys.exit(0 if all_ok else 1)
