"""Print the worked expansions: operator values, poset covers, Pieri rules and skew Pieri rules."""

from __future__ import annotations

import argparse

from skewpieri.cli import render_terms
from skewpieri.dualgraphs import IDENTITIES, commutator
from skewpieri.formal import FormalSum
from skewpieri.operators import add_box, jdt, remove_box, remove_set
from skewpieri.pieri import ncs_right_pieri, qs_skew_pieri
from skewpieri.posets import SkewShape, covers_down_Q, covers_down_Qt, covers_up_L, covers_up_R
from skewpieri.qsym import qs_F


def section(title: str, body: str) -> None:
    print(f"== {title}\n{body}\n")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--only", choices=["operators", "graphs", "pieri", "skew"], help="print one group")
    args = p.parse_args(argv)
    groups = [args.only] if args.only else ["operators", "graphs", "pieri", "skew"]

    if "operators" in groups:
        lines = [
            f"d1(2,1,2) = {remove_box(1, (2, 1, 2))}",
            f"d2(2,1,2) = {remove_box(2, (2, 1, 2))}",
            f"d[3](3,5,2,4,1,2) = {remove_set((1, 2, 3), (3, 5, 2, 4, 1, 2))}",
            f"u4(3,5,2,4,1,2) = {jdt(4, (3, 5, 2, 4, 1, 2))}",
        ]
        lines += [f"t{i}(3,2,3,1,2) = {add_box(i, (3, 2, 3, 1, 2))}" for i in range(1, 6)]
        section("operators", "\n".join(lines))

    if "graphs" in groups:
        lines = [
            f"U(2,1,3)  = {covers_up_R((2, 1, 3))}",
            f"Ut(2,1,3) = {covers_up_L((2, 1, 3))}",
            f"D(2,1,3)  = {covers_down_Q((2, 1, 3))}",
            f"Dt(1,2)   = {covers_down_Qt((1, 2))}",
        ]
        for which in IDENTITIES:
            c = (1, 2) if which.endswith("Qct") else (2, 1, 3)
            lhs, rhs = commutator(which, c)
            lines.append(f"{which} on {c}: {lhs}  (expected {rhs})")
        section("dual graphs", "\n".join(lines))

    if "pieri" in groups:
        for flavor in ("row", "column"):
            terms = ncs_right_pieri((3, 1, 3, 2), 3, flavor)
            section(f"s_3132 * {flavor} of 3 ({len(terms)} terms)", render_terms(terms))
        f = FormalSum(qs_F((2, 1, 3), (1,)))
        section("qs_(2,1,3)//(1) in F", render_terms(f))

    if "skew" in groups:
        for flavor in ("row", "column"):
            terms = qs_skew_pieri(SkewShape((1, 3, 2), (2, 1)), 2, flavor)
            section(f"qs_132//21 * {flavor} of 2 ({len(terms)} terms)", render_terms(terms))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
