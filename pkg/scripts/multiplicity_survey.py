"""Survey the largest coefficient appearing in the straight Pieri expansions."""

from __future__ import annotations

import argparse

from skewpieri.pieri import multiplicity_survey


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-alpha", type=int, default=5, help="largest |alpha| surveyed")
    p.add_argument("--max-n", type=int, default=3, help="largest row or column length")
    args = p.parse_args(argv)
    rep = multiplicity_survey(args.max_alpha, args.max_n)
    print(f"{rep.checked} coefficients, max {rep.max_coefficient}")
    for name, (alpha, n, flavor), g, c in rep.above_one:
        print(f"  {name}{alpha} {flavor} n={n}: {g} has coefficient {c}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
