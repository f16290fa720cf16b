"""Command line front end: ``python -m skewpieri`` or the ``skewpieri`` script."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .compositions import format_composition, parse_composition
from .dualgraphs import IDENTITIES, POSETS, export_dot, verify_identity
from .formal import FormalSum
from .lemmas import LEMMAS, LemmaBounds, check_lemma
from .operators import add_box, append_row, jdt, jdt_set, remove_box, remove_set
from .pieri import (
    PIERI_FAMILIES,
    PieriBounds,
    multiplicity_survey,
    ncs_left_pieri,
    ncs_right_pieri,
    ncs_skew_pieri,
    qs_pieri,
    qs_skew_pieri,
    verify_duality_triangle,
    verify_pieri_theorem,
    verify_right_forms,
)
from .posets import SkewShape, descent_composition, leq_L, tableaux
from .qsym import expand_in_qs, qs_in_F


@dataclass(frozen=True)
class CliConfig:
    max_size: int = 7
    max_n: int = 3
    output_format: str = "text"
    parallelism: int = 1

    def __post_init__(self) -> None:
        if self.max_size < 1 or self.max_n < 1 or self.parallelism < 1:
            raise ValueError("bounds and worker count must be positive")
        if self.output_format not in ("text", "json", "dot"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def show(c: Sequence[int]) -> str:
    return f"({format_composition(c)})"


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- op -----------------------------------------------------------------------------

_SINGLE = {"d": remove_box, "a": append_row, "u": jdt, "t": add_box}
_SET = {"dI": remove_set, "uI": jdt_set}


def cmd_op(args) -> int:
    w = parse_composition(args.composition, weak=args.weak)
    if args.operator in _SET:
        index = parse_composition(args.index)
        result = _SET[args.operator](index, w)
    else:
        index = int(args.index)
        if index < 0:
            raise ValueError("operator index must be >= 0")
        result = _SINGLE[args.operator](index, w)
    if result is None:
        text, flat = "0", None
    else:
        flat = tuple(p for p in result if p)
        text = format_composition(result)
        if flat != result:
            text += f" (flattened: {format_composition(flat)})"
    _emit(args, text, {
        "operator": args.operator,
        "index": list(index) if isinstance(index, tuple) else index,
        "input": list(w),
        "result": None if result is None else list(result),
        "flattened": None if flat is None else list(flat),
    })
    return 0


# -- expansions ---------------------------------------------------------------------


def render_terms(terms: FormalSum) -> str:
    lines = []
    for key, c in terms.sorted_items():
        if isinstance(key, SkewShape):
            label = f"{show(key.outer)}//{show(key.inner)}"
        elif key and isinstance(key[0], tuple):
            label = f"{show(key[0])}//{show(key[1])}"
        else:
            label = show(key)
        lines.append(f"{label}: {c}")
    return "\n".join(lines) if lines else "0"


def expansion_json(lhs: dict, terms: FormalSum) -> dict:
    rows = []
    for key, c in terms.sorted_items():
        if isinstance(key, SkewShape):
            rows.append({"coeff": c, "outer": list(key.outer), "inner": list(key.inner)})
        elif key and isinstance(key[0], tuple):
            rows.append({"coeff": c, "outer": list(key[0]), "inner": list(key[1])})
        else:
            rows.append({"coeff": c, "comp": list(key)})
    return {"lhs": lhs, "terms": rows}


def parse_expansion_json(data: dict | str) -> FormalSum:
    """Inverse of :func:`expansion_json` on the term list; skew terms come back as pairs."""
    if isinstance(data, str):
        data = json.loads(data)
    out = []
    for t in data["terms"]:
        key = tuple(t["comp"]) if "comp" in t else (tuple(t["outer"]), tuple(t["inner"]))
        out.append((key, t["coeff"]))
    return FormalSum(out)


def cmd_pieri(args) -> int:
    alpha = parse_composition(args.alpha)
    n = _positive(args.n)
    if args.family == "qs":
        terms = qs_pieri(alpha, n, args.flavor)
    elif args.family == "ncs-right":
        terms = ncs_right_pieri(alpha, n, args.flavor, args.form)
    else:
        terms = ncs_left_pieri(alpha, n, args.flavor)
    lhs = {"family": args.family, "flavor": args.flavor, "alpha": list(alpha), "n": n}
    _emit(args, render_terms(terms), expansion_json(lhs, terms))
    return 0


def cmd_skew_pieri(args) -> int:
    outer, inner = parse_composition(args.outer), parse_composition(args.inner)
    n = _positive(args.n)
    if args.family == "qs":
        terms = qs_skew_pieri(SkewShape(outer, inner), n, args.flavor)
    else:
        terms = ncs_skew_pieri(outer, inner, n, args.flavor)
    lhs = {"family": args.family, "flavor": args.flavor, "outer": list(outer),
           "inner": list(inner), "n": n}
    _emit(args, render_terms(terms), expansion_json(lhs, terms))
    return 0


def cmd_expand(args) -> int:
    shape = SkewShape(parse_composition(args.outer), parse_composition(args.inner))
    v = qs_in_F(shape)
    if args.basis == "qs":
        coeffs = expand_in_qs(v)
        _emit(args, render_terms(coeffs.coeffs), coeffs.to_json())
    else:
        _emit(args, render_terms(v.coeffs), v.to_json())
    return 0


def cmd_tableaux(args) -> int:
    outer, inner = parse_composition(args.outer), parse_composition(args.inner)
    if not leq_L(inner, outer):
        raise ValueError(f"{show(inner)} is not below {show(outer)} in the left poset")
    ts = tableaux(SkewShape(outer, inner))
    blocks, payload = [], []
    for t in ts:
        comp = descent_composition(t)
        blocks.append(f"{t.render()}\ncomp: {show(comp)}")
        payload.append({"rows": [list(r) for r in t.rows], "comp": list(comp)})
    text = "\n\n".join(blocks) + f"\n\n{len(ts)} tableaux"
    _emit(args, text, {"outer": list(outer), "inner": list(inner), "tableaux": payload})
    return 0


def cmd_dot(args) -> int:
    sys.stdout.write(export_dot(args.poset, _positive(args.max_size)))
    return 0


# -- verify ---------------------------------------------------------------------------


def _lemma_task(name: str, bounds: LemmaBounds):
    r = check_lemma(name, bounds)
    return f"lemma {name}", r.checked[name], r.failures


def _graph_task(which: str, max_size: int):
    r = verify_identity(which, max_size)
    return f"graph {which}", r.checked, r.failures


def _pieri_task(which: str, bounds: PieriBounds):
    if which == "ncs_right_forms":
        r = verify_right_forms(max(bounds.max_alpha, 8), max(bounds.max_n, 4))
    elif which == "duality_triangle":
        r = verify_duality_triangle(bounds.max_gamma)
    else:
        r = verify_pieri_theorem(which, bounds)
    return f"pieri {which}", r.checked, r.failures


def _verify_tasks(args) -> list[tuple[Callable, tuple]]:
    tasks: list[tuple[Callable, tuple]] = []
    if args.suite in ("lemmas", "all"):
        lb = LemmaBounds(args.max_len, args.max_part, args.max_index, args.modulo_zeros)
        tasks += [(_lemma_task, (name, lb)) for name in LEMMAS]
    if args.suite in ("graphs", "all"):
        tasks += [(_graph_task, (w, args.max_size)) for w in IDENTITIES]
    if args.suite in ("pieri", "all"):
        pb = PieriBounds(args.max_alpha, args.max_beta, args.max_n)
        names = list(PIERI_FAMILIES) + ["ncs_right_forms", "duality_triangle"]
        tasks += [(_pieri_task, (w, pb)) for w in names]
    return tasks


def cmd_verify(args) -> int:
    tasks = _verify_tasks(args)
    start = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    total_cases = total_failures = 0
    lines, payload = [], []
    for (label, checked, failures), seconds in results:
        total_cases += checked
        total_failures += len(failures)
        status = "ok" if not failures else f"{len(failures)} failures"
        lines.append(f"{label}: {checked} cases, {status} [{seconds:.2f}s]")
        for f in failures[: args.show_failures]:
            lines.append(f"    {f!r}")
        payload.append({"check": label, "cases": checked, "failures": len(failures),
                        "seconds": round(seconds, 3)})
    if args.suite in ("pieri", "all"):
        m = multiplicity_survey(args.max_alpha, args.max_n)
        lines.append(f"pieri multiplicities: {m.checked} coefficients, max {m.max_coefficient}")
    elapsed = time.perf_counter() - start
    lines.append(f"{len(results)} checks, {total_cases} cases, {total_failures} failures "
                 f"in {elapsed:.1f}s")
    _emit(args, "\n".join(lines), {"checks": payload, "cases": total_cases,
                                    "failures": total_failures})
    return 0 if total_failures == 0 else 1


def _run_task(task):
    fn, fargs = task
    t = time.perf_counter()
    out = fn(*fargs)
    return out, time.perf_counter() - t


# -- parser -------------------------------------------------------------------------


def _positive(x) -> int:
    v = int(x)
    if v < 1:
        raise ValueError(f"expected a positive integer, got {x!r}")
    return v


def build_parser(config: CliConfig = CliConfig()) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewpieri", description=__doc__)
    p.add_argument("--format", choices=["text", "json"], default=config.output_format)
    sub = p.add_subparsers(dest="command", required=True)

    op = sub.add_parser("op", help="apply one operator to a composition")
    op.add_argument("operator", choices=[*_SINGLE, *_SET])
    op.add_argument("index", help="an integer, or a comma-separated set for dI/uI")
    op.add_argument("composition")
    op.add_argument("--weak", action="store_true", help="allow zero parts in the input")
    op.set_defaults(func=cmd_op)

    pr = sub.add_parser("pieri", help="straight Pieri expansions")
    pr.add_argument("family", choices=["qs", "ncs-right", "ncs-left"])
    pr.add_argument("flavor", choices=["row", "column"])
    pr.add_argument("alpha")
    pr.add_argument("n")
    pr.add_argument("--form", choices=["simplified", "jdt"], default="simplified")
    pr.set_defaults(func=cmd_pieri)

    sk = sub.add_parser("skew-pieri", help="skew Pieri expansions")
    sk.add_argument("family", choices=["qs", "ncs"])
    sk.add_argument("flavor", choices=["row", "column"])
    sk.add_argument("outer")
    sk.add_argument("inner")
    sk.add_argument("n")
    sk.set_defaults(func=cmd_skew_pieri)

    ex = sub.add_parser("expand", help="fundamental or quasisymmetric Schur expansion of a skew shape")
    ex.add_argument("outer")
    ex.add_argument("inner", nargs="?", default="")
    ex.add_argument("--basis", choices=["F", "qs"], default="F")
    ex.set_defaults(func=cmd_expand)

    tb = sub.add_parser("tableaux", help="standard skew composition tableaux")
    tb.add_argument("outer")
    tb.add_argument("inner", nargs="?", default="")
    tb.set_defaults(func=cmd_tableaux)

    dt = sub.add_parser("dot", help="DOT graph of a composition poset")
    dt.add_argument("poset", choices=list(POSETS))
    dt.add_argument("max_size", nargs="?", default=config.max_size)
    dt.set_defaults(func=cmd_dot)

    vf = sub.add_parser("verify", help="exhaustive identity sweeps")
    vf.add_argument("suite", choices=["lemmas", "graphs", "pieri", "all"])
    vf.add_argument("--max-len", type=int, default=5)
    vf.add_argument("--max-part", type=int, default=5)
    vf.add_argument("--max-index", type=int, default=6)
    vf.add_argument("--modulo-zeros", action="store_true",
                    help="compare operator results after dropping zero parts")
    vf.add_argument("--max-size", type=int, default=config.max_size)
    vf.add_argument("--max-alpha", type=int, default=5)
    vf.add_argument("--max-beta", type=int, default=2)
    vf.add_argument("--max-n", type=int, default=config.max_n)
    vf.add_argument("--jobs", type=int, default=config.parallelism)
    vf.add_argument("--show-failures", type=int, default=5)
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
