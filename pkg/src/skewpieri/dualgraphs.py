"""Up and down operators on formal sums of compositions, the four dual graph
identities, and DOT export of the composition posets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal, Mapping

from .compositions import Composition, compositions_upto, format_composition
from .formal import FormalSum
from .posets import covers_down_Q, covers_down_Qt, covers_up_L, covers_up_R

Identity = Literal["RcQc", "RcQct", "LcQc", "LcQct"]
Poset = Literal["Rc", "Lc", "Qc", "Qct"]
IDENTITIES: tuple[Identity, ...] = ("RcQc", "RcQct", "LcQc", "LcQct")
POSETS: tuple[Poset, ...] = ("Rc", "Lc", "Qc", "Qct")


def apply_U(s: Mapping) -> FormalSum:
    return FormalSum(s).apply(covers_up_R)


def apply_Ut(s: Mapping) -> FormalSum:
    return FormalSum(s).apply(covers_up_L)


def apply_D(s: Mapping) -> FormalSum:
    return FormalSum(s).apply(covers_down_Q)


def apply_Dt(s: Mapping) -> FormalSum:
    return FormalSum(s).apply(covers_down_Qt)


@dataclass
class IdentityReport:
    name: str
    max_size: int
    checked: int = 0
    failures: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: IdentityReport) -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return f"{self.name}: {self.checked} cases (bound {self.max_size}), {status}"


def _sides(which: Identity) -> tuple[Callable, Callable]:
    up = {"Rc": apply_U, "Lc": apply_Ut}[which[:2]]
    down = apply_Dt if which.endswith("Qct") else apply_D

    def lhs(s: FormalSum) -> FormalSum:
        return down(up(s)) - up(down(s))

    if which.endswith("Qct"):
        def rhs(s: FormalSum) -> FormalSum:
            return down(s) + s
    else:
        def rhs(s: FormalSum) -> FormalSum:
            return FormalSum(s)
    return lhs, rhs


def commutator(which: Identity, c: Composition) -> tuple[FormalSum, FormalSum]:
    """Both sides of the chosen identity evaluated on the single composition ``c``."""
    lhs, rhs = _sides(which)
    s = FormalSum.single(tuple(c))
    return lhs(s), rhs(s)


def verify_identity(which: Identity, max_size: int) -> IdentityReport:
    if which not in IDENTITIES:
        raise ValueError(f"unknown identity {which!r}")
    if max_size < 1:
        raise ValueError("max_size must be positive")
    report = IdentityReport(which, max_size)
    for c in compositions_upto(max_size):
        left, right = commutator(which, c)
        report.checked += 1
        if left != right:
            report.failures.append((c, left, right))
    return report


def cover_edges(poset: Poset, max_size: int) -> FormalSum:
    """``(lower, upper)`` cover pairs among compositions of size ``<= max_size``."""
    if poset not in POSETS:
        raise ValueError(f"unknown poset {poset!r}")
    edges: dict = {}
    for c in compositions_upto(max_size):
        if poset in ("Rc", "Lc"):
            if sum(c) == max_size:
                continue
            ups = covers_up_R(c) if poset == "Rc" else covers_up_L(c)
            for hi, m in ups.items():
                edges[(c, hi)] = m
        else:
            downs = covers_down_Q(c) if poset == "Qc" else covers_down_Qt(c)
            for lo, m in downs.items():
                edges[(lo, c)] = m
    return FormalSum(edges)


def _node_id(c: Composition) -> str:
    return "c_" + "_".join(map(str, c)) if c else "c_empty"


def _label(c: Composition) -> str:
    return format_composition(c) if c else "∅"


def export_dot(poset: Poset, max_size: int) -> str:
    edges = cover_edges(poset, max_size)
    lines = [f'digraph "{poset}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for rank in range(max_size + 1):
        nodes = [c for c in compositions_upto(max_size) if sum(c) == rank]
        lines.append(f"  subgraph rank_{rank} {{")
        lines.append("    rank=same;")
        for c in nodes:
            lines.append(f'    {_node_id(c)} [label="{_label(c)}"];')
        lines.append("  }")
    for (lo, hi), m in edges.sorted_items():
        lines.append(f'  {_node_id(lo)} -> {_node_id(hi)} [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
