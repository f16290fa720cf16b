"""Operators on compositions, composition posets, and Pieri rules for
quasisymmetric and noncommutative Schur functions."""

from .compositions import flatten, parse_composition
from .formal import FormalSum
from .operators import add_box, append_row, jdt, jdt_set, remove_box, remove_set
from .posets import SkewShape, chains_L, leq_L, tableaux
from .qsym import QSymVector, expand_in_qs, qs_in_F
from .pieri import (
    ncs_left_pieri,
    ncs_right_pieri,
    ncs_skew_pieri,
    qs_pieri,
    qs_skew_pieri,
    skew_schur_pieri,
)

__all__ = [
    "FormalSum", "QSymVector", "SkewShape",
    "add_box", "append_row", "chains_L", "expand_in_qs", "flatten", "jdt", "jdt_set",
    "leq_L", "ncs_left_pieri", "ncs_right_pieri", "ncs_skew_pieri", "parse_composition",
    "qs_in_F", "qs_pieri", "qs_skew_pieri", "remove_box", "remove_set",
    "skew_schur_pieri", "tableaux",
]
