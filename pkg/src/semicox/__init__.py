"""Semidirect decompositions W = W~ x| W_I of Coxeter groups."""

from .catalog import builtin, recognize, table_rows, verify_row
from .coxeter import INF, CoxMatrix, CoxeterGroup, Elem
from .decomp import Decomposition

__all__ = [
    "INF",
    "CoxMatrix",
    "CoxeterGroup",
    "Decomposition",
    "Elem",
    "builtin",
    "recognize",
    "table_rows",
    "verify_row",
]
