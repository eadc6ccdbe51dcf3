from .engine import SearchConfig, SearchOutcome, SearchStats, SymmetryLevel, Verdict, find_good_coloring
from .lemmas import check_ex_corollary, check_lemma_k34, verify_lemma_k34
from .ramsey import (
    RamseyResult,
    SearchTimeout,
    Status,
    TableRow,
    classify,
    construction_for,
    predicted_value,
    ramsey_number,
    resolved_specs,
    verify_table,
)

__all__ = [
    "RamseyResult",
    "SearchConfig",
    "SearchOutcome",
    "SearchStats",
    "SearchTimeout",
    "Status",
    "SymmetryLevel",
    "TableRow",
    "Verdict",
    "check_ex_corollary",
    "check_lemma_k34",
    "classify",
    "construction_for",
    "find_good_coloring",
    "predicted_value",
    "ramsey_number",
    "resolved_specs",
    "verify_lemma_k34",
    "verify_table",
]
