"""Exact finite-stage analysis of Cantor sets and the difference set C^c - C."""

from ._cantorgap import (
    BudgetExceeded,
    CantorStage,
    DiffBracket,
    FamilySpec,
    GapRecord,
    IncompatibleSelector,
    Interval,
    IntervalUnion,
    NotCertifiable,
    SpecError,
    builtin_families,
    diff_bracket,
    inner_diff,
    measure_scan,
    minkowski_sum,
    outer_diff,
    points,
    theoretical_missing_set,
    verify,
    verify_selectors,
)

__all__ = [
    "BudgetExceeded",
    "CantorStage",
    "DiffBracket",
    "FamilySpec",
    "GapRecord",
    "IncompatibleSelector",
    "Interval",
    "IntervalUnion",
    "NotCertifiable",
    "SpecError",
    "builtin_families",
    "diff_bracket",
    "inner_diff",
    "measure_scan",
    "minkowski_sum",
    "outer_diff",
    "points",
    "theoretical_missing_set",
    "verify",
    "verify_selectors",
]
