"""Exact computation in valued fields: Hahn series, rational function fields,
ramification and defect, Hensel lifting, and ordered abelian groups."""

from ._core import (
    DEFAULT_PREC,
    SUITE_SEED,
    Field,
    ParseError,
    TameFieldError,
    analyze_extension,
    classify_field,
    decide_oag,
    formula,
    gauss_value,
    group,
    hensel_lift,
    pcs_trace,
    run_suite,
)

__all__ = [
    "DEFAULT_PREC",
    "SUITE_SEED",
    "Field",
    "ParseError",
    "TameFieldError",
    "analyze_extension",
    "classify_field",
    "decide_oag",
    "formula",
    "gauss_value",
    "group",
    "hensel_lift",
    "pcs_trace",
    "run_suite",
]
