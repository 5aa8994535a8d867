"""Exact coordination times on Markov quotients, closed forms and table generators."""

from .chain import WIN, ChainExpansion, MarkovQuotient, build_chain, canonical_moves
from .constants import E1, E2, AlgebraicConstant
from .ect import (
    EctBracket,
    EctResult,
    GctResult,
    LowerBoundScan,
    bracket_ect,
    complement_cycle_ect,
    exact_ect,
    gct,
    oscp,
    random_play_ect,
    solve_chain,
    stage_ect,
    stage_gct,
    touched_lower_bound_scan,
    verify_gct,
    verify_oscp,
    wm_ect_bound,
)
from .formulas import (
    FixedPoint,
    FormulaEParams,
    LaClosedForm,
    Minimizers,
    damped_fixed_point,
    formula_e,
    formula_e_sweep,
    la_cm_closed_form,
    three_choice_fixed_point,
    verify_fixed_point,
    verify_formula_e,
    verify_formula_e_sweep,
)
from .linear import solve
from .tables import (
    BoundRow,
    SummaryRow,
    WmVsLaRow,
    bounds_rows,
    bounds_table,
    summary_table,
    verify_bound_row,
    verify_summary_row,
    wm_vs_la_table,
)

__all__ = [
    "E1",
    "E2",
    "WIN",
    "AlgebraicConstant",
    "BoundRow",
    "ChainExpansion",
    "EctBracket",
    "EctResult",
    "FixedPoint",
    "FormulaEParams",
    "GctResult",
    "LaClosedForm",
    "LowerBoundScan",
    "MarkovQuotient",
    "Minimizers",
    "SummaryRow",
    "WmVsLaRow",
    "bounds_rows",
    "bounds_table",
    "bracket_ect",
    "build_chain",
    "canonical_moves",
    "complement_cycle_ect",
    "damped_fixed_point",
    "exact_ect",
    "formula_e",
    "formula_e_sweep",
    "gct",
    "la_cm_closed_form",
    "oscp",
    "random_play_ect",
    "solve",
    "solve_chain",
    "stage_ect",
    "stage_gct",
    "summary_table",
    "three_choice_fixed_point",
    "touched_lower_bound_scan",
    "verify_bound_row",
    "verify_fixed_point",
    "verify_formula_e",
    "verify_formula_e_sweep",
    "verify_gct",
    "verify_oscp",
    "verify_summary_row",
    "wm_ect_bound",
    "wm_vs_la_table",
]
