"""Choice matching summary, upper bounds and the wait-or-move against loop-avoidance comparison."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..errors import LimitExceeded, UsageError, VerificationFailed
from ..game import WlcGame, build_notation
from ..protocols import ProtocolSpec
from ..settings import get_settings
from .constants import E1, AlgebraicConstant
from .ect import GctResult, exact_ect, gct, wm_ect_bound
from .formulas import la_cm_closed_form, three_choice_fixed_point

logger = logging.getLogger(__name__)

WM = ProtocolSpec.wm()
LA = ProtocolSpec.la()
UNIFORM = ProtocolSpec.uniform()
TOUCHED_GRID = tuple(ProtocolSpec.touched(Fraction(k, 8)) for k in range(9))

NO_UNIQUE = "-"
ANY = "(any)"


@dataclass(frozen=True)
class SummaryRow:
    """Optimal times in ``CM(m)`` and the protocols realizing them."""

    m: int
    ect: Fraction
    ect_protocol: str
    gct: GctResult
    gct_protocol: str


@dataclass(frozen=True)
class BoundRow:
    """Greatest optimal expected time among ``m``-choice games."""

    m: int
    value: Fraction | AlgebraicConstant
    witness: str | None = None


@dataclass(frozen=True)
class WmVsLaRow:
    m: int
    wm_ect: Fraction
    la_ect: Fraction
    wm_gct: GctResult
    la_gct: GctResult


def _check_range(m_max: int) -> None:
    limit = get_settings().analysis.analysis_limit
    if m_max < 1:
        msg = f"m must be at least 1, got {m_max}"
        raise UsageError(msg, field="--max-m", item=m_max)
    if m_max > limit:
        msg = f"m = {m_max} exceeds the analysis limit {limit}"
        raise LimitExceeded(msg, field="--max-m", item=m_max)


def _choice_matching(m: int) -> WlcGame:
    return build_notation(f"CM({m})")


def _mismatch(what: str, m: int, got: object, expected: object) -> VerificationFailed:
    msg = f"{what} for m = {m}: computed {got}, expected {expected}"
    return VerificationFailed(msg, item=m)


def _ect_protocol(m: int) -> tuple[str, ProtocolSpec]:
    if m == 1:
        return ANY, UNIFORM
    if m in (3, 5):
        return "LA", LA
    if m == 4:
        return NO_UNIQUE, WM
    return "WM", WM


def summary_row(m: int) -> SummaryRow:
    name, spec = _ect_protocol(m)
    game = _choice_matching(m)
    ect = exact_ect(game, spec).value
    assert isinstance(ect, Fraction)
    if m == 1:
        return SummaryRow(m, ect, name, gct(game, UNIFORM), ANY)
    return SummaryRow(m, ect, name, gct(game, LA), "LA" if m % 2 else NO_UNIQUE)


def verify_summary_row(row: SummaryRow) -> None:
    """Check a summary row against the closed forms.

    Raises:
        VerificationFailed: A value disagrees with its formula.

    """
    m = row.m
    if m == 1:
        expected = Fraction(1)
    elif m in (3, 5):
        expected = la_cm_closed_form(m).expected
    else:
        expected = 3 - Fraction(2, m)
        if wm_ect_bound(_choice_matching(m)) != expected:
            raise _mismatch("wait-or-move bound", m, wm_ect_bound(_choice_matching(m)), expected)
    if row.ect != expected:
        raise _mismatch("expected time", m, row.ect, expected)
    if m % 2:
        if row.gct.value != (m + 1) // 2:
            raise _mismatch("guaranteed time", m, row.gct, (m + 1) // 2)
        return
    for spec in (WM, LA, UNIFORM, *TOUCHED_GRID):
        result = gct(_choice_matching(m), spec)
        if not result.infinite:
            raise _mismatch(f"guaranteed time under {spec}", m, result, "inf")


def summary_table(m_max: int, verify: bool = False) -> list[SummaryRow]:
    """Rows ``m = 1..m_max`` of the choice matching summary.

    Raises:
        LimitExceeded: ``m_max`` is above the configured analysis limit.
        VerificationFailed: ``verify`` is set and a row disagrees with its formula.

    """
    _check_range(m_max)
    rows = [summary_row(m) for m in range(1, m_max + 1)]
    if verify:
        for row in rows:
            verify_summary_row(row)
        logger.info("summary rows 1..%d verified", m_max)
    return rows


def bounds_table(m: int) -> BoundRow:
    """Greatest optimal expected time among ``m``-choice games."""
    if m < 1:
        msg = f"m must be at least 1, got {m}"
        raise UsageError(msg, field="--m", item=m)
    if m == 3:
        return BoundRow(m, E1, "1x2 + 2x1")
    if m == 5:
        return BoundRow(m, Fraction(7, 3), "CM(5)")
    return BoundRow(m, 3 - Fraction(2, m))


def verify_bound_row(row: BoundRow) -> None:
    """Recompute a bound from its witness protocol.

    Raises:
        VerificationFailed: The recomputed value differs.

    """
    m = row.m
    if m == 3:
        fixed_point = three_choice_fixed_point()
        cm3 = exact_ect(_choice_matching(3), LA).value
        assert isinstance(cm3, Fraction)
        if not (fixed_point.e1 == row.value and E1.exceeds(cm3)):
            raise _mismatch("3-choice bound", m, row.value, E1)
        return
    spec = LA if m == 5 else WM
    value = exact_ect(_choice_matching(m), spec).value
    if value != row.value:
        raise _mismatch("bound", m, value, row.value)


def bounds_rows(m_max: int, verify: bool = False) -> list[BoundRow]:
    _check_range(m_max)
    rows = [bounds_table(m) for m in range(1, m_max + 1)]
    if verify:
        for row in rows:
            verify_bound_row(row)
    return rows


def wm_vs_la_table(m_max: int, verify: bool = False) -> list[WmVsLaRow]:
    """Wait-or-move and loop avoidance side by side on ``CM(1..m_max)``.

    Raises:
        LimitExceeded: ``m_max`` is above the configured analysis limit.
        VerificationFailed: ``verify`` is set and a value disagrees with its formula.

    """
    _check_range(m_max)
    rows = []
    for m in range(1, m_max + 1):
        game = _choice_matching(m)
        wm_ect, la_ect = exact_ect(game, WM).value, exact_ect(game, LA).value
        assert isinstance(wm_ect, Fraction)
        assert isinstance(la_ect, Fraction)
        row = WmVsLaRow(m, wm_ect, la_ect, gct(game, WM), gct(game, LA))
        if verify:
            if row.wm_ect != 3 - Fraction(2, m):
                raise _mismatch("wait-or-move time", m, row.wm_ect, 3 - Fraction(2, m))
            if m % 2 and row.la_ect != la_cm_closed_form(m).expected:
                raise _mismatch("loop-avoidance time", m, row.la_ect, la_cm_closed_form(m).expected)
        rows.append(row)
    return rows
