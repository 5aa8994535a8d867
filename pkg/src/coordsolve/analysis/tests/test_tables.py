"""Tests for the choice matching tables."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ...errors import LimitExceeded, UsageError, VerificationFailed
from ...protocols import ProtocolSpec
from ...types import ProtocolKind
from .. import tables
from ..constants import E1
from ..ect import GctResult
from ..tables import (
    BoundRow,
    SummaryRow,
    bounds_rows,
    bounds_table,
    summary_row,
    summary_table,
    verify_bound_row,
    verify_summary_row,
    wm_vs_la_table,
)

pytestmark = pytest.mark.unit

EXPECTED_ECT = {
    1: Fraction(1),
    2: Fraction(2),
    3: Fraction(5, 3),
    4: Fraction(5, 2),
    5: Fraction(7, 3),
    6: Fraction(8, 3),
    7: Fraction(19, 7),
    8: Fraction(11, 4),
    9: Fraction(25, 9),
}


class TestSummary:
    """Optimal times in choice matching games."""

    def test_small_rows(self):
        rows = summary_table(6, verify=True)
        assert [row.ect for row in rows] == [EXPECTED_ECT[m] for m in range(1, 7)]
        assert [row.ect_protocol for row in rows] == ["(any)", "WM", "LA", "-", "LA", "WM"]
        assert [str(row.gct) for row in rows] == ["1", "inf", "2", "inf", "3", "inf"]
        assert [row.gct_protocol for row in rows] == ["(any)", "-", "LA", "-", "LA", "-"]

    @pytest.mark.integration
    @pytest.mark.parametrize("m", [7, 8, 9])
    def test_large_rows(self, m):
        row = summary_row(m)
        assert row.ect == EXPECTED_ECT[m]
        verify_summary_row(row)

    def test_verification_catches_wrong_time(self):
        row = SummaryRow(2, Fraction(3), "WM", GctResult(None), "-")
        with pytest.raises(VerificationFailed) as info:
            verify_summary_row(row)
        assert info.value.code == "verification_failed"

    def test_verification_catches_wrong_guarantee(self):
        row = SummaryRow(3, Fraction(5, 3), "LA", GctResult(3), "LA")
        with pytest.raises(VerificationFailed):
            verify_summary_row(row)

    @pytest.mark.parametrize("m", [2, 4, 6])
    def test_even_rows_check_touched_grid(self, m, mocker):
        spy = mocker.spy(tables, "gct")
        verify_summary_row(summary_row(m))
        checked = {call.args[1] for call in spy.call_args_list}
        assert {ProtocolSpec.touched(Fraction(k, 8)) for k in range(9)} <= checked

    def test_verification_catches_finite_touched_time(self, mocker):
        real = tables.gct

        def fake(game, spec):
            return GctResult(2) if spec.kind is ProtocolKind.TOUCHED else real(game, spec)

        mocker.patch.object(tables, "gct", side_effect=fake)
        with pytest.raises(VerificationFailed, match="touched"):
            verify_summary_row(SummaryRow(2, Fraction(2), "WM", GctResult(None), "-"))

    def test_limit(self):
        with pytest.raises(LimitExceeded) as info:
            summary_table(10)
        assert info.value.exit_code == 1

    def test_nonpositive(self):
        with pytest.raises(UsageError) as info:
            summary_table(0)
        assert info.value.exit_code == 2


class TestBounds:
    """Greatest optimal expected times among m-choice games."""

    def test_values(self):
        assert bounds_table(1) == BoundRow(1, Fraction(1))
        assert bounds_table(2).value == 2
        assert bounds_table(3) == BoundRow(3, E1, "1x2 + 2x1")
        assert bounds_table(4).value == Fraction(5, 2)
        assert bounds_table(5) == BoundRow(5, Fraction(7, 3), "CM(5)")
        assert bounds_table(6).value == Fraction(8, 3)
        assert bounds_table(9).value == Fraction(25, 9)

    def test_verified(self):
        rows = bounds_rows(6, verify=True)
        assert len(rows) == 6

    def test_verification_catches_wrong_bound(self):
        with pytest.raises(VerificationFailed):
            verify_bound_row(BoundRow(6, Fraction(5, 2)))

    def test_nonpositive(self):
        with pytest.raises(UsageError):
            bounds_table(0)


class TestWmVsLa:
    """Wait-or-move and loop avoidance side by side."""

    def test_rows(self):
        rows = wm_vs_la_table(5, verify=True)
        assert [row.wm_ect for row in rows] == [3 - Fraction(2, m) for m in range(1, 6)]
        assert rows[2].la_ect == Fraction(5, 3)
        assert rows[4].la_ect == Fraction(7, 3)
        assert all(row.wm_gct.infinite for row in rows[1:])
        assert rows[4].la_gct.value == 3
