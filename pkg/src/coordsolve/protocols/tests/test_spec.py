"""Tests for protocol parsing, table documents and table export."""

from __future__ import annotations

from fractions import Fraction

import orjson
import pytest

from ...errors import NotSimilarityInvariant, ProtocolSyntaxError
from ...game import Stage, build_notation
from ...types import HistoryView, ProtocolKind
from ..distribution import Distribution
from ..evaluation import evaluate
from ..spec import ProtocolSpec, ProtocolTable, parse_protocol
from ..table import dump_table, export_table
from .helpers import reachable_stages

pytestmark = pytest.mark.unit


class TestParseProtocol:
    """Protocol text."""

    @pytest.mark.parametrize(
        ("text", "kind"),
        [("wm", ProtocolKind.WM), ("LA", ProtocolKind.LA), (" uniform ", ProtocolKind.UNIFORM)],
    )
    def test_named(self, text, kind):
        assert parse_protocol(text).kind is kind

    @pytest.mark.parametrize(("text", "p"), [("touched:1/2", Fraction(1, 2)), ("touched:0.25", Fraction(1, 4))])
    def test_touched(self, text, p):
        spec = parse_protocol(text)
        assert spec.p == p
        assert spec.name == f"touched:{p}"

    @pytest.mark.parametrize("text", ["touched", "touched:2", "touched:x", "wm:1", "best", "table"])
    def test_rejected(self, text):
        with pytest.raises(ProtocolSyntaxError) as excinfo:
            parse_protocol(text)
        assert excinfo.value.exit_code == 2

    def test_views(self):
        assert parse_protocol("wm").view is HistoryView.FIRST_USES
        assert parse_protocol("la").view is HistoryView.PARTITION
        assert not parse_protocol("touched:1").similarity_invariant

    def test_hashable(self):
        assert {ProtocolSpec.touched("1/2"), ProtocolSpec.touched(Fraction(1, 2))} == {ProtocolSpec.touched(0.5)}


class TestProtocolTable:
    """Table documents."""

    def test_loads(self):
        table = ProtocolTable.loads(b'{"k": {"1": {"0": "1/2", "1": "1/2"}, "2": {"0": "1"}}}')
        assert table.lookup("k", 1) == {0: Fraction(1, 2), 1: Fraction(1, 2)}
        assert table.lookup("k", 2) == {0: Fraction(1)}
        assert table.lookup("other", 1) is None

    @pytest.mark.parametrize(
        "data",
        [b"not json", b'{"k": {"1": {"0": "1/3"}}}', b'{"k": {"1": {"0": "x"}}}', b'{"k": {"one": {}}}'],
    )
    def test_loads_rejects(self, data):
        with pytest.raises(ProtocolSyntaxError):
            ProtocolTable.loads(data)

    def test_parse_from_file(self, tmp_path):
        path = tmp_path / "table.json"
        path.write_bytes(b'{"k": {"1": {"0": "1"}}}')
        spec = parse_protocol(f"@{path}")
        assert spec.kind is ProtocolKind.TABLE
        assert spec.table is not None
        assert len(spec.table) == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(ProtocolSyntaxError, match="not found"):
            parse_protocol(f"@{tmp_path / 'absent.json'}")


class TestExportTable:
    """Materializing protocols as tables."""

    def test_loop_avoidance_round_trip(self, cm5, la, tmp_path):
        path = tmp_path / "la.json"
        dump_table(export_table(la, cm5), path)
        table_spec = parse_protocol(f"@{path}")
        for stage in reachable_stages(la, cm5, 3):
            for player in (1, 2):
                assert evaluate(table_spec, stage, player) == evaluate(la, stage, player)

    def test_document_shape(self):
        table = export_table(ProtocolSpec.uniform(), build_notation("CM(2)"))
        data = orjson.loads(table.dumps())
        assert len(data) == 1
        (sides,) = data.values()
        assert sides["1"] == {"0": "1/2", "1": "1/2"}

    def test_conflict(self, mocker, cm5):
        uniform = Distribution.uniform(1, range(5))
        point = Distribution.point(1, 0)
        # (a1,b2) and (a1,b2),(b1,a2) share a class but not a profile set
        mocker.patch(
            "coordsolve.protocols.table.support_profiles",
            side_effect=[[((0, 1), Fraction(1))], [((1, 0), Fraction(1))], [((0, 1), Fraction(1))]],
        )
        mocker.patch("coordsolve.protocols.table.evaluate", side_effect=[uniform] * 4 + [point] * 2)
        with pytest.raises(NotSimilarityInvariant):
            export_table(ProtocolSpec.touched(1), cm5)

    def test_initial_stage_entries(self, cm5, wm):
        table = export_table(wm, cm5)
        spec = ProtocolSpec.from_table(table)
        stage = Stage.initial(cm5)
        assert evaluate(spec, stage, 1) == evaluate(wm, stage, 1)
