"""Tests for formatters and renderers."""

from __future__ import annotations

import csv
import io
from datetime import datetime

try:
    from datetime import UTC
except ImportError:  # Python < 3.11
    from datetime import timezone

    UTC = timezone.utc
from fractions import Fraction

import orjson
import pytest
from rich.console import Console

from ...analysis import E1, GctResult, summary_table
from ...game import Stage, build_notation
from ...montecarlo import simulate
from ...protocols import ProtocolSpec
from ...types import OutputFormat
from .. import (
    Document,
    RichConsole,
    classify_document,
    format_gct,
    format_value,
    render,
    render_csv,
    render_json,
    simulation_document,
    summary_document,
    timestamp_header,
    write_histogram,
)

pytestmark = pytest.mark.unit


@pytest.fixture
def recorder() -> tuple[RichConsole, io.StringIO]:
    buffer = io.StringIO()
    return RichConsole(Console(file=buffer, width=120, color_system=None)), buffer


@pytest.fixture
def document() -> Document:
    return Document(
        title="t",
        headers=("m", "value"),
        rows=(("1", "1"), ("2", "3/2")),
        payload={"rows": [1, Fraction(3, 2)], "constant": E1},
        notes=("checked",),
    )


class TestFormatters:
    """Value rendering."""

    @pytest.mark.parametrize(
        ("value", "decimal", "expected"),
        [
            (Fraction(8, 3), None, "8/3"),
            (Fraction(8, 3), 5, "2.6667"),
            (Fraction(2), None, "2"),
            (None, None, "inf"),
            (None, 4, "inf"),
            (3, None, "3"),
        ],
    )
    def test_format_value(self, value, decimal, expected):
        assert format_value(value, decimal) == expected

    def test_constant(self):
        assert format_value(E1) == "(1+sqrt(4+sqrt(17)))/2"
        assert format_value(E1, 8) == "1.9250531"

    @pytest.mark.parametrize(("result", "expected"), [(GctResult(3), "3"), (GctResult(None), "inf")])
    def test_format_gct(self, result, expected):
        assert format_gct(result) == expected

    def test_timestamp(self):
        moment = datetime(2024, 9, 17, 12, 30, tzinfo=UTC)
        assert timestamp_header(moment) == "# generated 2024-09-17T12:30:00+00:00"


class TestRenderers:
    """CSV, JSON and text output."""

    def test_csv(self, document):
        text = render_csv(document, header="# generated now")
        lines = text.splitlines()
        assert lines[0] == "# generated now"
        assert list(csv.reader(lines[1:4])) == [["m", "value"], ["1", "1"], ["2", "3/2"]]
        assert lines[-1] == "# checked"

    def test_json(self, document):
        data = orjson.loads(render_json(document, header="# generated now"))
        assert data["rows"] == [1, "3/2"]
        assert data["constant"] == "(1+sqrt(4+sqrt(17)))/2"
        assert data["notes"] == ["checked"]
        assert data["generated"] == "now"

    def test_json_nested_constants(self):
        nested = Document("t", (), (), {"constants": {"e1": {"value": E1}}, "pair": [E1, Fraction(1, 3)]})
        data = orjson.loads(render_json(nested))
        assert data["constants"]["e1"]["value"] == str(E1)
        assert data["pair"] == [str(E1), "1/3"]

    def test_json_rejects_other_dataclasses(self):
        with pytest.raises(TypeError):
            render_json(Document("t", (), (), {"result": GctResult(3, ("s",))}))

    def test_scalar_text(self, recorder):
        console, buffer = recorder
        scalar = Document("ect", ("ect",), (("8/3",),), {}, scalar="8/3")
        render(console, scalar, OutputFormat.TEXT)
        assert buffer.getvalue() == "8/3\n"

    def test_table_text(self, recorder, document):
        console, buffer = recorder
        render(console, document, OutputFormat.TEXT)
        output = buffer.getvalue()
        assert "3/2" in output
        assert "checked" in output

    def test_csv_through_console(self, recorder, document):
        console, buffer = recorder
        render(console, document, OutputFormat.CSV)
        assert buffer.getvalue() == render_csv(document)

    def test_error_markup_is_escaped(self, recorder):
        console, buffer = recorder
        console.print_error("error [usage_error] bad")
        assert buffer.getvalue() == "error [usage_error] bad\n"


class TestDocuments:
    """Documents built from computed results."""

    def test_summary(self):
        document = summary_document(summary_table(3))
        assert document.rows == (
            ("1", "1", "(any)", "1", "(any)"),
            ("2", "2", "WM", "inf", "-"),
            ("3", "5/3", "LA", "2", "LA"),
        )
        assert document.payload["rows"][2]["ect"] == "5/3"

    def test_summary_decimal(self):
        document = summary_document(summary_table(3), decimal=3)
        assert document.rows[2][1] == "1.67"

    def test_classify_choice_matching(self):
        document = classify_document(Stage.initial(build_notation("CM(2)")))
        data = document.payload
        assert data["focal_points"] == []
        assert data["one_round_solvable"] is False
        assert data["conjugates"] is not None
        assert len(data["partition"]) == 1

    def test_classify_solvable(self):
        document = classify_document(Stage.initial(build_notation("Sigma(3)")))
        assert document.payload["one_round_solvable"] is True
        assert document.payload["conjugates"] is None
        assert ("one-round solvable", "yes") in document.rows

    def test_simulation_and_histogram(self, tmp_path):
        report = simulate(build_notation("CM(2)"), ProtocolSpec.uniform(), trials=200, seed=3, max_rounds=2)
        document = simulation_document(report, exact=Fraction(2))
        assert dict(document.rows)["exact"] == "2"
        assert document.payload["generator"] == "PCG64"
        assert dict(document.rows)["block_size"] == str(report.block_size)
        assert document.payload["block_size"] == report.block_size
        path = tmp_path / "histogram.csv"
        write_histogram(report, path)
        rows = list(csv.reader(path.read_text().splitlines()))
        assert rows[0] == ["rounds", "plays"]
        counted = sum(int(plays) for _, plays in rows[1:])
        assert counted == report.trials
