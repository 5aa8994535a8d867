"""Renderers - turn computed results into documents and write them as text, CSV or JSON."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import orjson

from ..analysis import (
    AlgebraicConstant,
    BoundRow,
    EctResult,
    FixedPoint,
    FormulaEParams,
    GctResult,
    Minimizers,
    SummaryRow,
    WmVsLaRow,
)
from ..enumeration import CensusReport
from ..game import Stage
from ..montecarlo import SimReport
from ..symmetry import (
    canonical_key,
    conjugates,
    equiv_partition,
    focal_points,
    is_choice_matching,
    one_round_solvable,
    renaming_generators,
)
from ..types import OutputFormat
from .console import ConsoleInterface
from .formatters import create_table, format_flag, format_gct, format_value


@dataclass(frozen=True)
class Document:
    """A computed result ready for any output format.

    ``scalar`` is printed alone in text mode when set; ``rows`` feed tables and CSV;
    ``payload`` is the JSON body.
    """

    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    payload: dict[str, Any]
    scalar: str | None = None
    notes: tuple[str, ...] = field(default=())


def _json_default(value: object) -> object:
    if isinstance(value, Fraction | AlgebraicConstant):
        return str(value)
    msg = f"cannot serialize {type(value).__name__}"
    raise TypeError(msg)


def render_csv(document: Document, header: str | None = None) -> str:
    buffer = io.StringIO()
    if header:
        buffer.write(header + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(document.headers)
    writer.writerows(document.rows)
    for note in document.notes:
        buffer.write(f"# {note}\n")
    return buffer.getvalue()


def render_json(document: Document, header: str | None = None) -> bytes:
    payload = dict(document.payload)
    if document.notes:
        payload["notes"] = list(document.notes)
    if header:
        payload["generated"] = header.removeprefix("# generated ").strip()
    return orjson.dumps(
        payload,
        default=_json_default,
        option=orjson.OPT_INDENT_2 | orjson.OPT_NON_STR_KEYS | orjson.OPT_PASSTHROUGH_DATACLASS,
    )


def render_text(console: ConsoleInterface, document: Document, header: str | None = None) -> None:
    """Render a document as a Rich table, or as its bare value for single results.

    Args:
        console: Console interface
        document: Computed document
        header: Optional timestamp line

    """
    if header:
        console.write(header)
    if document.scalar is not None:
        console.write(document.scalar)
    else:
        table = create_table(list(document.headers), title=document.title)
        for row in document.rows:
            table.add_row(*row)
        console.print_table(table)
    for note in document.notes:
        console.print_note(note)


def render(console: ConsoleInterface, document: Document, fmt: OutputFormat, header: str | None = None) -> None:
    """Write ``document`` in ``fmt``; nothing is written before the whole document exists."""
    if fmt is OutputFormat.CSV:
        console.write(render_csv(document, header).rstrip("\n"))
    elif fmt is OutputFormat.JSON:
        console.write(render_json(document, header).decode())
    else:
        render_text(console, document, header)


def write_histogram(report: SimReport, path: Path) -> None:
    """Write the round-count histogram of a simulation as ``rounds,plays`` CSV."""
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(("rounds", "plays"))
        writer.writerows(report.histogram.items())
        if report.truncated:
            writer.writerow((f">{report.max_rounds}", report.truncated))


# Documents


def ect_document(
    game: str, protocol: str, result: EctResult, decimal: int | None = None, verified: bool = False
) -> Document:
    value = format_value(result.value, decimal)
    return Document(
        title="Expected coordination time",
        headers=("game", "protocol", "ect", "classes"),
        rows=((game, protocol, value, str(result.chain_size)),),
        payload={
            "game": game,
            "protocol": protocol,
            "ect": value,
            "exact": str(result.value),
            "classes": result.chain_size,
            "verified": verified,
            "derivation": list(result.derivation),
        },
        scalar=value,
    )


def gct_document(game: str, protocol: str, result: GctResult) -> Document:
    value = format_gct(result)
    return Document(
        title="Guaranteed coordination time",
        headers=("game", "protocol", "gct", "witness"),
        rows=((game, protocol, value, " -> ".join(result.witness)),),
        payload={"game": game, "protocol": protocol, "gct": value, "witness": list(result.witness)},
        scalar=value,
    )


def oscp_document(game: str, protocol: str, value: Fraction, decimal: int | None = None) -> Document:
    text = format_value(value, decimal)
    return Document(
        title="One-shot coordination probability",
        headers=("game", "protocol", "oscp"),
        rows=((game, protocol, text),),
        payload={"game": game, "protocol": protocol, "oscp": text},
        scalar=text,
    )


def simulation_document(report: SimReport, exact: Fraction | None = None) -> Document:
    fields = {
        "game": report.game,
        "protocol": report.protocol if report.protocol2 is None else f"{report.protocol}/{report.protocol2}",
        "trials": str(report.trials),
        "completed": str(report.completed),
        "truncated": str(report.truncated),
        "mean_rounds": f"{report.mean_rounds:.6f}",
        "std_error": f"{report.std_error:.6f}",
        "max_observed_rounds": str(report.max_observed_rounds),
        "one_round_wins": str(report.one_round_wins),
        "seed": str(report.seed),
        "block_size": str(report.block_size),
        "generator": report.generator,
    }
    payload = report.model_dump(mode="json")
    if exact is not None:
        fields["exact"] = str(exact)
        payload["exact"] = str(exact)
    return Document(
        title="Simulation",
        headers=("field", "value"),
        rows=tuple(fields.items()),
        payload=payload,
    )


def classify_document(stage: Stage) -> Document:
    """Partition, focal points, conjugates and one-round solvability of a two-player stage."""
    partition = equiv_partition(stage)
    focal = sorted(str(c) for c in focal_points(stage))
    pairs = (
        sorted(sorted(str(c) for c in pair) for pair in conjugates(stage))
        if is_choice_matching(stage.game)
        else None
    )
    solvable = one_round_solvable(stage)
    solution = None
    if solvable is not None:
        solution = [[str(stage.game.choice_at(c)) for c in part] for part in solvable]
    key = canonical_key(stage).digest
    generators = [r.as_labels(stage.game) for r in renaming_generators(stage)]
    rows = [
        ("stage", str(stage)),
        ("class", key),
        ("partition", " | ".join(" ".join(block) for block in partition.as_labels())),
        ("focal points", " ".join(focal) or "-"),
        ("one-round solvable", format_flag(solvable is not None)),
        ("renaming generators", str(len(generators))),
    ]
    if solution is not None:
        rows.append(("one-round parts", " / ".join(" ".join(part) for part in solution)))
    if pairs is not None:
        rows.append(("conjugates", " | ".join(" ".join(p) for p in pairs) or "-"))
    return Document(
        title="Stage classification",
        headers=("property", "value"),
        rows=tuple(rows),
        payload={
            "stage": str(stage),
            "class": key,
            "partition": partition.as_labels(),
            "focal_points": focal,
            "one_round_solvable": solvable is not None,
            "one_round_parts": solution,
            "conjugates": pairs,
            "renaming_generators": generators,
        },
    )


def summary_document(rows: list[SummaryRow], decimal: int | None = None, notes: tuple[str, ...] = ()) -> Document:
    cells = tuple(
        (str(r.m), format_value(r.ect, decimal), r.ect_protocol, format_gct(r.gct), r.gct_protocol) for r in rows
    )
    return Document(
        title="Choice matching games",
        headers=("m", "ect", "ect_protocol", "gct", "gct_protocol"),
        rows=cells,
        payload={"rows": [dict(zip(("m", "ect", "ect_protocol", "gct", "gct_protocol"), c, strict=True)) for c in cells]},
        notes=notes,
    )


def bounds_document(rows: list[BoundRow], decimal: int | None = None) -> Document:
    cells = tuple((str(r.m), format_value(r.value, decimal), r.witness or "-") for r in rows)
    return Document(
        title="Greatest optimal expected time among m-choice games",
        headers=("m", "bound", "witness"),
        rows=cells,
        payload={"rows": [dict(zip(("m", "bound", "witness"), c, strict=True)) for c in cells]},
    )


def wm_vs_la_document(rows: list[WmVsLaRow], decimal: int | None = None) -> Document:
    headers = ("m", "wm_ect", "la_ect", "wm_gct", "la_gct")
    cells = tuple(
        (
            str(r.m),
            format_value(r.wm_ect, decimal),
            format_value(r.la_ect, decimal),
            format_gct(r.wm_gct),
            format_gct(r.la_gct),
        )
        for r in rows
    )
    return Document(
        title="Wait-or-move against loop avoidance",
        headers=headers,
        rows=cells,
        payload={"rows": [dict(zip(headers, c, strict=True)) for c in cells]},
    )


def census_document(report: CensusReport, decimal: int | None = None) -> Document:
    """Census table with columns ``|W|, notation, focal, solvable, ECT/bound, method``."""
    headers = ("|W|", "notation", "focal", "solvable", "ECT/bound", "method")
    cells = []
    for entry in report.entries:
        estimate = entry.estimate
        if estimate is None:
            value, method = "-", "-"
        else:
            value = format_value(estimate.value, decimal)
            value = f"<= {value}" if estimate.bound else value
            method = estimate.method
        cells.append(
            (
                str(entry.edge_count),
                entry.notation,
                format_flag(entry.has_initial_focal_point),
                format_flag(entry.one_round_solvable),
                value,
                method,
            )
        )
    notes = [f"maximum: {report.maximum.notation}"]
    if report.wm_filter is not None:
        notes.append(f"games with more winning pairs have wait-or-move time at most {report.wm_filter}")
    if report.unconstrained_classes is not None:
        notes.append(f"{report.unconstrained_classes} classes without degree bound, all higher-degree ones one-round")
    return Document(
        title=f"{report.m}-choice games",
        headers=headers,
        rows=tuple(cells),
        payload={
            "m": report.m,
            "counts": report.counts(),
            "rows": [dict(zip(headers, c, strict=True)) for c in cells],
            "hard": [e.notation for e in report.hard],
            "maximum": report.maximum.notation,
        },
        notes=tuple(notes),
    )


def formula_e_document(
    params: FormulaEParams, value: Fraction, minimizers: Minimizers, decimal: int | None = None
) -> Document:
    rows = (
        ("p", str(params.p)),
        ("n", str(params.n)),
        ("e1", str(params.e1)),
        ("e2", str(params.e2)),
        ("value", format_value(value, decimal)),
        ("minimizers", str(minimizers)),
    )
    return Document(
        title="Touched-edge weighting",
        headers=("field", "value"),
        rows=rows,
        payload=dict(rows),
    )


def sweep_document(points: list[tuple[Fraction, Fraction]], decimal: int | None = None) -> Document:
    cells = tuple((format_value(p, decimal), format_value(v, decimal)) for p, v in points)
    return Document(
        title="Touched-edge weighting sweep",
        headers=("p", "value"),
        rows=cells,
        payload={"points": [{"p": p, "value": v} for p, v in cells]},
    )


def fixed_point_document(point: FixedPoint, decimal: int | None = None) -> Document:
    digits = decimal or 12
    values = {"e2": point.e2, "p2": point.p2, "e1": point.e1, "p1": point.p1}
    rows = tuple((name, c.text, format_value(c, digits)) for name, c in values.items())
    return Document(
        title="Optimal follow-up in 1x2 + 2x1",
        headers=("constant", "closed form", "value"),
        rows=rows,
        payload={
            "constants": {name: {"closed_form": text, "value": v} for name, text, v in rows},
            "iterations": {str(start): list(pair) for start, pair in point.iterations.items()},
        },
    )

