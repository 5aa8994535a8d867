"""Presentation layer: console abstraction, formatters and renderers."""

from .console import ConsoleInterface, RichConsole
from .formatters import (
    INFINITE,
    create_table,
    format_flag,
    format_gct,
    format_value,
    timestamp_header,
)
from .renderers import (
    Document,
    bounds_document,
    census_document,
    classify_document,
    ect_document,
    fixed_point_document,
    formula_e_document,
    gct_document,
    oscp_document,
    render,
    render_csv,
    render_json,
    render_text,
    simulation_document,
    summary_document,
    sweep_document,
    wm_vs_la_document,
    write_histogram,
)

__all__ = [
    "INFINITE",
    "ConsoleInterface",
    "Document",
    "RichConsole",
    "bounds_document",
    "census_document",
    "classify_document",
    "create_table",
    "ect_document",
    "fixed_point_document",
    "format_flag",
    "format_gct",
    "format_value",
    "formula_e_document",
    "gct_document",
    "oscp_document",
    "render",
    "render_csv",
    "render_json",
    "render_text",
    "simulation_document",
    "summary_document",
    "sweep_document",
    "timestamp_header",
    "wm_vs_la_document",
    "write_histogram",
]
