"""Formatters - pure functions turning computed values into display strings."""

from __future__ import annotations

from datetime import datetime

try:
    from datetime import UTC
except ImportError:  # Python < 3.11
    from datetime import timezone

    UTC = timezone.utc
from fractions import Fraction

import sympy
from rich.table import Table

from ..analysis import AlgebraicConstant, GctResult

INFINITE = "inf"


def format_value(value: Fraction | AlgebraicConstant | int | float | None, decimal: int | None = None) -> str:
    """Render an exact value as a rational (``8/3``) or with ``decimal`` significant digits.

    Args:
        value: Rational, algebraic constant, integer or float; ``None`` means infinite
        decimal: Significant digits, or ``None`` for exact rendering

    Returns:
        Display string

    """
    if value is None:
        return INFINITE
    if decimal is None:
        return str(value)
    if isinstance(value, AlgebraicConstant):
        return str(sympy.N(value.expr, decimal))
    if isinstance(value, Fraction):
        return str(sympy.N(sympy.Rational(value.numerator, value.denominator), decimal))
    return str(sympy.N(value, decimal))


def format_gct(result: GctResult) -> str:
    return INFINITE if result.infinite else str(result.value)


def format_flag(flag: bool) -> str:
    return "yes" if flag else "no"


def timestamp_header(now: datetime | None = None) -> str:
    """Comment line stamped on generated tables.

    Args:
        now: Time to stamp, defaults to the current UTC time

    Returns:
        ``# generated <ISO time>``

    """
    moment = now or datetime.now(UTC)
    return f"# generated {moment.isoformat(timespec='seconds')}"


def create_table(headers: list[str], title: str | None = None) -> Table:
    """Create a Rich table with one column per header."""
    table = Table(title=title)
    for header in headers:
        table.add_column(header)
    return table
