"""Algebraic constants with exact symbolic form and a decimal shadow."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import sympy

from ..settings import get_settings


@dataclass(frozen=True)
class AlgebraicConstant:
    """An algebraic number such as ``(3 + sqrt(17))/4``.

    The sympy expression is the source of truth. ``decimal`` holds the
    configured number of significant digits; comparisons with plain numbers
    use the configured absolute tolerance.
    """

    expr: sympy.Expr = field(compare=False)
    text: str

    @classmethod
    def of(cls, expr: sympy.Expr, text: str | None = None) -> AlgebraicConstant:
        return cls(expr=expr, text=text or sympy.sstr(expr))

    @cached_property
    def decimal(self) -> str:
        return str(sympy.N(self.expr, get_settings().analysis.decimal_digits))

    def __float__(self) -> float:
        return float(sympy.N(self.expr, 30))

    def close_to(self, other: float | Fraction | AlgebraicConstant, tolerance: float | None = None) -> bool:
        tolerance = tolerance if tolerance is not None else get_settings().analysis.tolerance
        return abs(float(self) - float(other)) <= tolerance

    def exceeds(self, other: Fraction) -> bool:
        """Exact comparison against a rational."""
        return bool(sympy.simplify(self.expr - sympy.Rational(other.numerator, other.denominator)) > 0)

    def __str__(self) -> str:
        return self.text


E2 = AlgebraicConstant.of((3 + sympy.sqrt(17)) / 4, "(3+sqrt(17))/4")
E1 = AlgebraicConstant.of((1 + sympy.sqrt(4 + sympy.sqrt(17))) / 2, "(1+sqrt(4+sqrt(17)))/2")
