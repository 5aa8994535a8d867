"""Closed forms: loop avoidance on odd choice matching, formula (E) and the 3-choice fixed point."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import sympy
from pydantic import BaseModel, ConfigDict, field_validator

from ..errors import DomainError, EvenM, NoConvergence, VerificationFailed
from ..settings import get_settings
from .constants import E1, E2, AlgebraicConstant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaClosedForm:
    """Per-round coordination probabilities of loop avoidance on ``CM(m)``, ``m`` odd."""

    m: int
    per_round: tuple[Fraction, ...]
    expected: Fraction


def la_cm_closed_form(m: int) -> LaClosedForm:
    """Round ``l`` coordinates with ``(1/(m - 2l + 2)) * prod_{k<l-1} (m - 2k - 1)/(m - 2k)``.

    Raises:
        EvenM: ``m`` is even or not positive.

    """
    if m < 1 or m % 2 == 0:
        msg = f"closed form holds for odd m only, got {m}"
        raise EvenM(msg, item=m)
    per_round = []
    for rounds in range(1, (m + 1) // 2 + 1):
        survive = Fraction(1)
        for k in range(rounds - 1):
            survive *= Fraction(m - 2 * k - 1, m - 2 * k)
        per_round.append(survive / (m - 2 * rounds + 2))
    assert sum(per_round) == 1
    expected = sum((r * p for r, p in enumerate(per_round, start=1)), Fraction(0))
    return LaClosedForm(m, tuple(per_round), expected)


class FormulaEParams(BaseModel):
    """Parameters of formula (E): weight ``p`` on touched edges, ``n`` untouched edges, follow-up times."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    p: Fraction = Fraction(0)
    n: int
    e1: Fraction
    e2: Fraction

    @field_validator("p", "e1", "e2", mode="before")
    @classmethod
    def exact(cls, value: object) -> Fraction:
        try:
            return Fraction(value)  # type: ignore[arg-type]
        except (TypeError, ValueError, ZeroDivisionError) as e:
            msg = f"not a rational number: {value!r}"
            raise ValueError(msg) from e

    @field_validator("n")
    @classmethod
    def positive(cls, value: int) -> int:
        if value < 1:
            msg = "n must be at least 1"
            raise ValueError(msg)
        return value

    @field_validator("e1", "e2")
    @classmethod
    def at_least_one(cls, value: Fraction) -> Fraction:
        if value < 1:
            msg = "expected times are at least 1"
            raise ValueError(msg)
        return value

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        """``(a, b, c)`` with formula (E) equal to ``a p^2 + b p + c``."""
        touched = Fraction(1, 2) + Fraction(1, 2) * (1 + self.e1)
        untouched = Fraction(1, self.n) + Fraction(self.n - 1, self.n) * (1 + self.e2)
        return touched - 4 + untouched, 4 - 2 * untouched, untouched


@dataclass(frozen=True)
class Minimizers:
    """Minimizing set of formula (E) over ``[0, 1]``: finitely many points, or the whole interval."""

    points: tuple[Fraction, ...]
    interval: bool = False

    def __str__(self) -> str:
        return "[0, 1]" if self.interval else "{" + ", ".join(map(str, self.points)) + "}"


def _value(coefficients: tuple[Fraction, Fraction, Fraction], p: Fraction) -> Fraction:
    a, b, c = coefficients
    return a * p * p + b * p + c


def formula_e(params: FormulaEParams) -> tuple[Fraction, Minimizers]:
    """Value of formula (E) at ``params.p`` and its exact minimizing set over ``[0, 1]``.

    Raises:
        DomainError: ``p`` lies outside ``[0, 1]``.

    """
    if not 0 <= params.p <= 1:
        msg = f"p = {params.p} outside [0, 1]"
        raise DomainError(msg, field="p")
    coefficients = params.coefficients
    a, b, _ = coefficients
    if a == 0 and b == 0:
        return _value(coefficients, params.p), Minimizers((), interval=True)
    candidates = [Fraction(0), Fraction(1)]
    if a > 0 and 0 < -b / (2 * a) < 1:
        candidates.append(-b / (2 * a))
    least = min(_value(coefficients, p) for p in candidates)
    points = tuple(sorted(p for p in candidates if _value(coefficients, p) == least))
    return _value(coefficients, params.p), Minimizers(points)


def formula_e_sweep(params: FormulaEParams, steps: int) -> list[tuple[Fraction, Fraction]]:
    """``(p, value)`` pairs on ``steps + 1`` evenly spaced weights."""
    coefficients = params.coefficients
    return [(Fraction(k, steps), _value(coefficients, Fraction(k, steps))) for k in range(steps + 1)]


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _formula_e_expression(params: FormulaEParams, p: sympy.Symbol) -> sympy.Expr:
    # a split between a touched and an untouched edge coordinates in the round after
    touched = sympy.Rational(1, 2) + sympy.Rational(1, 2) * (1 + _rational(params.e1))
    untouched = sympy.Rational(1, params.n) + sympy.Rational(params.n - 1, params.n) * (1 + _rational(params.e2))
    return p**2 * touched + (1 - p) ** 2 * untouched + 2 * p * (1 - p) * 2


def _check_points(expr: sympy.Expr, p: sympy.Symbol, points: Sequence[tuple[Fraction, Fraction]]) -> None:
    for weight, computed in points:
        exact = expr.subs(p, _rational(weight))
        if exact != _rational(computed):
            msg = f"formula (E) at p = {weight} is {exact}, computed {computed}"
            raise VerificationFailed(msg, expected=str(exact))


def verify_formula_e(params: FormulaEParams, value: Fraction, minimizers: Minimizers) -> None:
    """Re-derive formula (E) symbolically and check a value and its minimizers.

    Raises:
        VerificationFailed: The symbolic value or the least stationary point disagrees.

    """
    p = sympy.Symbol("p")
    expr = _formula_e_expression(params, p)
    _check_points(expr, p, [(params.p, value)])
    slope = sympy.diff(expr, p)
    if sympy.expand(slope) == 0:
        if not minimizers.interval:
            msg = f"formula (E) is constant but the minimizers are {minimizers}"
            raise VerificationFailed(msg, expected="[0, 1]")
        return
    candidates = [sympy.Integer(0), sympy.Integer(1)]
    candidates += [r for r in sympy.solve(slope, p) if r.is_rational and 0 < r < 1]
    least = min(expr.subs(p, c) for c in candidates)
    points = tuple(sorted(Fraction(int(c.p), int(c.q)) for c in candidates if expr.subs(p, c) == least))
    if minimizers.interval or minimizers.points != points:
        msg = f"formula (E) is least at {{{', '.join(map(str, points))}}}, computed {minimizers}"
        raise VerificationFailed(msg, expected=str(points))


def verify_formula_e_sweep(params: FormulaEParams, points: Sequence[tuple[Fraction, Fraction]]) -> None:
    p = sympy.Symbol("p")
    _check_points(_formula_e_expression(params, p), p, points)


@dataclass(frozen=True)
class FixedPoint:
    """Optimal follow-up times and weights of the ``1x2 + 2x1`` analysis."""

    e2: AlgebraicConstant
    p2: AlgebraicConstant
    e1: AlgebraicConstant
    p1: AlgebraicConstant
    iterations: dict[float, tuple[float, float]]


def damped_fixed_point(
    step: Callable[[float], float],
    start: float,
    damping: float = 0.5,
    tolerance: float | None = None,
    max_iterations: int = 10_000,
) -> float:
    """Iterate ``x <- (1 - damping) x + damping step(x)`` until successive values agree.

    Raises:
        NoConvergence: No agreement within ``max_iterations`` steps.

    """
    tolerance = tolerance if tolerance is not None else get_settings().analysis.tolerance
    x = start
    for iteration in range(max_iterations):
        following = (1 - damping) * x + damping * step(x)
        if abs(following - x) < tolerance / 10:
            logger.debug("fixed point %.15f from %s after %d steps", following, start, iteration + 1)
            return following
        x = following
    msg = f"no convergence from {start} within {max_iterations} steps"
    raise NoConvergence(msg, item=max_iterations)


def _second_round(e2: float) -> float:
    p2 = 2 * e2 / (1 + 3 * e2)
    return 0.5 * (1 + 3 * e2) * p2 * p2 - 2 * e2 * p2 + (1 + e2)


def _first_round(e2: float) -> Callable[[float], float]:
    def step(e1: float) -> float:
        p1 = e1 / (e1 + e2)
        return (e1 + e2) * p1 * p1 - 2 * e1 * p1 + (1 + e1)

    return step


def three_choice_fixed_point(starts: tuple[float, ...] = (1.0, 1.5, 3.0)) -> FixedPoint:
    """Closed forms of ``E2``, ``p2*``, ``E1``, ``p1*`` cross-checked by damped iteration.

    Raises:
        NoConvergence: An iteration fails to settle or settles away from the closed form.

    """
    p2 = AlgebraicConstant.of(2 * E2.expr / (1 + 3 * E2.expr), "2*E2/(1+3*E2)")
    p1 = AlgebraicConstant.of(E1.expr / (E1.expr + E2.expr), "E1/(E1+E2)")
    assert sympy.expand(2 * E2.expr**2 - 3 * E2.expr - 1) == 0
    assert sympy.expand(E1.expr**2 - E1.expr - E2.expr) == 0
    iterations = {}
    for start in starts:
        e2 = damped_fixed_point(_second_round, start)
        e1 = damped_fixed_point(_first_round(e2), start)
        if not (E2.close_to(e2) and E1.close_to(e1)):
            msg = f"iteration from {start} settled at ({e2}, {e1}), away from the closed forms"
            raise NoConvergence(msg)
        iterations[start] = (e2, e1)
    return FixedPoint(e2=E2, p2=p2, e1=E1, p1=p1, iterations=iterations)


def verify_fixed_point(point: FixedPoint) -> None:
    """Check the closed forms exactly: each time is a fixed point of its round and each weight is optimal.

    Every recorded iteration must also have settled on the closed forms.

    Raises:
        VerificationFailed: A residual does not vanish or an iteration settled elsewhere.

    """
    e, q = sympy.symbols("e q", positive=True)
    e2 = point.e2.expr
    second = sympy.Rational(1, 2) * (1 + 3 * e) * q**2 - 2 * e * q + (1 + e)
    first = (e + e2) * q**2 - 2 * e * q + (1 + e)
    residuals = {
        "e2": second.subs({e: e2, q: point.p2.expr}) - e2,
        "p2": sympy.diff(second, q).subs({e: e2, q: point.p2.expr}),
        "e1": first.subs({e: point.e1.expr, q: point.p1.expr}) - point.e1.expr,
        "p1": sympy.diff(first, q).subs({e: point.e1.expr, q: point.p1.expr}),
    }
    for name, residual in residuals.items():
        if not residual.equals(0):
            msg = f"closed form of {name} leaves residual {sympy.N(residual, 12)}"
            raise VerificationFailed(msg, field=name)
    for start, (found_e2, found_e1) in point.iterations.items():
        if not (point.e2.close_to(found_e2) and point.e1.close_to(found_e1)):
            msg = f"iteration from {start} settled at ({found_e2}, {found_e1})"
            raise VerificationFailed(msg, item=len(point.iterations))
