"""Exact linear algebra over the rationals, on sympy's domain matrices."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..errors import SingularSystem


def _rational(value: Fraction) -> object:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` by LU decomposition over ``QQ``.

    Raises:
        SingularSystem: The matrix has no inverse.

    """
    n = len(matrix)
    if n != len(rhs):
        msg = f"{n} equations but {len(rhs)} right-hand sides"
        raise SingularSystem(msg, item=n)
    if n == 0:
        return []
    system = DomainMatrix([[_rational(v) for v in row] for row in matrix], (n, n), QQ)
    column = DomainMatrix([[_rational(b)] for b in rhs], (n, 1), QQ)
    try:
        solution = system.lu_solve(column)
    except DMNonInvertibleMatrixError as exc:
        msg = f"singular system of {n} equations"
        raise SingularSystem(msg, item=n) from exc
    return [Fraction(int(x.numerator), int(x.denominator)) for x in solution.to_list_flat()]
