"""Structurality checks and the symbolic two-edge maximizer."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import sympy

from ..game import Stage
from ..symmetry import renaming_generators
from .evaluation import evaluate
from .spec import ProtocolSpec

logger = logging.getLogger(__name__)


def check_structurality(spec: ProtocolSpec, stage: Stage) -> bool:
    """True when the protocol commutes with every renaming of ``stage``.

    For each renaming ``(beta, pi)`` and player ``i`` the weight player ``i`` puts on
    ``c`` must equal the weight player ``beta(i)`` puts on ``pi(c)``. Checking the
    generators of the renaming group is enough.
    """
    game = stage.game
    distributions = {p: evaluate(spec, stage, p) for p in (1, 2)}
    for renaming in renaming_generators(stage):
        for player in (1, 2):
            image_player = renaming.beta[player - 1]
            for local in range(game.sizes[player - 1]):
                image = renaming.apply(game, game.choice(player, local))
                assert image.player == image_player
                if distributions[player].prob(local) != distributions[image_player].prob(image.local):
                    logger.debug("%s breaks renaming %s at %s", spec, renaming.beta, stage)
                    return False
    return True


@dataclass(frozen=True)
class TwoEdgeResult:
    """Maximizer of the symmetric two-edge win probability ``2x(c - x)/c^2``."""

    argmax: sympy.Expr
    maximum: sympy.Expr
    verified: bool


def two_edge_maximizer() -> TwoEdgeResult:
    """Symbolic check that ``2x(c - x)/c^2`` peaks at ``x = c/2`` with value ``1/2``.

    The polynomial is compared coefficient by coefficient with its completed
    square ``1/2 - 2(x - c/2)^2 / c^2``.
    """
    x, c = sympy.symbols("x c", positive=True)
    win = 2 * x * (c - x) / c**2
    argmax = sympy.solve(sympy.diff(win, x), x)[0]
    maximum = sympy.simplify(win.subs(x, argmax))
    square = sympy.Rational(1, 2) - 2 * (x - c / 2) ** 2 / c**2
    numerator = sympy.Poly(sympy.expand((win - square) * c**2), x)
    verified = (
        all(coefficient == 0 for coefficient in numerator.all_coeffs())
        and sympy.simplify(sympy.diff(win, x, 2)) == -4 / c**2
    )
    return TwoEdgeResult(argmax=argmax, maximum=maximum, verified=bool(verified))
