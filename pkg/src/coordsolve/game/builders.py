"""Evaluate game expressions into ``WlcGame`` values.

Choices are numbered player-major in the order terms are written: a disjoint
union lists the choices of its left operand before those of its right operand
for every player.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from ..errors import EmptyComplement, SurelyLosingChoice
from .models import Profile, WlcGame
from .notation import (
    ChoiceMatching,
    Complement,
    Cycle,
    GameExpr,
    Ladder,
    MultiChoiceMatching,
    Product,
    Relation,
    Repeat,
    Sigma,
    Sum,
    arity,
    parse_notation,
)
from .validation import ensure_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Component:
    sizes: tuple[int, ...]
    edges: tuple[Profile, ...]

    def union(self, other: _Component) -> _Component:
        shifted = tuple(tuple(k + self.sizes[p] for p, k in enumerate(e)) for e in other.edges)
        sizes = tuple(a + b for a, b in zip(self.sizes, other.sizes, strict=True))
        return _Component(sizes, self.edges + shifted)


def _two(n1: int, n2: int, edges) -> _Component:
    return _Component((n1, n2), tuple(edges))


def _evaluate(expr: GameExpr) -> _Component:
    match expr:
        case ChoiceMatching(m=m):
            return _two(m, m, ((i, i) for i in range(m)))
        case MultiChoiceMatching(n=n, m=m):
            return _Component((m,) * n, tuple((i,) * n for i in range(m)))
        case Cycle(m=m):
            return _two(m, m, itertools.chain.from_iterable(((i, i), (i, (i - 1) % m)) for i in range(m)))
        case Ladder(m=m):
            edges = [(i, i) for i in range(m)] + [(i + 1, i) for i in range(m - 1)]
            return _two(m, m, sorted(edges))
        case Sigma(m=m, reflected=reflected):
            edges = sorted([(i, i) for i in range(m - 1)] + [(i, i + 1) for i in range(m - 1)])
            if reflected:
                return _two(m, m - 1, sorted((b, a) for a, b in edges))
            return _two(m - 1, m, edges)
        case Product(a=a, b=b):
            return _two(a, b, itertools.product(range(a), range(b)))
        case Relation(a=a, b=b, edges=edges):
            return _two(a, b, edges)
        case Repeat(k=k, expr=inner):
            part = _evaluate(inner)
            result = part
            for _ in range(k - 1):
                result = result.union(part)
            return result
        case Sum(terms=terms):
            parts = [_evaluate(t) for t in terms]
            result = parts[0]
            for part in parts[1:]:
                result = result.union(part)
            return result
        case Complement(expr=inner):
            game = complement(_game(_evaluate(inner)))
            return _Component(game.sizes, game.winning)
    msg = f"not a game expression: {expr!r}"
    raise TypeError(msg)


def _game(component: _Component) -> WlcGame:
    return WlcGame.create(component.sizes, component.edges)


def build(expr: GameExpr) -> WlcGame:
    """Build and validate the game an expression denotes.

    Raises:
        InvalidGame: The expression yields a game violating an invariant.

    """
    game = ensure_valid(_game(_evaluate(expr)))
    logger.debug("built %s with %d-player sizes %s", game, arity(expr), game.sizes)
    return game


def build_notation(text: str) -> WlcGame:
    """Shortcut for ``build(parse_notation(text))``."""
    return build(parse_notation(text))


def complement(game: WlcGame) -> WlcGame:
    """Game whose winning relation is the full product minus ``game``'s.

    Raises:
        EmptyComplement: The relation is already the full product.
        SurelyLosingChoice: Some choice wins with every profile of the others.

    """
    winning = [p for p in itertools.product(*(range(s) for s in game.sizes)) if p not in game.winning_set]
    if not winning:
        msg = "complement of a full product has no winning profile"
        raise EmptyComplement(msg)
    for player, choices in enumerate(game.choice_sets):
        used = {p[player] for p in winning}
        for choice in choices:
            if choice.local not in used:
                msg = f"choice {choice} occurs in no winning profile of the complement"
                raise SurelyLosingChoice(msg, field=choice.name)
    labels = [[c.label for c in cs] for cs in game.choice_sets]
    return WlcGame.create(game.sizes, winning, labels)
