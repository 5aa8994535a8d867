"""Game validation.

``validate`` never raises: it returns an ``Errors`` report whose items carry the
codes of the typed game exceptions (``disjointness_violation``,
``surely_losing_choice``, ...). ``ensure_valid`` raises the first item.
"""

from __future__ import annotations

import logging
from collections import Counter

from ..errors import DisjointnessViolation, Errors, InvalidGame, SurelyLosingChoice, raise_first
from .models import WlcGame

logger = logging.getLogger(__name__)


def validate(game: WlcGame) -> Errors:
    """Check every invariant of a win-lose coordination game.

    Args:
        game: Any game value, including hand-built ones.

    Returns:
        Report listing each violated invariant; empty when the game is valid.

    """
    report = Errors.empty()
    if game.n_players < 1:
        report.add("a game needs at least one player", code=InvalidGame.code)
        return report

    _check_choice_sets(game, report)
    _check_winning(game, report)
    if report.ok:
        _check_surely_losing(game, report)

    if not report.ok:
        logger.debug("validation of %s: %s", game, report.summary())
    return report


def ensure_valid(game: WlcGame) -> WlcGame:
    raise_first(validate(game))
    return game


def _check_choice_sets(game: WlcGame, report: Errors) -> None:
    seen: dict[tuple[int, int], int] = {}
    for index, choices in enumerate(game.choice_sets):
        player = index + 1
        if not choices:
            report.add(f"player {player} has no choices", field=f"player{player}", code=InvalidGame.code)
        for position, choice in enumerate(choices):
            key = (choice.player, choice.local)
            if key in seen:
                report.add(
                    f"choice {choice} appears in the choice sets of players {seen[key]} and {player}",
                    field=choice.name,
                    code=DisjointnessViolation.code,
                )
                continue
            seen[key] = player
            if choice.player != player or choice.local != position:
                report.add(
                    f"choice {choice} listed for player {player} at position {position}",
                    field=choice.name,
                    code=DisjointnessViolation.code,
                )

    labels = Counter(c.label for cs in game.choice_sets for c in cs if c.label is not None)
    for label, count in sorted(labels.items()):
        if count > 1:
            report.add(
                f"label {label!r} names {count} different choices",
                field=label,
                code=DisjointnessViolation.code,
            )


def _check_winning(game: WlcGame, report: Errors) -> None:
    if not game.winning:
        report.add("the winning relation is empty", code=InvalidGame.code)
    for item, profile in enumerate(game.winning):
        if len(profile) != game.n_players:
            report.add(
                f"winning profile {profile} has arity {len(profile)}, expected {game.n_players}",
                code=InvalidGame.code,
                item=item,
            )
            continue
        for player, local in enumerate(profile):
            if not 0 <= local < len(game.choice_sets[player]):
                report.add(
                    f"winning profile {profile} uses unknown choice {local} of player {player + 1}",
                    code=InvalidGame.code,
                    item=item,
                )


def _check_surely_losing(game: WlcGame, report: Errors) -> None:
    used = [{w[p] for w in game.winning} for p in range(game.n_players)]
    for player, choices in enumerate(game.choice_sets):
        for choice in choices:
            if choice.local not in used[player]:
                report.add(
                    f"choice {choice} occurs in no winning profile",
                    field=choice.name,
                    code=SurelyLosingChoice.code,
                )
