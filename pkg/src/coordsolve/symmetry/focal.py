"""Focal points, conjugates and one-round solvability of two-player stages."""

from __future__ import annotations

import logging

from ..errors import NotAChoiceMatchingGame
from ..game import ChoiceId, Stage, WlcGame
from .group import renaming_generators
from .partition import EquivPartition, equiv_partition
from .structure import require_two_players

logger = logging.getLogger(__name__)


def _global_edges(game: WlcGame) -> list[tuple[int, int]]:
    n1 = game.sizes[0]
    return [(a, n1 + b) for a, b in game.winning]


def _adjacent(game: WlcGame) -> dict[int, set[int]]:
    adjacent: dict[int, set[int]] = {k: set() for k in range(game.n_choices)}
    for a, b in _global_edges(game):
        adjacent[a].add(b)
        adjacent[b].add(a)
    return adjacent


def focal_indices(stage: Stage, partition: EquivPartition | None = None) -> frozenset[int]:
    """Global indices of choices equivalent to nothing outside one of their own winning edges."""
    require_two_players(stage.game)
    partition = partition or equiv_partition(stage)
    adjacent = _adjacent(stage.game)
    focal: set[int] = set()
    for c in range(stage.game.n_choices):
        block = set(partition.block_of(c))
        if len(block) == 1 or any(block <= {c, d} for d in adjacent[c]):
            focal.add(c)
    return frozenset(focal)


def focal_points(stage: Stage) -> frozenset[ChoiceId]:
    return frozenset(stage.game.choice_at(c) for c in focal_indices(stage))


def focal_edges(stage: Stage, partition: EquivPartition | None = None) -> list[tuple[int, int]]:
    """Winning edges ``{x, y}`` whose endpoints' blocks lie inside ``{x, y}``, as local-index profiles.

    Every renaming of the stage fixes such an edge, so both players can play it.
    """
    require_two_players(stage.game)
    partition = partition or equiv_partition(stage)
    n1 = stage.game.sizes[0]
    return [
        (a, b)
        for a, b in stage.game.winning
        if set(partition.block_of(a)) | set(partition.block_of(n1 + b)) <= {a, n1 + b}
    ]


def is_choice_matching(game: WlcGame) -> bool:
    n1, n2 = game.sizes
    degrees = game.degrees()
    return n1 == n2 and all(d == 1 for side in degrees for d in side)


def conjugates(stage: Stage) -> frozenset[frozenset[ChoiceId]]:
    """Same-player pairs ``{u, u'}`` on edges ``(u, v)``, ``(u', v')`` with ``u ~ v'`` and ``u' ~ v``.

    Raises:
        NotAChoiceMatchingGame: The winning relation is not a perfect matching.

    """
    game = stage.game
    require_two_players(game)
    if not is_choice_matching(game):
        msg = "conjugates are defined for choice matching games only"
        raise NotAChoiceMatchingGame(msg)
    partition = equiv_partition(stage)
    partner: dict[int, int] = {}
    for a, b in _global_edges(game):
        partner[a] = b
        partner[b] = a
    n1 = game.sizes[0]
    pairs: set[frozenset[ChoiceId]] = set()
    for side in (range(n1), range(n1, game.n_choices)):
        for u in side:
            for u2 in side:
                if u < u2 and partition.equivalent(u, partner[u2]) and partition.equivalent(u2, partner[u]):
                    pairs.add(frozenset({game.choice_at(u), game.choice_at(u2)}))
    return frozenset(pairs)


def one_round_solvable(stage: Stage) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Block parts ``(K1, K2)`` with ``K1 x K2`` inside the winning relation, if any.

    ``K1`` holds player-1 choices and ``K2`` player-2 choices, both as global indices.
    When a renaming swaps the players the two parts come from one block, since a
    structural protocol plays the swapped image of player 1's support.
    """
    game = stage.game
    require_two_players(game)
    partition = equiv_partition(stage)
    n1 = game.sizes[0]
    edges = set(_global_edges(game))

    def covered(k1: tuple[int, ...], k2: tuple[int, ...]) -> bool:
        return bool(k1) and bool(k2) and all((a, b) in edges for a in k1 for b in k2)

    sides = [
        (tuple(c for c in block if c < n1), tuple(c for c in block if c >= n1)) for block in partition.blocks
    ]
    if any(r.swaps_players for r in renaming_generators(stage)):
        candidates = [(k1, k2) for k1, k2 in sides]
    else:
        firsts = [k1 for k1, _ in sides if k1]
        seconds = [k2 for _, k2 in sides if k2]
        candidates = [(k1, k2) for k1 in firsts for k2 in seconds]
    for k1, k2 in candidates:
        if covered(k1, k2):
            return k1, k2
    return None
