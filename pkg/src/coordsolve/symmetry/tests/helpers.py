"""Stage helpers shared by the symmetry, protocol and analysis tests."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from ...game import Stage, WlcGame


def relabel(stage: Stage, swap: bool, p1: Sequence[int], p2: Sequence[int]) -> Stage:
    """Rename the choices of a stage by ``p1``/``p2``, optionally exchanging the players."""
    n1, n2 = stage.game.sizes

    def image(profile: tuple[int, ...]) -> tuple[int, int]:
        a, b = p1[profile[0]], p2[profile[1]]
        return (b, a) if swap else (a, b)

    sizes = (n2, n1) if swap else (n1, n2)
    game = WlcGame.two_player(*sizes, [image(w) for w in stage.game.winning])
    return Stage(game=game, history=tuple(image(p) for p in stage.history))


def stages_to_depth(game: WlcGame, depth: int) -> list[Stage]:
    """Every non-final stage with at most ``depth`` rounds."""
    frontier = [Stage.initial(game)]
    stages = list(frontier)
    for _ in range(depth):
        following = []
        for stage in frontier:
            for profile in itertools.product(*(range(s) for s in game.sizes)):
                after = stage.play_round(profile)
                if not after.is_final:
                    following.append(after)
        stages += following
        frontier = following
    return stages


def labels(game: WlcGame, indices: Iterable[int]) -> set[str]:
    return {str(game.choice_at(k)) for k in indices}
