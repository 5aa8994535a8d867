"""Colored graphs encoding two-player stages.

Vertices ``0 .. N-1`` are the choices of the game in global order, ``N`` and
``N + 1`` are the player markers joined to their own choices. Extra vertices may
follow (partition blocks, played profiles). Color-preserving automorphisms of
these graphs are exactly the renamings of the encoded structure.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from ..errors import UnsupportedPlayerCount
from ..game import Stage, WlcGame

Color = tuple[int, ...]

MARKER_COLOR: Color = (0,)
CHOICE_COLOR: Color = (1,)
BLOCK_COLOR: Color = (2,)
PROFILE_COLOR: Color = (3,)


@dataclass(frozen=True)
class ColoredGraph:
    colors: tuple[Color, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.colors)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors: list[set[int]] = [set() for _ in self.colors]
        for a, b in self.edges:
            neighbors[a].add(b)
            neighbors[b].add(a)
        return tuple(frozenset(s) for s in neighbors)


def require_two_players(game: WlcGame) -> None:
    if game.n_players != 2:
        msg = f"symmetry analysis supports two-player games only, got {game.n_players} players"
        raise UnsupportedPlayerCount(msg, item=game.n_players)


def structure_graph(
    game: WlcGame,
    choice_colors: Sequence[Color] | None = None,
    groups: Iterable[tuple[Color, Iterable[int]]] = (),
) -> ColoredGraph:
    """Graph of a two-player game with optional choice colors and extra group vertices.

    Args:
        game: Two-player game.
        choice_colors: One color per choice in global order; defaults to ``CHOICE_COLOR``.
        groups: ``(color, members)`` pairs; each adds a vertex joined to its member choices.

    """
    require_two_players(game)
    n_choices = game.n_choices
    colors: list[Color] = list(choice_colors) if choice_colors is not None else [CHOICE_COLOR] * n_choices
    colors += [MARKER_COLOR, MARKER_COLOR]

    edges: set[tuple[int, int]] = set()
    n1 = game.sizes[0]
    for a, b in game.winning:
        edges.add((a, n1 + b))
    for index in range(n_choices):
        edges.add((index, n_choices if index < n1 else n_choices + 1))
    for color, members in groups:
        vertex = len(colors)
        colors.append(color)
        edges.update((m, vertex) for m in members)
    return ColoredGraph(colors=tuple(colors), edges=tuple(sorted(edges)))


def round_colors(stage: Stage) -> list[Color]:
    """Choice colors recording, per round, whether the choice was played."""
    game = stage.game
    n1 = game.sizes[0]
    played = [[0] * len(stage.history) for _ in range(game.n_choices)]
    for round_index, (a, b) in enumerate(stage.history):
        played[a][round_index] = 1
        played[n1 + b][round_index] = 1
    return [(*CHOICE_COLOR, *bits) for bits in played]


def stage_graph(stage: Stage) -> ColoredGraph:
    """Graph whose automorphisms are the renamings of ``stage``."""
    return structure_graph(stage.game, round_colors(stage))
