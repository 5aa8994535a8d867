"""Structural equivalence, stage class keys and canonical coordinates."""

from __future__ import annotations

import hashlib
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import orjson

from ..game import ChoiceId, Stage, WlcGame
from ..types import HistoryView
from .search import CanonicalForm, Encoding, Orbits, automorphism_generators, canonical_form
from .structure import BLOCK_COLOR, CHOICE_COLOR, PROFILE_COLOR, ColoredGraph, stage_graph, structure_graph


@dataclass(frozen=True)
class EquivPartition:
    """Blocks of structurally equivalent choices, as sorted global indices."""

    game: WlcGame
    blocks: tuple[tuple[int, ...], ...]

    @cached_property
    def _block_index(self) -> dict[int, int]:
        return {c: i for i, block in enumerate(self.blocks) for c in block}

    def block_of(self, index: int) -> tuple[int, ...]:
        return self.blocks[self._block_index[index]]

    def equivalent(self, a: int, b: int) -> bool:
        return self._block_index[a] == self._block_index[b]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def choice_blocks(self) -> list[list[ChoiceId]]:
        return [[self.game.choice_at(c) for c in block] for block in self.blocks]

    def as_labels(self) -> list[list[str]]:
        return [[str(c) for c in block] for block in self.choice_blocks()]

    def to_dict(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks], "labels": self.as_labels()}

    def dumps(self) -> bytes:
        return orjson.dumps(self.to_dict())


def equiv_partition(stage: Stage) -> EquivPartition:
    """Orbits of the renaming group on the choices of ``stage``."""
    graph = stage_graph(stage)
    n = stage.game.n_choices
    orbits = Orbits(graph.n, automorphism_generators(graph))
    return EquivPartition(stage.game, orbits.blocks(range(n)))


@dataclass(frozen=True)
class StageClassKey:
    """Canonical encoding of a stage class; equal keys mean structurally similar stages."""

    encoding: Encoding | tuple

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.encoding)

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(orjson.dumps(self.encoding)).hexdigest()

    def __str__(self) -> str:
        return self.digest[:16]


def partition_graph(stage: Stage) -> ColoredGraph:
    """The bare game plus one vertex per block of the equivalence partition."""
    partition = equiv_partition(stage)
    return structure_graph(stage.game, groups=((BLOCK_COLOR, block) for block in partition.blocks))


def canonical_key(stage: Stage) -> StageClassKey:
    return StageClassKey(canonical_form(partition_graph(stage)).encoding)


def similar(first: Stage, second: Stage) -> bool:
    """True when the stages are joined by renamings and equal-partition steps."""
    return canonical_key(first) == canonical_key(second)


def isomorphic(first: WlcGame, second: WlcGame) -> bool:
    """True when some renaming maps one bare game onto the other."""
    return game_key(first) == game_key(second)


def game_key(game: WlcGame) -> StageClassKey:
    return StageClassKey(canonical_form(structure_graph(game)).encoding)


@dataclass(frozen=True)
class CanonicalLabeling:
    """Canonical coordinates of the choices of a stage.

    ``side[p]`` is the canonical side (1 or 2) of player ``p + 1``; ``rank[k]`` is the
    canonical rank of global choice ``k`` among the choices of its side.
    """

    key: StageClassKey
    side: tuple[int, int]
    rank: tuple[int, ...]

    def coordinates(self, game: WlcGame, index: int) -> tuple[int, int]:
        choice = game.choice_at(index)
        return self.side[choice.player - 1], self.rank[index]




def _labeling(game: WlcGame, graph: ColoredGraph, tag: str | None = None) -> CanonicalLabeling:
    form: CanonicalForm = canonical_form(graph)
    n = game.n_choices
    markers = (form.positions[n], form.positions[n + 1])
    side = (1, 2) if markers[0] < markers[1] else (2, 1)
    n1 = game.sizes[0]
    rank = [0] * n
    for player_side in (range(n1), range(n1, n)):
        ordered = sorted(player_side, key=lambda k: form.positions[k])
        for r, k in enumerate(ordered):
            rank[k] = r
    key = StageClassKey(form.encoding if tag is None else (tag, form.encoding))
    return CanonicalLabeling(key, side, tuple(rank))


def canonical_labeling(stage: Stage) -> CanonicalLabeling:
    return _labeling(stage.game, partition_graph(stage))


def _first_use_colors(stage: Stage) -> list[tuple[int, ...]] | None:
    game = stage.game
    n1 = game.sizes[0]
    rank = [0] * game.n_choices
    used: list[list[int]] = [[], []]
    for profile in stage.history:
        for player, local in enumerate(profile):
            index = local if player == 0 else n1 + local
            if index not in used[player]:
                used[player].append(index)
                rank[index] = len(used[player])
    if any(len(u) > 2 for u in used):
        return None
    return [(*CHOICE_COLOR, r) for r in rank]


def view_labeling(stage: Stage, view: HistoryView) -> CanonicalLabeling:
    """Canonical coordinates of the part of the history a protocol reads.

    Stages with equal keys behave identically under any renaming-invariant
    protocol reading only that view, now and in every later round.
    """
    game = stage.game
    match view:
        case HistoryView.PARTITION:
            return canonical_labeling(stage)
        case HistoryView.NONE:
            return _labeling(game, structure_graph(game), "none")
        case HistoryView.FIRST_USES:
            colors = _first_use_colors(stage)
            if colors is None:
                return _labeling(game, structure_graph(game), "many-choices")
            return _labeling(game, structure_graph(game, colors))
    n1 = game.sizes[0]
    profiles = sorted(set(stage.history))
    groups = ((PROFILE_COLOR, (a, n1 + b)) for a, b in profiles)
    return _labeling(game, structure_graph(game, groups=groups))


def chain_key(stage: Stage, view: HistoryView) -> StageClassKey:
    return view_labeling(stage, view).key
