"""Evaluation of protocols on stages.

All arithmetic is exact. Evaluations are memoized per (protocol, stage, player).
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache

from ..errors import FinalStage, TableMiss, UnsupportedPlayerCount, UsageError
from ..game import Profile, Stage
from ..symmetry import canonical_labeling, equiv_partition, focal_edges, view_labeling
from ..types import HistoryView, ProtocolKind
from .distribution import Distribution
from .spec import ProtocolSpec

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def evaluate(spec: ProtocolSpec, stage: Stage, player: int) -> Distribution:
    """Distribution of ``player`` (1-based) over its choices at ``stage``.

    Raises:
        FinalStage: The stage already ends in coordination.
        TableMiss: A table protocol has no entry for the stage class.
        UnsupportedPlayerCount: A two-player protocol is asked about another game.

    """
    if stage.is_final:
        msg = "no protocol move at a final stage"
        raise FinalStage(msg, item=stage.rounds)
    if not 1 <= player <= stage.game.n_players:
        msg = f"game has no player {player}"
        raise UsageError(msg, field="player", item=player)
    if spec.kind is not ProtocolKind.UNIFORM and stage.game.n_players != 2:
        msg = f"protocol {spec} is defined for two-player games only"
        raise UnsupportedPlayerCount(msg, item=stage.game.n_players)
    return _evaluate(spec, stage, player)


@lru_cache(maxsize=65536)
def _evaluate(spec: ProtocolSpec, stage: Stage, player: int) -> Distribution:
    match spec.kind:
        case ProtocolKind.UNIFORM:
            return _uniform(stage, player)
        case ProtocolKind.WM:
            return _wait_or_move(stage, player)
        case ProtocolKind.LA:
            return _loop_avoidance(stage, player)
        case ProtocolKind.TOUCHED:
            assert spec.p is not None
            return _touched(stage, player, spec.p)
        case ProtocolKind.TABLE:
            return _table(spec, stage, player)
    msg = f"unknown protocol kind {spec.kind}"
    raise ValueError(msg)


def _uniform(stage: Stage, player: int) -> Distribution:
    return Distribution.uniform(player, range(stage.game.sizes[player - 1]))


def used_choices(stage: Stage) -> tuple[list[int], list[int]]:
    """Distinct local choices per player in order of first use."""
    used: tuple[list[int], list[int]] = ([], [])
    for profile in stage.history:
        for p, local in enumerate(profile):
            if local not in used[p]:
                used[p].append(local)
    return used


def _wait_or_move(stage: Stage, player: int) -> Distribution:
    used = used_choices(stage)
    own, other = used[player - 1], used[2 - player]
    if len(own) == 1 and len(other) == 1:
        coordinating = stage.game.neighbors[2 - player][other[0]]
        weights = {own[0]: HALF}
        for local in coordinating:
            weights[local] = weights.get(local, Fraction(0)) + HALF / len(coordinating)
        return Distribution.from_mapping(player, weights)
    if len(own) == 2 and len(other) == 2:
        return Distribution.uniform(player, own)
    return _uniform(stage, player)


def _profile(player: int, own: int, other: int) -> Profile:
    return (own, other) if player == 1 else (other, own)


def avoided_choices(stage: Stage, player: int) -> frozenset[int]:
    """Choices from which some opponent reply recreates the current partition without coordinating."""
    game = stage.game
    partition = equiv_partition(stage)
    n1 = game.sizes[0]

    def global_index(p: int, local: int) -> int:
        return local if p == 1 else n1 + local

    opponent = 3 - player
    avoided: set[int] = set()
    for c in range(game.sizes[player - 1]):
        gc = global_index(player, c)
        for d in range(game.sizes[opponent - 1]):
            gd = global_index(opponent, d)
            profile = _profile(player, c, d)
            if game.is_winning(profile):
                continue
            pair = {gc, gd}
            if not (set(partition.block_of(gc)) <= pair and set(partition.block_of(gd)) <= pair):
                continue
            if equiv_partition(stage.play_round(profile)).blocks == partition.blocks:
                avoided.add(c)
                break
    return frozenset(avoided)


def _loop_avoidance(stage: Stage, player: int) -> Distribution:
    choices = range(stage.game.sizes[player - 1])
    allowed = [c for c in choices if c not in avoided_choices(stage, player)]
    return Distribution.uniform(player, allowed or choices)


def touched_choices(stage: Stage, player: int) -> frozenset[int]:
    """Own choices lying on some touched edge."""
    return frozenset(w[player - 1] for w in stage.touched_edges())


def completion_edge(stage: Stage) -> Profile | None:
    """Focal edge both players complete on under the touched-edge protocol, if any.

    Edges are ranked by their endpoints in canonical coordinates of the played
    profile set, the view the touched-edge chain is lumped by, so renamed stages
    complete on corresponding edges.
    """
    edges = focal_edges(stage)
    if not edges:
        return None
    labeling = view_labeling(stage, HistoryView.PROFILE_SET)
    game = stage.game
    n1 = game.sizes[0]

    def rank(edge: Profile) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((labeling.coordinates(game, edge[0]), labeling.coordinates(game, n1 + edge[1]))))

    return min(edges, key=rank)


def _touched(stage: Stage, player: int, p: Fraction) -> Distribution:
    chosen = completion_edge(stage)
    if chosen is not None:
        return Distribution.point(player, chosen[player - 1])

    touched = sorted(touched_choices(stage, player))
    untouched = [c for c in range(stage.game.sizes[player - 1]) if c not in touched]
    if not touched or not untouched:
        return Distribution.uniform(player, touched or untouched)
    weights = {c: p / len(touched) for c in touched}
    weights.update({c: (1 - p) / len(untouched) for c in untouched})
    return Distribution.from_mapping(player, weights)


def _table(spec: ProtocolSpec, stage: Stage, player: int) -> Distribution:
    assert spec.table is not None
    labeling = canonical_labeling(stage)
    side = labeling.side[player - 1]
    entry = spec.table.lookup(labeling.key.digest, side)
    if entry is None:
        msg = f"table has no entry for class {labeling.key} side {side}"
        raise TableMiss(msg, field=labeling.key.digest, item=side)
    game = stage.game
    offset = game.offsets[player - 1]
    by_rank = {labeling.rank[offset + k]: k for k in range(game.sizes[player - 1])}
    if any(r not in by_rank for r in entry):
        msg = f"table entry for class {labeling.key} names unknown choice ranks"
        raise TableMiss(msg, field=labeling.key.digest, item=side)
    return Distribution.from_mapping(player, {by_rank[r]: w for r, w in entry.items()})


def support_profiles(spec: ProtocolSpec, stage: Stage) -> list[tuple[Profile, Fraction]]:
    """Profiles played with positive probability under independent play, with their probabilities.

    Raises:
        FinalStage: The stage already ends in coordination.

    """
    distributions = [evaluate(spec, stage, p + 1) for p in range(stage.game.n_players)]
    profiles: list[tuple[Profile, Fraction]] = []
    for combo in itertools.product(*(d.weights for d in distributions)):
        probability = Fraction(1)
        for _, weight in combo:
            probability *= weight
        profiles.append((tuple(local for local, _ in combo), probability))
    return profiles

