"""Materialize a protocol as a table protocol over the reachable stage classes of a game."""

from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from pathlib import Path

from ..errors import ChainNotClosed, NotSimilarityInvariant
from ..game import Stage, WlcGame
from ..settings import get_settings
from ..symmetry import canonical_labeling, chain_key
from .evaluation import evaluate, support_profiles
from .spec import ProtocolSpec, ProtocolTable

logger = logging.getLogger(__name__)


def _entry(spec: ProtocolSpec, stage: Stage, player: int) -> tuple[str, int, dict[int, Fraction]]:
    labeling = canonical_labeling(stage)
    offset = stage.game.offsets[player - 1]
    distribution = evaluate(spec, stage, player)
    weights = {labeling.rank[offset + k]: w for k, w in distribution.weights}
    return labeling.key.digest, labeling.side[player - 1], weights


def export_table(spec: ProtocolSpec, game: WlcGame, max_classes: int | None = None) -> ProtocolTable:
    """Record ``spec``'s distributions on every stage class reachable from the initial stage.

    Classes are expanded by the protocol's own history view; each visited stage contributes
    one entry per player under its canonical class digest.

    Raises:
        ChainNotClosed: More than ``max_classes`` classes are reachable.
        NotSimilarityInvariant: Two similar stages receive different distributions.

    """
    limit = max_classes if max_classes is not None else get_settings().analysis.max_classes
    initial = Stage.initial(game)
    seen = {chain_key(initial, spec.view)}
    queue = deque([initial])
    entries: dict[str, dict[int, dict[int, Fraction]]] = {}
    while queue:
        stage = queue.popleft()
        for player in (1, 2):
            key, side, weights = _entry(spec, stage, player)
            recorded = entries.setdefault(key, {}).setdefault(side, weights)
            if recorded != weights:
                msg = f"{spec} gives different distributions on similar stages (class {key[:16]}, side {side})"
                raise NotSimilarityInvariant(msg, field=key, item=side)
        for profile, _ in support_profiles(spec, stage):
            after = stage.play_round(profile)
            if after.is_final:
                continue
            class_key = chain_key(after, spec.view)
            if class_key in seen:
                continue
            if len(seen) >= limit:
                msg = f"more than {limit} stage classes reachable under {spec}"
                raise ChainNotClosed(msg, item=limit)
            seen.add(class_key)
            queue.append(after)
    logger.debug("exported %s on %s: %d classes, %d table entries", spec, game, len(seen), len(entries))
    return ProtocolTable(entries)


def dump_table(table: ProtocolTable, path: Path) -> None:
    path.write_bytes(table.dumps())
