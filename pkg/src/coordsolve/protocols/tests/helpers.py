"""Stages reachable under a protocol's own play."""

from __future__ import annotations

from ...game import Stage, WlcGame
from ..evaluation import support_profiles
from ..spec import ProtocolSpec


def reachable_stages(spec: ProtocolSpec, game: WlcGame, depth: int) -> list[Stage]:
    """Non-final stages with at most ``depth`` rounds reached with positive probability."""
    frontier = [Stage.initial(game)]
    stages = list(frontier)
    for _ in range(depth):
        following = {}
        for stage in frontier:
            for profile, _ in support_profiles(spec, stage):
                after = stage.play_round(profile)
                if not after.is_final:
                    following[after] = None
        frontier = list(following)
        stages += frontier
    return stages
