"""Game core: win-lose coordination games, the notation language and stages."""

from .builders import build, build_notation, complement
from .io import (
    GameDocument,
    StageDocument,
    dump_game,
    dump_stage,
    load_game,
    load_stage,
    parse_history,
    resolve_game,
    stage_from_history,
)
from .models import ChoiceId, Profile, Stage, WlcGame, default_label
from .notation import GameExpr, arity, parse_notation, to_notation
from .validation import ensure_valid, validate

__all__ = [
    "ChoiceId",
    "GameDocument",
    "GameExpr",
    "Profile",
    "Stage",
    "StageDocument",
    "WlcGame",
    "arity",
    "build",
    "build_notation",
    "complement",
    "default_label",
    "dump_game",
    "dump_stage",
    "ensure_valid",
    "load_game",
    "load_stage",
    "parse_history",
    "parse_notation",
    "resolve_game",
    "stage_from_history",
    "to_notation",
    "validate",
]
