"""JSON documents for games and stages, and textual histories.

Game document: ``{"n": 2, "choices": [["a1", "b1"], ["a2", "b2"]], "winning": [[0, 0], [1, 1]]}``
with 0-based indices; stage documents add ``"history": [[0, 1], ...]``.
"""

from __future__ import annotations

from pathlib import Path

import orjson
from pydantic import BaseModel, Field, ValidationError, model_validator

from ..errors import InvalidGame, InvalidProfile, UsageError
from .builders import build_notation
from .models import Profile, Stage, WlcGame
from .validation import ensure_valid


class GameDocument(BaseModel):
    n: int = Field(ge=1)
    choices: list[list[str]]
    winning: list[list[int]]

    @model_validator(mode="after")
    def players_match(self) -> GameDocument:
        if len(self.choices) != self.n:
            msg = f"'choices' lists {len(self.choices)} players, 'n' is {self.n}"
            raise ValueError(msg)
        return self

    @classmethod
    def from_game(cls, game: WlcGame) -> GameDocument:
        return cls(n=game.n_players, choices=game.labels(), winning=[list(w) for w in game.winning])

    def to_game(self) -> WlcGame:
        return ensure_valid(WlcGame.create([len(c) for c in self.choices], self.winning, self.choices))


class StageDocument(GameDocument):
    history: list[list[int]] = Field(default_factory=list)

    @classmethod
    def from_stage(cls, stage: Stage) -> StageDocument:
        game = GameDocument.from_game(stage.game)
        return cls(**game.model_dump(), history=[list(p) for p in stage.history])

    def to_stage(self) -> Stage:
        return Stage(game=self.to_game(), history=tuple(tuple(p) for p in self.history))


def _load(source: str | bytes | Path) -> dict:
    if isinstance(source, Path):
        source = source.read_bytes()
    try:
        data = orjson.loads(source)
    except orjson.JSONDecodeError as e:
        msg = f"invalid JSON: {e}"
        raise UsageError(msg) from e
    if not isinstance(data, dict):
        msg = "expected a JSON object"
        raise UsageError(msg)
    return data


def load_game(source: str | bytes | Path) -> WlcGame:
    try:
        return GameDocument.model_validate(_load(source)).to_game()
    except ValidationError as e:
        raise InvalidGame(e) from e


def load_stage(source: str | bytes | Path) -> Stage:
    try:
        return StageDocument.model_validate(_load(source)).to_stage()
    except ValidationError as e:
        raise InvalidGame(e) from e


def dump_game(game: WlcGame) -> bytes:
    return orjson.dumps(GameDocument.from_game(game).model_dump(), option=orjson.OPT_INDENT_2)


def dump_stage(stage: Stage) -> bytes:
    return orjson.dumps(StageDocument.from_stage(stage).model_dump(), option=orjson.OPT_INDENT_2)


def resolve_game(text: str) -> WlcGame:
    """A game from notation, or from a JSON file when ``text`` starts with ``@``."""
    if text.startswith("@"):
        path = Path(text[1:])
        if not path.is_file():
            msg = f"game file not found: {path}"
            raise UsageError(msg, field="--game")
        return load_game(path)
    return build_notation(text)


def parse_history(game: WlcGame, text: str) -> tuple[Profile, ...]:
    """Parse rounds written as ``a1:b2,b1:a2`` (one label per player, ``:`` between players).

    Raises:
        InvalidProfile: A label names no choice of the expected player.
        UsageError: A round has the wrong number of labels.

    """
    lookup = [{c.name: c.local for c in cs} for cs in game.choice_sets]
    rounds: list[Profile] = []
    for item, chunk in enumerate(part.strip() for part in text.split(",") if part.strip()):
        labels = [label.strip() for label in chunk.split(":")]
        if len(labels) != game.n_players:
            msg = f"round {chunk!r} names {len(labels)} choices, game has {game.n_players} players"
            raise UsageError(msg, field="--history", item=item)
        profile: list[int] = []
        for player, label in enumerate(labels):
            if label not in lookup[player]:
                msg = f"{label!r} is not a choice of player {player + 1}"
                raise InvalidProfile(msg, field=label, item=item)
            profile.append(lookup[player][label])
        rounds.append(tuple(profile))
    return tuple(rounds)


def stage_from_history(game: WlcGame, text: str | None) -> Stage:
    stage = Stage.initial(game)
    for profile in parse_history(game, text or ""):
        stage = stage.play_round(profile)
    return stage
