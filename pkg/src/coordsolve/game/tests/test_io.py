"""Tests for JSON documents, game resolution and textual histories."""

from __future__ import annotations

import orjson
import pytest

from ...errors import InvalidGame, InvalidProfile, UsageError
from ..builders import build_notation
from ..io import (
    dump_game,
    dump_stage,
    load_game,
    load_stage,
    parse_history,
    resolve_game,
    stage_from_history,
)
from ..models import Stage

pytestmark = pytest.mark.unit


class TestDocuments:
    """Reading and writing the JSON game schema."""

    def test_dump_game_schema(self, cm2):
        data = orjson.loads(dump_game(cm2))
        assert data == {"n": 2, "choices": [["a1", "b1"], ["a2", "b2"]], "winning": [[0, 0], [1, 1]]}

    def test_load_dumped_game(self, cm3):
        assert load_game(dump_game(cm3)) == cm3

    def test_stage_document(self, cm2):
        stage = Stage.initial(cm2).play_round((0, 1))
        loaded = load_stage(dump_stage(stage))
        assert loaded == stage
        assert orjson.loads(dump_stage(stage))["history"] == [[0, 1]]

    def test_labels_are_kept(self):
        game = load_game(b'{"n": 2, "choices": [["rock"], ["stone"]], "winning": [[0, 0]]}')
        assert game.choice(1, 0).name == "rock"

    def test_player_count_mismatch(self):
        with pytest.raises(InvalidGame):
            load_game(b'{"n": 3, "choices": [["a"], ["b"]], "winning": [[0, 0]]}')

    def test_invalid_json(self):
        with pytest.raises(UsageError):
            load_game(b"{not json")

    def test_surely_losing_choice_in_document(self):
        with pytest.raises(InvalidGame):
            load_game(b'{"n": 2, "choices": [["a", "b"], ["c"]], "winning": [[0, 0]]}')


class TestResolveGame:
    """Notation or @file references."""

    def test_notation(self):
        assert resolve_game("CM(4)") == build_notation("CM(4)")

    def test_file(self, tmp_path, cm3):
        path = tmp_path / "game.json"
        path.write_bytes(dump_game(cm3))
        assert resolve_game(f"@{path}") == cm3

    def test_missing_file(self, tmp_path):
        with pytest.raises(UsageError):
            resolve_game(f"@{tmp_path / 'missing.json'}")


class TestHistory:
    """Rounds written as label pairs."""

    def test_parse(self, cm2):
        assert parse_history(cm2, "a1:b2, b1:a2") == ((0, 1), (1, 0))

    def test_empty(self, cm2):
        assert parse_history(cm2, "") == ()
        assert stage_from_history(cm2, None) == Stage.initial(cm2)

    def test_unknown_label(self, cm2):
        with pytest.raises(InvalidProfile):
            parse_history(cm2, "a2:b2")

    def test_wrong_arity(self, cm2):
        with pytest.raises(UsageError):
            parse_history(cm2, "a1")

    def test_stage_from_history(self, cm2):
        stage = stage_from_history(cm2, "a1:b2,b1:a2")
        assert stage.rounds == 2
        assert not stage.is_final
