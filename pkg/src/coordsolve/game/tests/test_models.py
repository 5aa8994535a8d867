"""Tests for choices, games and stage evolution."""

from __future__ import annotations

import pytest

from ...errors import InvalidProfile, ProfileArityMismatch, StageAlreadyFinal
from ..models import ChoiceId, Stage, WlcGame, default_label

pytestmark = pytest.mark.unit


class TestChoiceId:
    """Positional identity with cosmetic labels."""

    def test_label_does_not_affect_identity(self):
        assert ChoiceId(1, 0, "rock") == ChoiceId(1, 0)
        assert hash(ChoiceId(2, 1, "x")) == hash(ChoiceId(2, 1))

    @pytest.mark.parametrize(
        ("player", "local", "label"),
        [(1, 0, "a1"), (2, 1, "b2"), (1, 4, "e1"), (2, 30, "c30p2")],
    )
    def test_default_labels(self, player, local, label):
        assert default_label(player, local) == label
        assert str(ChoiceId(player, local)) == label


class TestWlcGame:
    """Derived views of a game."""

    def test_indices_and_neighbors(self):
        game = WlcGame.two_player(2, 3, [(0, 0), (0, 1), (1, 2)])
        assert game.offsets == (0, 2)
        assert game.global_index(2, 1) == 3
        assert game.choice_at(3) == ChoiceId(2, 1)
        assert game.neighbors[0][0] == frozenset({0, 1})
        assert game.neighbors[1][2] == frozenset({1})
        assert game.m == 3

    def test_winning_is_sorted_and_deduplicated(self):
        game = WlcGame.two_player(2, 2, [(1, 1), (0, 0), (1, 1)])
        assert game.winning == ((0, 0), (1, 1))

    def test_swapped(self):
        game = WlcGame.two_player(1, 2, [(0, 0), (0, 1)])
        assert game.swapped() == WlcGame.two_player(2, 1, [(0, 0), (1, 0)])


class TestStage:
    """Single-round evolution of stages."""

    def test_mismatch_round(self, cm2):
        stage = Stage.initial(cm2).play_round((0, 1))
        assert not stage.is_final
        assert len(stage.touched_edges()) == 2

    def test_matching_round(self, cm2):
        stage = Stage.initial(cm2).play_round((0, 0))
        assert stage.is_final
        assert stage.rounds == 1

    def test_double_swap(self, cm2):
        stage = Stage.initial(cm2).play_round((0, 1)).play_round((1, 0))
        assert stage.history == ((0, 1), (1, 0))
        assert stage.played_choices() == (frozenset({0, 1}), frozenset({0, 1}))
        assert not stage.is_final

    def test_input_stage_unchanged(self, cm2):
        stage = Stage.initial(cm2)
        after = stage.play_round((0, 1))
        assert stage.history == ()
        assert after.rounds == stage.rounds + 1

    def test_play_after_final(self, cm2):
        stage = Stage.initial(cm2).play_round((1, 1))
        with pytest.raises(StageAlreadyFinal):
            stage.play_round((0, 0))

    def test_arity_mismatch(self, cm2):
        with pytest.raises(ProfileArityMismatch):
            Stage.initial(cm2).play_round((0,))

    def test_out_of_range_choice(self, cm2):
        with pytest.raises(InvalidProfile):
            Stage.initial(cm2).play_round((0, 2))

    def test_history_continuing_after_win_is_rejected(self, cm2):
        with pytest.raises(StageAlreadyFinal):
            Stage(game=cm2, history=((0, 0), (0, 1)))

    def test_stage_equality_is_structural(self, cm2):
        assert Stage.initial(cm2).play_round((0, 1)) == Stage(game=cm2, history=((0, 1),))


class TestTouchedEdges:
    """Winning profiles sharing a choice with the history."""

    def test_initial_stage(self, cm5_stage):
        assert cm5_stage.touched_edges() == frozenset()

    def test_one_failed_round(self, cm5_stage):
        assert cm5_stage.play_round((0, 1)).touched_edges() == frozenset({(0, 0), (1, 1)})

    def test_winning_round_touches_one_edge(self, cm3):
        assert Stage.initial(cm3).play_round((0, 0)).touched_edges() == frozenset({(0, 0)})
