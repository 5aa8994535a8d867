"""Tests for renaming groups and the brute-force cross-check."""

from __future__ import annotations

import math

import pytest

from ...errors import LimitExceeded, UnsupportedPlayerCount, VerificationFailed
from ...game import Stage, build_notation
from ..focal import focal_indices
from .. import group as group_module
from ..group import Renaming, brute_force_renamings, is_renaming, renaming_group, verify_renamings
from ..partition import EquivPartition, equiv_partition
from ..search import Orbits
from .helpers import stages_to_depth

pytestmark = pytest.mark.unit


class TestRenamingGroup:
    """Group orders and closure."""

    def test_cm3_initial(self):
        assert len(renaming_group(Stage.initial(build_notation("CM(3)")))) == 12

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_cm_initial_order(self, m):
        assert len(renaming_group(Stage.initial(build_notation(f"CM({m})")))) == 2 * math.factorial(m)

    def test_single_edge(self):
        group = renaming_group(Stage.initial(build_notation("1x1")))
        assert len(group) == 2
        assert any(r.swaps_players for r in group)

    def test_double_swap_stage(self):
        stage = Stage.initial(build_notation("CM(2)")).play_round((0, 1)).play_round((1, 0))
        group = renaming_group(stage)
        assert len(group) == 2
        assert len(brute_force_renamings(stage)) == 2

    def test_closed_under_composition_and_inverse(self):
        stage = Stage.initial(build_notation("CM(3)")).play_round((0, 1))
        group = set(renaming_group(stage))
        assert Renaming.identity(stage.game) in group
        for a in group:
            assert a.inverse() in group
            for b in group:
                assert a.compose(b) in group

    def test_every_element_is_a_renaming(self):
        stage = Stage.initial(build_notation("O(3)")).play_round((0, 1))
        assert all(is_renaming(stage, r) for r in renaming_group(stage))

    def test_limit(self):
        with pytest.raises(LimitExceeded):
            renaming_group(Stage.initial(build_notation("CM(5)")), limit=100)

    def test_three_players_rejected(self):
        with pytest.raises(UnsupportedPlayerCount):
            renaming_group(Stage.initial(build_notation("CMn(3,2)")))


def _oracle_matches(stage: Stage) -> None:
    brute = brute_force_renamings(stage)
    searched = renaming_group(stage)
    assert set(searched) == set(brute)
    n = stage.game.n_choices
    oracle = EquivPartition(stage.game, Orbits(n, (r.pi for r in brute)).blocks())
    assert equiv_partition(stage).blocks == oracle.blocks
    assert focal_indices(stage) == focal_indices(stage, oracle)


class TestOracleEquivalence:
    """Backtracking search agrees with brute-force bijection enumeration."""

    @pytest.mark.parametrize("notation", ["CM(2)", "CM(3)", "O(3)", "1x2 + 2x1"])
    def test_depth_two(self, notation):
        for stage in stages_to_depth(build_notation(notation), 2):
            _oracle_matches(stage)

    def test_cm4_depth_one(self):
        for stage in stages_to_depth(build_notation("CM(4)"), 1):
            _oracle_matches(stage)

    @pytest.mark.integration
    def test_cm4_depth_two(self):
        for stage in stages_to_depth(build_notation("CM(4)"), 2):
            _oracle_matches(stage)


class TestVerifyRenamings:
    """Cross-checking the renaming search on a single stage."""

    @pytest.mark.parametrize(
        "stage",
        [
            Stage.initial(build_notation("CM(3)")),
            Stage.initial(build_notation("CM(4)")).play_round((0, 1)),
            Stage.initial(build_notation("O(3)")).play_round((0, 1)),
            Stage.initial(build_notation("1x2 + 2x1")),
        ],
        ids=str,
    )
    def test_agrees(self, stage):
        verify_renamings(stage)

    def test_large_games_skip_enumeration(self, mocker):
        spy = mocker.spy(group_module, "brute_force_renamings")
        verify_renamings(Stage.initial(build_notation("CM(6)")))
        spy.assert_not_called()

    def test_missing_renamings(self, mocker):
        mocker.patch.object(group_module, "brute_force_renamings", return_value=[])
        with pytest.raises(VerificationFailed, match="enumeration 0"):
            verify_renamings(Stage.initial(build_notation("CM(3)")))

    def test_broken_generator(self, mocker):
        mocker.patch.object(group_module, "is_renaming", return_value=False)
        with pytest.raises(VerificationFailed, match="break the renaming conditions"):
            verify_renamings(Stage.initial(build_notation("CM(3)")))
