"""Tests for building games, complements and validation reports."""

from __future__ import annotations

import pytest

from ...errors import DisjointnessViolation, EmptyComplement, InvalidGame, SurelyLosingChoice
from ..builders import build_notation, complement
from ..models import ChoiceId, WlcGame
from ..validation import ensure_valid, validate

pytestmark = pytest.mark.unit


def degree_multiset(game: WlcGame) -> tuple[list[int], list[int]]:
    first, second = game.degrees()
    return sorted(first), sorted(second)


class TestBuild:
    """Sizes, relations and numbering of built games."""

    @pytest.mark.parametrize("m", [1, 2, 3, 7])
    def test_choice_matching(self, m):
        game = build_notation(f"CM({m})")
        assert game.sizes == (m, m)
        assert game.winning == tuple((i, i) for i in range(m))

    def test_cycle_has_degree_two_everywhere(self):
        game = build_notation("O(5)")
        assert game.sizes == (5, 5)
        assert len(game.winning) == 10
        assert degree_multiset(game) == ([2] * 5, [2] * 5)

    def test_maximal_three_choice_game(self):
        game = build_notation("1x2 + 2x1")
        assert game.degrees() == ((2, 1, 1), (1, 1, 2))
        assert game.winning == ((0, 0), (0, 1), (1, 2), (2, 2))

    def test_sum_with_repetition(self):
        game = build_notation("Sigma(3) + 2*(1x1)")
        assert game.sizes == (4, 5)
        assert len(game.winning) == 6

    @pytest.mark.parametrize(
        ("text", "sizes", "edges"),
        [
            ("Z(2)", (2, 2), 3),
            ("Z(3)", (3, 3), 5),
            ("Sigma(3)", (2, 3), 4),
            ("SigmaR(3)", (3, 2), 4),
            ("O(2)", (2, 2), 4),
            ("2x3", (2, 3), 6),
            ("CMn(3,4)", (4, 4, 4), 4),
        ],
    )
    def test_shapes(self, text, sizes, edges):
        game = build_notation(text)
        assert game.sizes == sizes
        assert len(game.winning) == edges

    def test_relation_rebuilds_exact_edges(self):
        game = build_notation("Rel(2,3; 0-0, 0-1, 1-2)")
        assert game.winning == ((0, 0), (0, 1), (1, 2))

    def test_relation_with_isolated_choice_is_rejected(self):
        with pytest.raises(SurelyLosingChoice) as exc:
            build_notation("Rel(2,2; 0-0)")
        assert exc.value.errors.errors[0].field == "b1"

    def test_build_is_deterministic(self):
        assert build_notation("O(3) + 2*(1x1)") == build_notation("O(3) + 2*(1x1)")


class TestComplement:
    """Complementing the winning relation."""

    def test_complement_of_cm3_is_a_six_cycle(self):
        game = complement(build_notation("CM(3)"))
        assert len(game.winning) == 6
        assert degree_multiset(game) == ([2] * 3, [2] * 3)

    def test_complement_of_cycle_has_degree_three(self):
        game = complement(build_notation("O(5)"))
        assert len(game.winning) == 15
        assert degree_multiset(game) == ([3] * 5, [3] * 5)

    def test_full_product_has_empty_complement(self):
        with pytest.raises(EmptyComplement):
            complement(build_notation("1x1"))

    def test_surely_losing_choice_is_named(self):
        with pytest.raises(SurelyLosingChoice) as exc:
            complement(build_notation("Rel(2,2; 0-0, 0-1, 1-1)"))
        assert exc.value.errors.errors[0].field == "a1"

    @pytest.mark.parametrize("text", ["CM(3)", "CM(4)", "O(4)"])
    def test_involution(self, text):
        game = build_notation(text)
        assert complement(complement(game)) == game

    def test_notation_complement_matches_function(self):
        assert build_notation("complement(O(5))") == complement(build_notation("O(5)"))


class TestValidate:
    """Report-style validation of hand-built games."""

    def test_valid_game(self):
        report = validate(build_notation("CM(4)"))
        assert report.ok
        assert len(report) == 0

    def test_isolated_choice(self):
        game = WlcGame.two_player(2, 2, [(0, 0)])
        report = validate(game)
        assert not report.ok
        assert set(report.codes) == {"surely_losing_choice"}
        assert sorted(e.field for e in report) == ["b1", "b2"]

    def test_overlapping_identifiers(self):
        shared = ChoiceId(1, 0)
        game = WlcGame(choice_sets=((shared,), (shared,)), winning=((0, 0),))
        report = validate(game)
        assert "disjointness_violation" in report.codes
        with pytest.raises(DisjointnessViolation):
            ensure_valid(game)

    def test_duplicate_labels_across_players(self):
        game = WlcGame.two_player(1, 1, [(0, 0)], labels=[["x"], ["x"]])
        assert validate(game).codes == ["disjointness_violation"]

    def test_empty_relation_and_out_of_range(self):
        assert validate(WlcGame.two_player(1, 1, [])).codes[0] == "invalid_game"
        report = validate(WlcGame.two_player(1, 1, [(0, 3)]))
        assert report.with_code("invalid_game").messages
        with pytest.raises(InvalidGame):
            ensure_valid(WlcGame.two_player(1, 1, [(0, 3)]))

    def test_report_serializes(self):
        data = validate(WlcGame.two_player(2, 1, [(0, 0)])).to_dict()
        assert data["valid"] is False
        assert data["problems"][0]["code"] == "surely_losing_choice"
