"""Tests for component decomposition and regenerated notation."""

from __future__ import annotations

import pytest

from ...game import build_notation
from ...symmetry import isomorphic
from ..catalogue import G_STAR
from ..components import component_notation, components

pytestmark = pytest.mark.unit


class TestComponents:
    """Connected pieces of game graphs."""

    def test_sum(self):
        pieces = components(build_notation("Sigma(3) + SigmaR(3)"))
        assert [(c.n1, c.n2, len(c.edges)) for c in pieces] == [(2, 3, 4), (3, 2, 4)]

    def test_degrees(self):
        (star,) = components(build_notation("1x4"))
        assert star.max_degree == 4
        assert star.notation == "1x4"

    def test_degree_three_pieces_are_relations(self):
        assert [c.notation.startswith("Rel(") for c in components(build_notation(G_STAR))] == [True, True]


class TestComponentNotation:
    """Notation regenerated from paths, cycles and products."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("CM(4)", "CM(4)"),
            ("O(3)", "O(3)"),
            ("2x2", "O(2)"),
            ("Z(3)", "Z(3)"),
            ("Sigma(3)", "Sigma(3)"),
            ("SigmaR(3)", "SigmaR(3)"),
            ("1x2 + 2x1", "1x2 + 2x1"),
            ("2*(1x2) + 1x1", "1x1 + 2*(1x2)"),
            ("1x1 + O(2) + Z(2)", "O(2) + Z(2) + 1x1"),
        ],
    )
    def test_names(self, text, expected):
        assert component_notation(build_notation(text)) == expected

    @pytest.mark.parametrize(
        "text",
        ["O(2) + 1x2 + 2x1", "Sigma(4) + 2x1", "1x4 + 4x1", G_STAR, "complement(O(4))", "1x1 + 2x2"],
    )
    def test_rebuilds_isomorphic_game(self, text):
        game = build_notation(text)
        assert isomorphic(build_notation(component_notation(game)), game)
