"""Tests for the game notation parser and printer."""

from __future__ import annotations

import pytest

from ...errors import NotationArityError, NotationSyntaxError, UsageError
from ..notation import (
    ChoiceMatching,
    Complement,
    Cycle,
    Ladder,
    MultiChoiceMatching,
    Product,
    Relation,
    Repeat,
    Sigma,
    Sum,
    arity,
    parse_notation,
    to_notation,
)

pytestmark = pytest.mark.unit


class TestParse:
    """Parsing of every constructor."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("CM(3)", ChoiceMatching(3)),
            ("CMn(3,4)", MultiChoiceMatching(3, 4)),
            ("O(5)", Cycle(5)),
            ("Z(2)", Ladder(2)),
            ("Sigma(3)", Sigma(3)),
            ("SigmaR(3)", Sigma(3, reflected=True)),
            ("1x2", Product(1, 2)),
            ("2*(1x1)", Repeat(2, Product(1, 1))),
            ("complement(O(5))", Complement(Cycle(5))),
            ("Rel(2,2; 0-0, 1-1, 0-1)", Relation(2, 2, ((0, 0), (1, 1), (0, 1)))),
            ("Sigma(3) + 2*(1x1)", Sum((Sigma(3), Repeat(2, Product(1, 1))))),
        ],
    )
    def test_constructors(self, text, expected):
        assert parse_notation(text) == expected

    def test_whitespace_is_insignificant(self):
        assert parse_notation("  1 x 2+ 2x1 ") == parse_notation("1x2 + 2x1")

    def test_unparenthesized_sums_flatten(self):
        expr = parse_notation("1x1 + 1x2 + 2x1")
        assert isinstance(expr, Sum)
        assert len(expr.terms) == 3

    def test_parenthesized_sum_stays_nested(self):
        expr = parse_notation("1x1 + (1x2 + 2x1)")
        assert expr == Sum((Product(1, 1), Sum((Product(1, 2), Product(2, 1)))))

    def test_arity(self):
        assert arity(parse_notation("CMn(4,2)")) == 4
        assert arity(parse_notation("2*(CMn(3,2))")) == 3
        assert arity(parse_notation("O(3) + 1x1")) == 2


class TestParseErrors:
    """Syntax and arity errors carry a position and a usage exit status."""

    @pytest.mark.parametrize(
        ("text", "position"),
        [
            ("", 0),
            ("CM(3", 4),
            ("CM(3)+", 6),
            ("Foo(1)", 0),
            ("CM(3))", 5),
            ("2(1x1)", 1),
            ("O(1)", 2),
            ("Rel(2,2; 0-2)", 9),
        ],
    )
    def test_syntax_error_position(self, text, position):
        with pytest.raises(NotationSyntaxError) as exc:
            parse_notation(text)
        assert exc.value.position == position
        assert f"at position {position}" in str(exc.value)
        assert exc.value.exit_code == 2

    def test_mixed_arity_sum(self):
        with pytest.raises(NotationArityError):
            parse_notation("CM(3) + CMn(3,2)")

    def test_errors_are_usage_errors(self):
        with pytest.raises(UsageError):
            parse_notation("CM(x)")


class TestPrint:
    """Printing inverts parsing."""

    @pytest.mark.parametrize(
        "text",
        [
            "CM(3)",
            "CMn(3,2)",
            "O(3) + 2*(1x1)",
            "Sigma(3) + SigmaR(3)",
            "1x2 + 2x1 + 2*(1x1)",
            "complement(CM(3))",
            "Rel(5,5; 0-1, 1-1, 2-1)",
            "1x1 + (Z(2) + 1x1)",
            "3*(1x1 + 1x2)",
        ],
    )
    def test_parse_print_identity(self, text):
        expr = parse_notation(text)
        assert to_notation(expr) == text
        assert parse_notation(to_notation(expr)) == expr

    def test_empty_relation_prints(self):
        assert to_notation(Relation(1, 1, ())) == "Rel(1,1; )"
        assert parse_notation("Rel(1,1; )") == Relation(1, 1, ())
