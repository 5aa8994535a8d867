"""Published census tables of 3- and 5-choice games with all degrees at most 2, and the hard cases."""

from __future__ import annotations

# Keyed by the number of winning pairs
THREE_CHOICE: dict[int, tuple[str, ...]] = {
    3: ("1x2 + 1x1", "CM(3)"),
    4: ("Sigma(3)", "Z(2) + 1x1", "1x2 + 2x1"),
    5: ("O(2) + 1x1", "Z(3)"),
    6: ("O(3)",),
}

FIVE_CHOICE: dict[int, tuple[str, ...]] = {
    5: ("2*(1x2) + 1x1", "1x2 + 3*(1x1)", "CM(5)"),
    6: (
        "Sigma(3) + 1x2",
        "Sigma(3) + 2*(1x1)",
        "Z(2) + 1x2 + 1x1",
        "Z(2) + 3*(1x1)",
        "2*(1x2) + 2x1",
        "1x2 + 2x1 + 2*(1x1)",
    ),
    7: (
        "O(2) + 1x2 + 1x1",
        "O(2) + 3*(1x1)",
        "Sigma(4) + 1x1",
        "Z(3) + 1x2",
        "Z(3) + 2*(1x1)",
        "Sigma(3) + Z(2)",
        "Sigma(3) + 2x1 + 1x1",
        "2*(Z(2)) + 1x1",
        "Z(2) + 1x2 + 2x1",
    ),
    8: (
        "O(3) + 1x2",
        "O(3) + 2*(1x1)",
        "O(2) + Sigma(3)",
        "O(2) + Z(2) + 1x1",
        "O(2) + 1x2 + 2x1",
        "Sigma(5)",
        "Z(4) + 1x1",
        "Sigma(4) + 2x1",
        "Z(3) + Z(2)",
        "Sigma(3) + SigmaR(3)",
    ),
}

# Stars 3x1 and 1x3, each with one more edge hanging off a leaf
G_STAR = "Rel(5,5; 0-0,0-1,1-1,2-1,3-2,3-3,3-4,4-4)"

# Higher-degree 5-choice games without a focal point
FIVE_CHOICE_SPECIALS: tuple[str, ...] = ("1x4 + 4x1", G_STAR)

THREE_CHOICE_HARD: tuple[str, ...] = ("CM(3)", "O(3)", "1x2 + 2x1")

FIVE_CHOICE_HARD: tuple[str, ...] = (
    "CM(5)",
    "1x4 + 4x1",
    G_STAR,
    "Sigma(3) + SigmaR(3)",
    "1x2 + 2x1 + 2*(1x1)",
    "O(3) + 2*(1x1)",
)

CATALOGUES: dict[int, dict[int, tuple[str, ...]]] = {3: THREE_CHOICE, 5: FIVE_CHOICE}
