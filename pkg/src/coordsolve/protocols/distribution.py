"""Exact probability distributions over one player's choices."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..game import WlcGame


@dataclass(frozen=True)
class Distribution:
    """Weights of player ``player`` (1-based) keyed by local choice index.

    Weights are exact, nonnegative and sum to exactly one; zero weights are dropped.
    """

    player: int
    weights: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        if any(w < 0 for _, w in self.weights):
            msg = "probabilities must be nonnegative"
            raise ValueError(msg)
        if sum((w for _, w in self.weights), Fraction(0)) != 1:
            msg = f"probabilities sum to {sum(w for _, w in self.weights)}, not 1"
            raise ValueError(msg)

    @classmethod
    def from_mapping(cls, player: int, weights: Mapping[int, Fraction]) -> Distribution:
        merged: dict[int, Fraction] = {}
        for local, weight in weights.items():
            merged[local] = merged.get(local, Fraction(0)) + Fraction(weight)
        return cls(player, tuple(sorted((k, w) for k, w in merged.items() if w != 0)))

    @classmethod
    def uniform(cls, player: int, choices: Iterable[int]) -> Distribution:
        support = sorted(set(choices))
        share = Fraction(1, len(support))
        return cls(player, tuple((k, share) for k in support))

    @classmethod
    def point(cls, player: int, local: int) -> Distribution:
        return cls(player, ((local, Fraction(1)),))

    @cached_property
    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.weights)

    def prob(self, local: int) -> Fraction:
        return self.as_dict.get(local, Fraction(0))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.weights)

    def by_label(self, game: WlcGame) -> dict[str, str]:
        return {game.choice(self.player, k).name: str(w) for k, w in self.weights}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}: {w}" for k, w in self.weights) + "}"
