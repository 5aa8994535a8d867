"""Game-core values: choices, win-lose coordination games and stages.

All values are frozen. Choice identity is positional ``(player, local)``; labels
are display strings only and never take part in equality or hashing.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from ..errors import InvalidProfile, ProfileArityMismatch, StageAlreadyFinal
from ..utils.constants import CHOICE_LETTERS

# One local choice index per player, in player order
Profile = tuple[int, ...]


def default_label(player: int, local: int) -> str:
    """Label ``a1, b1, ...`` for player 1 and ``a2, b2, ...`` for player 2."""
    if local < len(CHOICE_LETTERS):
        return f"{CHOICE_LETTERS[local]}{player}"
    return f"c{local}p{player}"


@dataclass(frozen=True)
class ChoiceId:
    """A choice of one player: 1-based player, 0-based local index."""

    player: int
    local: int
    label: str | None = field(default=None, compare=False, hash=False)

    @property
    def name(self) -> str:
        return self.label or default_label(self.player, self.local)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class WlcGame:
    """Win-lose coordination game.

    Attributes:
        choice_sets: Per-player ordered choices; ``choice_sets[i][k]`` is
            ``ChoiceId(i + 1, k)``.
        winning: Winning profiles as tuples of local indices, sorted
            lexicographically without duplicates.

    Build instances through ``WlcGame.create`` (or ``two_player``) so the winning
    relation is normalized; ``validate`` checks every game invariant.
    """

    choice_sets: tuple[tuple[ChoiceId, ...], ...]
    winning: tuple[Profile, ...]

    @classmethod
    def create(
        cls,
        sizes: Sequence[int],
        winning: Iterable[Sequence[int]],
        labels: Sequence[Sequence[str | None]] | None = None,
    ) -> WlcGame:
        choice_sets = tuple(
            tuple(
                ChoiceId(player + 1, local, labels[player][local] if labels is not None else None)
                for local in range(size)
            )
            for player, size in enumerate(sizes)
        )
        return cls(choice_sets=choice_sets, winning=tuple(sorted({tuple(w) for w in winning})))

    @classmethod
    def two_player(
        cls,
        n1: int,
        n2: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Sequence[str | None]] | None = None,
    ) -> WlcGame:
        return cls.create((n1, n2), edges, labels)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.choice_sets, self.winning))

    @property
    def n_players(self) -> int:
        return len(self.choice_sets)

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(cs) for cs in self.choice_sets)

    @property
    def m(self) -> int:
        """Size of the largest choice set."""
        return max(self.sizes)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        """Global index of each player's first choice."""
        return tuple(itertools.accumulate((0, *self.sizes[:-1])))

    @property
    def n_choices(self) -> int:
        return sum(self.sizes)

    @cached_property
    def winning_set(self) -> frozenset[Profile]:
        return frozenset(self.winning)

    @cached_property
    def neighbors(self) -> tuple[tuple[frozenset[int], ...], ...]:
        """Two-player adjacency: ``neighbors[i][k]`` is the set of opponent locals winning with ``k``."""
        adjacency: list[list[set[int]]] = [[set() for _ in cs] for cs in self.choice_sets]
        for profile in self.winning:
            for player, local in enumerate(profile):
                for other, other_local in enumerate(profile):
                    if other != player:
                        adjacency[player][local].add(other_local)
        return tuple(tuple(frozenset(s) for s in row) for row in adjacency)

    def degree(self, player: int, local: int) -> int:
        """Number of winning profiles containing the choice (1-based player)."""
        return sum(1 for w in self.winning if w[player - 1] == local)

    def degrees(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.degree(p + 1, k) for k in range(size)) for p, size in enumerate(self.sizes))

    def choice(self, player: int, local: int) -> ChoiceId:
        return self.choice_sets[player - 1][local]

    def global_index(self, player: int, local: int) -> int:
        return self.offsets[player - 1] + local

    def choice_at(self, index: int) -> ChoiceId:
        """Inverse of ``global_index``."""
        for player, offset in reversed(list(enumerate(self.offsets))):
            if index >= offset:
                return self.choice_sets[player][index - offset]
        msg = f"no choice at global index {index}"
        raise IndexError(msg)

    @cached_property
    def all_choices(self) -> tuple[ChoiceId, ...]:
        return tuple(c for cs in self.choice_sets for c in cs)

    def profile_choices(self, profile: Profile) -> tuple[ChoiceId, ...]:
        return tuple(self.choice_sets[p][k] for p, k in enumerate(profile))

    def is_winning(self, profile: Profile) -> bool:
        return profile in self.winning_set

    def swapped(self) -> WlcGame:
        """The two-player game with player roles exchanged."""
        labels = [[c.label for c in cs] for cs in reversed(self.choice_sets)]
        return WlcGame.create(tuple(reversed(self.sizes)), ((b, a) for a, b in self.winning), labels)

    def labels(self) -> list[list[str]]:
        return [[c.name for c in cs] for cs in self.choice_sets]

    def __str__(self) -> str:
        sizes = "x".join(map(str, self.sizes))
        return f"WlcGame({sizes}, |W|={len(self.winning)})"


@dataclass(frozen=True)
class Stage:
    """A game plus the ordered history of profiles played so far.

    Only the last profile of a history may be winning.
    """

    game: WlcGame
    history: tuple[Profile, ...] = ()

    def __post_init__(self) -> None:
        for round_number, profile in enumerate(self.history, start=1):
            _check_profile(self.game, profile)
            if round_number < len(self.history) and profile in self.game.winning_set:
                msg = f"play continued after coordinating in round {round_number}"
                raise StageAlreadyFinal(msg, item=round_number)

    @classmethod
    def initial(cls, game: WlcGame) -> Stage:
        return cls(game=game)

    @property
    def rounds(self) -> int:
        return len(self.history)

    @property
    def is_final(self) -> bool:
        return bool(self.history) and self.history[-1] in self.game.winning_set

    def play_round(self, profile: Sequence[int]) -> Stage:
        """Return the stage extended by one round; ``self`` is left untouched.

        Raises:
            StageAlreadyFinal: The stage already ends in a winning profile.
            ProfileArityMismatch: The profile does not name one choice per player.
            InvalidProfile: A local index is out of range.

        """
        if self.is_final:
            msg = "cannot play a round on a final stage"
            raise StageAlreadyFinal(msg, item=self.rounds)
        played = tuple(profile)
        _check_profile(self.game, played)
        return Stage(game=self.game, history=(*self.history, played))

    def played_choices(self) -> tuple[frozenset[int], ...]:
        """Per player, the local indices that occur in the history."""
        return tuple(frozenset(p[i] for p in self.history) for i in range(self.game.n_players))

    def touched_edges(self) -> frozenset[Profile]:
        """Winning profiles sharing a choice with some history entry."""
        played = self.played_choices()
        return frozenset(w for w in self.game.winning if any(w[i] in played[i] for i in range(len(w))))

    def __str__(self) -> str:
        rounds = ", ".join(
            "(" + ",".join(c.name for c in self.game.profile_choices(p)) + ")" for p in self.history
        )
        return f"Stage({self.game}, [{rounds}])"


def _check_profile(game: WlcGame, profile: Profile) -> None:
    if len(profile) != game.n_players:
        msg = f"profile has {len(profile)} choices, game has {game.n_players} players"
        raise ProfileArityMismatch(msg)
    for player, local in enumerate(profile):
        if not 0 <= local < game.sizes[player]:
            msg = f"player {player + 1} has no choice with index {local}"
            raise InvalidProfile(msg, field=f"player{player + 1}", item=local)
