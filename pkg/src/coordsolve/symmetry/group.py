"""Renamings of two-player stages.

A renaming is a player permutation ``beta`` plus a bijection ``pi`` of the
choices that maps each player's choices onto the choices of ``beta``'s image,
preserves the winning relation, and maps every history round onto itself.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass

from ..errors import LimitExceeded, VerificationFailed
from ..game import ChoiceId, Stage, WlcGame
from ..settings import get_settings
from .partition import equiv_partition
from .search import automorphism_generators
from .structure import require_two_players, stage_graph

logger = logging.getLogger(__name__)

IDENTITY_BETA = (1, 2)
SWAP_BETA = (2, 1)
BRUTE_FORCE_LIMIT = 4


@dataclass(frozen=True)
class Renaming:
    """``beta[i - 1]`` is the image of player ``i``; ``pi[k]`` the image of global choice ``k``."""

    beta: tuple[int, ...]
    pi: tuple[int, ...]

    @classmethod
    def identity(cls, game: WlcGame) -> Renaming:
        return cls(IDENTITY_BETA, tuple(range(game.n_choices)))

    @property
    def swaps_players(self) -> bool:
        return self.beta != IDENTITY_BETA

    def compose(self, other: Renaming) -> Renaming:
        """``self`` after ``other``."""
        beta = tuple(self.beta[b - 1] for b in other.beta)
        return Renaming(beta, tuple(self.pi[k] for k in other.pi))

    def inverse(self) -> Renaming:
        beta = [0] * len(self.beta)
        for i, b in enumerate(self.beta, start=1):
            beta[b - 1] = i
        pi = [0] * len(self.pi)
        for k, image in enumerate(self.pi):
            pi[image] = k
        return Renaming(tuple(beta), tuple(pi))

    def apply(self, game: WlcGame, choice: ChoiceId) -> ChoiceId:
        return game.choice_at(self.pi[game.global_index(choice.player, choice.local)])

    def map_profile(self, game: WlcGame, profile: tuple[int, ...]) -> tuple[int, ...]:
        """Image of a two-player profile, reordered so position ``i`` belongs to player ``i + 1``."""
        images = [self.apply(game, game.choice(p + 1, k)) for p, k in enumerate(profile)]
        return tuple(c.local for c in sorted(images, key=lambda c: c.player))

    def as_labels(self, game: WlcGame) -> dict[str, str]:
        return {str(game.choice_at(k)): str(game.choice_at(v)) for k, v in enumerate(self.pi)}


def is_renaming(stage: Stage, renaming: Renaming) -> bool:
    """Direct check of the three renaming conditions on ``stage``."""
    game = stage.game
    n = game.n_choices
    if sorted(renaming.pi) != list(range(n)) or sorted(renaming.beta) != [1, 2]:
        return False
    for k in range(n):
        source, image = game.choice_at(k), game.choice_at(renaming.pi[k])
        if image.player != renaming.beta[source.player - 1]:
            return False
    if {renaming.map_profile(game, w) for w in game.winning} != game.winning_set:
        return False
    return all(renaming.map_profile(game, p) == p for p in stage.history)


def _from_permutation(stage: Stage, perm: tuple[int, ...]) -> Renaming:
    n = stage.game.n_choices
    beta = IDENTITY_BETA if perm[n] == n else SWAP_BETA
    return Renaming(beta, perm[:n])


def renaming_generators(stage: Stage) -> tuple[Renaming, ...]:
    require_two_players(stage.game)
    return tuple(_from_permutation(stage, g) for g in automorphism_generators(stage_graph(stage)))


def renaming_group(stage: Stage, limit: int | None = None) -> list[Renaming]:
    """All renamings of ``stage``, closed under composition; identity first.

    Raises:
        UnsupportedPlayerCount: The game does not have two players.
        LimitExceeded: The group has more than ``limit`` elements
            (default ``AnalysisSettings.group_limit``).

    """
    limit = limit if limit is not None else get_settings().analysis.group_limit
    generators = renaming_generators(stage)
    identity = Renaming.identity(stage.game)
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            product = g.compose(current)
            if product not in seen:
                if len(seen) >= limit:
                    msg = f"renaming group exceeds {limit} elements"
                    raise LimitExceeded(msg, item=limit)
                seen.add(product)
                order.append(product)
                queue.append(product)
    logger.debug("renaming group of %s has %d elements", stage, len(order))
    return order


def brute_force_renamings(stage: Stage) -> list[Renaming]:
    """Every renaming, by trying all player permutations and choice bijections.

    Intended as a cross-check for small games (at most four choices per player).
    """
    game = stage.game
    require_two_players(game)
    n1, n2 = game.sizes
    found: list[Renaming] = []
    betas = [IDENTITY_BETA, SWAP_BETA] if n1 == n2 else [IDENTITY_BETA]
    for beta in betas:
        for p1 in itertools.permutations(range(n1)):
            for p2 in itertools.permutations(range(n2)):
                if beta == IDENTITY_BETA:
                    pi = (*p1, *(n1 + k for k in p2))
                else:
                    pi = (*(n1 + k for k in p1), *p2)
                candidate = Renaming(beta, pi)
                if is_renaming(stage, candidate):
                    found.append(candidate)
    return found


def verify_renamings(stage: Stage) -> None:
    """Check the renaming search on ``stage`` against direct checks.

    Every generator must pass ``is_renaming``. When each player has at most
    ``BRUTE_FORCE_LIMIT`` choices, the generated group and its orbits must also
    equal what enumerating every bijection finds.

    Raises:
        VerificationFailed: The search and the direct checks disagree.

    """
    bad = [g for g in renaming_generators(stage) if not is_renaming(stage, g)]
    if bad:
        msg = f"{len(bad)} generated renamings of {stage} break the renaming conditions"
        raise VerificationFailed(msg, item=len(bad))
    if max(stage.game.sizes) > BRUTE_FORCE_LIMIT:
        logger.info("renamings of %s not brute-forced: more than %d choices", stage, BRUTE_FORCE_LIMIT)
        return
    group = renaming_group(stage)
    brute = brute_force_renamings(stage)
    if set(group) != set(brute):
        msg = f"renaming search finds {len(group)} renamings, enumeration {len(brute)}"
        raise VerificationFailed(msg, expected=len(brute))
    orbits = {tuple(sorted({r.pi[k] for r in brute})) for k in range(stage.game.n_choices)}
    if orbits != set(equiv_partition(stage).blocks):
        msg = f"partition of {stage} differs from the orbits of all {len(brute)} renamings"
        raise VerificationFailed(msg, item=len(orbits))
