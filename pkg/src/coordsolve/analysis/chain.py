"""Markov quotients of repeated play.

Stages are lumped by the canonical form of the part of the history the protocol
reads. Every merged stage is checked against the class representative: the two
must receive the same distributions in canonical coordinates.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ChainNotClosed, NotSimilarityInvariant
from ..game import Stage
from ..protocols import ProtocolSpec, evaluate, support_profiles
from ..settings import get_settings
from ..symmetry import StageClassKey, view_labeling
from ..types import HistoryView
from ..utils import timed

logger = logging.getLogger(__name__)

WIN = -1

CanonicalMoves = tuple[tuple[int, tuple[tuple[int, Fraction], ...]], ...]


@dataclass(frozen=True)
class MarkovQuotient:
    """Absorbing chain over stage classes.

    ``rows[i]`` maps successor state indices, or ``WIN``, to exact probabilities.
    State 0 is the start.
    """

    protocol: ProtocolSpec
    keys: tuple[StageClassKey, ...]
    representatives: tuple[Stage, ...]
    rows: tuple[dict[int, Fraction], ...]

    @property
    def start(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.keys)

    def win_probability(self, state: int) -> Fraction:
        return self.rows[state].get(WIN, Fraction(0))

    def successors(self, state: int) -> list[int]:
        return sorted(t for t in self.rows[state] if t != WIN)


def canonical_moves(spec: ProtocolSpec, stage: Stage, view: HistoryView) -> CanonicalMoves:
    """Both players' distributions keyed by canonical side and rank of ``view``."""
    labeling = view_labeling(stage, view)
    game = stage.game
    moves = []
    for player in (1, 2):
        offset = game.offsets[player - 1]
        weights = sorted((labeling.rank[offset + k], w) for k, w in evaluate(spec, stage, player).weights)
        moves.append((labeling.side[player - 1], tuple(weights)))
    return tuple(sorted(moves))


class ChainExpansion:
    """Lazily expanded quotient chain of ``spec`` started at ``stage``.

    Rows are computed on first request; ``freeze`` expands everything reachable.

    Raises:
        FinalStage: ``stage`` is already final.
        ChainNotClosed: More than ``max_classes`` classes are reachable.
        NotSimilarityInvariant: Two stages with one key receive different distributions.

    """

    def __init__(
        self,
        spec: ProtocolSpec,
        stage: Stage,
        max_classes: int | None = None,
        view: HistoryView | None = None,
    ) -> None:
        self.spec = spec
        self.view = view or spec.view
        self.limit = max_classes if max_classes is not None else get_settings().analysis.max_classes
        self.index: dict[StageClassKey, int] = {}
        self.representatives: list[Stage] = []
        self.moves: list[CanonicalMoves] = []
        self.rows: dict[int, dict[int, Fraction]] = {}
        self.state_of(stage)

    def __len__(self) -> int:
        return len(self.representatives)

    def state_of(self, candidate: Stage) -> int:
        key = view_labeling(candidate, self.view).key
        if key in self.index:
            state = self.index[key]
            if candidate != self.representatives[state] and (
                canonical_moves(self.spec, candidate, self.view) != self.moves[state]
            ):
                msg = f"{self.spec} plays differently on stages sharing class {key}"
                raise NotSimilarityInvariant(msg, field=key.digest)
            return state
        if len(self.index) >= self.limit:
            msg = f"more than {self.limit} stage classes reachable under {self.spec}"
            raise ChainNotClosed(msg, item=self.limit)
        self.index[key] = len(self.representatives)
        self.representatives.append(candidate)
        self.moves.append(canonical_moves(self.spec, candidate, self.view))
        return self.index[key]

    def row(self, state: int) -> dict[int, Fraction]:
        if state not in self.rows:
            current = self.representatives[state]
            row: dict[int, Fraction] = {}
            for profile, probability in support_profiles(self.spec, current):
                after = current.play_round(profile)
                target = WIN if after.is_final else self.state_of(after)
                row[target] = row.get(target, Fraction(0)) + probability
            self.rows[state] = row
        return self.rows[state]

    def successors(self, state: int) -> list[int]:
        return sorted(t for t in self.row(state) if t != WIN)

    def find_cycle(self) -> list[int] | None:
        """A cycle of non-final classes reachable from the start, searched depth first.

        Self-loops and edges back onto the current path are tested before descending.
        """
        on_path = {0}
        done: set[int] = set()
        stack = [(0, self.successors(0), 0)]
        while stack:
            state, successors, position = stack[-1]
            if position == 0:
                back = next((t for t in successors if t in on_path), None)
                if back is not None:
                    path = [s for s, _, _ in stack]
                    return path[path.index(back) :]
            following = next((t for t in successors[position:] if t not in done), None)
            if following is None:
                stack.pop()
                on_path.discard(state)
                done.add(state)
                continue
            stack[-1] = (state, successors, successors.index(following) + 1)
            on_path.add(following)
            stack.append((following, self.successors(following), 0))
        return None

    def freeze(self) -> MarkovQuotient:
        with timed(logger, f"chain for {self.spec}") as facts:
            queue = deque(range(len(self)))
            expanded = set()
            while queue:
                state = queue.popleft()
                if state in expanded:
                    continue
                expanded.add(state)
                before = len(self)
                self.row(state)
                queue.extend(range(before, len(self)))
            facts["classes"] = len(self)
        return MarkovQuotient(
            protocol=self.spec,
            keys=tuple(self.index),
            representatives=tuple(self.representatives),
            rows=tuple(self.rows[s] for s in range(len(self))),
        )


def build_chain(
    spec: ProtocolSpec,
    stage: Stage,
    max_classes: int | None = None,
    view: HistoryView | None = None,
) -> MarkovQuotient:
    """Expand the classes reachable from ``stage`` under mutual play of ``spec``.

    ``view`` overrides the protocol's own history view.

    Raises:
        FinalStage: ``stage`` is already final.
        ChainNotClosed: More than ``max_classes`` classes are reachable.
        NotSimilarityInvariant: Two stages with one key receive different distributions.

    """
    return ChainExpansion(spec, stage, max_classes, view).freeze()
