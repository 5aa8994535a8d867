"""Expected and guaranteed coordination times."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import SingularSystem, VerificationFailed
from ..game import Stage, WlcGame, build_notation, complement
from ..protocols import ProtocolSpec, evaluate, support_profiles
from ..symmetry import StageClassKey, chain_key, focal_edges
from ..types import HistoryView
from .chain import WIN, ChainExpansion, MarkovQuotient, build_chain
from .constants import AlgebraicConstant
from .linear import solve

logger = logging.getLogger(__name__)

UNIFORM = ProtocolSpec.uniform()


@dataclass(frozen=True)
class EctResult:
    """Expected coordination time with the size of the chain it was solved on."""

    value: Fraction | AlgebraicConstant
    chain_size: int = 0
    derivation: tuple[str, ...] = field(default=(), compare=False)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class GctResult:
    """Guaranteed coordination time; ``value`` is ``None`` when coordination is never guaranteed.

    ``witness`` is a longest path of classes to a forced win, or a reachable cycle
    of non-final classes when the time is infinite.
    """

    value: int | None
    witness: tuple[str, ...] = field(default=(), compare=False)

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


def oscp(stage: Stage, spec: ProtocolSpec) -> Fraction:
    """Probability of coordinating in the next round under mutual play of ``spec``.

    Raises:
        FinalStage: The stage already ends in coordination.

    """
    game = stage.game
    return sum((w for profile, w in support_profiles(spec, stage) if game.is_winning(profile)), Fraction(0))


def _can_win(chain: MarkovQuotient) -> list[bool]:
    reaches = [chain.win_probability(s) > 0 for s in range(len(chain))]
    changed = True
    while changed:
        changed = False
        for s in range(len(chain)):
            if not reaches[s] and any(reaches[t] for t in chain.successors(s)):
                reaches[s] = changed = True
    return reaches


def solve_chain(chain: MarkovQuotient) -> list[Fraction]:
    """Expected rounds to coordination from every state of ``chain``.

    Raises:
        SingularSystem: Some reachable class can never coordinate.

    """
    trapped = [s for s, ok in enumerate(_can_win(chain)) if not ok]
    if trapped:
        stage = chain.representatives[trapped[0]]
        msg = f"{chain.protocol} never coordinates from {stage}"
        raise SingularSystem(msg, item=len(trapped))
    n = len(chain)
    matrix = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for r, row in enumerate(chain.rows):
        for target, probability in row.items():
            if target != WIN:
                matrix[r][target] -= probability
    return solve(matrix, [Fraction(1)] * n)


def stage_ect(
    stage: Stage,
    spec: ProtocolSpec,
    max_classes: int | None = None,
    view: HistoryView | None = None,
) -> EctResult:
    """Exact expected coordination time from ``stage``, lumping by ``view`` or the protocol's own view.

    Raises:
        FinalStage: The stage already ends in coordination.
        ChainNotClosed: The protocol reaches too many classes.
        NotSimilarityInvariant: The protocol cannot be lumped by its history view.
        SingularSystem: Some reachable class can never coordinate.

    """
    chain = build_chain(spec, stage, max_classes, view)
    values = solve_chain(chain)
    derivation = tuple(
        f"{chain.keys[s]}: win {chain.win_probability(s)}, ect {values[s]}" for s in range(len(chain))
    )
    return EctResult(value=values[chain.start], chain_size=len(chain), derivation=derivation)


def exact_ect(
    game: WlcGame,
    spec: ProtocolSpec,
    max_classes: int | None = None,
    view: HistoryView | None = None,
) -> EctResult:
    return stage_ect(Stage.initial(game), spec, max_classes, view)


def _longest_paths(chain: MarkovQuotient) -> tuple[list[int], list[int | None]]:
    rounds: list[int] = [0] * len(chain)
    nxt: list[int | None] = [None] * len(chain)
    order: list[int] = []
    seen = [False] * len(chain)

    def post_order(root: int) -> None:
        stack = [(root, iter(chain.successors(root)))]
        seen[root] = True
        while stack:
            state, successors = stack[-1]
            for target in successors:
                if not seen[target]:
                    seen[target] = True
                    stack.append((target, iter(chain.successors(target))))
                    break
            else:
                order.append(state)
                stack.pop()

    post_order(chain.start)
    for state in order:
        best = max(chain.successors(state), key=lambda t: rounds[t], default=None)
        rounds[state] = 1 + (rounds[best] if best is not None else 0)
        nxt[state] = best
    return rounds, nxt


def stage_gct(stage: Stage, spec: ProtocolSpec, max_classes: int | None = None) -> GctResult:
    """Guaranteed coordination time from ``stage``; infinite when a non-final cycle is reachable.

    Raises:
        FinalStage: The stage already ends in coordination.
        ChainNotClosed: The protocol reaches too many classes.
        NotSimilarityInvariant: The protocol cannot be lumped by its history view.

    """
    expansion = ChainExpansion(spec, stage, max_classes)
    cycle = expansion.find_cycle()
    if cycle is not None:
        return GctResult(None, tuple(str(expansion.representatives[s]) for s in cycle))
    chain = expansion.freeze()
    rounds, nxt = _longest_paths(chain)
    path = [chain.start]
    while (following := nxt[path[-1]]) is not None:
        path.append(following)
    return GctResult(rounds[chain.start], tuple(str(chain.representatives[s]) for s in path))


def gct(game: WlcGame, spec: ProtocolSpec, max_classes: int | None = None) -> GctResult:
    return stage_gct(Stage.initial(game), spec, max_classes)


def verify_oscp(stage: Stage, spec: ProtocolSpec, value: Fraction) -> None:
    """Recompute a one-shot probability from the winning relation and each player's own distribution.

    Raises:
        VerificationFailed: The two sums disagree.

    """
    game = stage.game
    weights = [dict(evaluate(spec, stage, p + 1).weights) for p in range(game.n_players)]
    expected = Fraction(0)
    for profile in game.winning:
        term = Fraction(1)
        for player, local in enumerate(profile):
            term *= weights[player].get(local, Fraction(0))
        expected += term
    if expected != value:
        msg = f"one-shot probability {value} differs from {expected} summed over winning profiles"
        raise VerificationFailed(msg, expected=str(expected))


def verify_gct(stage: Stage, spec: ProtocolSpec, result: GctResult, max_classes: int | None = None) -> None:
    """Check a guaranteed time against a topological sort of the whole chain.

    The chain has a cycle exactly when the time is infinite; otherwise the
    longest path must match the value and the witness.

    Raises:
        VerificationFailed: The sort disagrees with ``result``.

    """
    chain = build_chain(spec, stage, max_classes)
    indegree = [0] * len(chain)
    for state in range(len(chain)):
        for target in chain.successors(state):
            indegree[target] += 1
    ready = deque(s for s in range(len(chain)) if indegree[s] == 0)
    order: list[int] = []
    while ready:
        state = ready.popleft()
        order.append(state)
        for target in chain.successors(state):
            indegree[target] -= 1
            if indegree[target] == 0:
                ready.append(target)
    if len(order) < len(chain):
        if not result.infinite:
            msg = f"guaranteed time {result} but {len(chain) - len(order)} classes lie on or behind a cycle"
            raise VerificationFailed(msg, expected="inf")
        return
    if result.infinite:
        msg = f"guaranteed time is infinite but the {len(chain)} classes are acyclic"
        raise VerificationFailed(msg)
    rounds = [0] * len(chain)
    for state in reversed(order):
        rounds[state] = 1 + max((rounds[t] for t in chain.successors(state)), default=0)
    if rounds[chain.start] != result.value or len(result.witness) != result.value:
        longest = rounds[chain.start]
        msg = f"guaranteed time {result} with {len(result.witness)} witness classes, longest path {longest}"
        raise VerificationFailed(msg, expected=str(longest))


def wm_ect_bound(game: WlcGame) -> Fraction:
    """Upper bound ``3 - 2p`` on the wait-or-move time, ``p`` the uniform one-shot probability."""
    return 3 - 2 * oscp(Stage.initial(game), UNIFORM)


def random_play_ect(game: WlcGame) -> Fraction:
    """Expected time of uniform play in every round, the inverse one-shot probability."""
    return 1 / oscp(Stage.initial(game), UNIFORM)


def complement_cycle_ect(m: int) -> tuple[EctResult, Fraction]:
    """Exact time of uniform play then focal completion in the complement of ``O(m)``, with ``(m + 2)/m``.

    The touched-edge protocol plays uniformly on the initial stage and completes
    on a focal edge afterwards.
    """
    game = complement(build_notation(f"O({m})"))
    return exact_ect(game, ProtocolSpec.touched(Fraction(1, 2))), Fraction(m + 2, m)


@dataclass(frozen=True)
class EctBracket:
    """Bounds on an expected coordination time from a raw expansion of the first rounds."""

    lower: Fraction
    upper: Fraction | None
    depth: int
    stages: int


def bracket_ect(game: WlcGame, spec: ProtocolSpec, depth: int) -> EctBracket:
    """Expand raw stages for ``depth`` rounds and bound the expected time.

    The lower bound charges ``depth + 1`` rounds to every unfinished play. The
    upper bound charges ``depth + 1/q``, ``q`` being the least one-shot
    probability over the classes reachable by the protocol; it is ``None`` when
    some class cannot coordinate in one round.
    """
    frontier: dict[Stage, Fraction] = {Stage.initial(game): Fraction(1)}
    finished = Fraction(0)
    expanded = 0
    for round_number in range(1, depth + 1):
        following: dict[Stage, Fraction] = {}
        for stage, mass in frontier.items():
            expanded += 1
            for profile, probability in support_profiles(spec, stage):
                after = stage.play_round(profile)
                if after.is_final:
                    finished += round_number * mass * probability
                else:
                    following[after] = following.get(after, Fraction(0)) + mass * probability
        frontier = following
    open_mass = sum(frontier.values(), Fraction(0))
    lower = finished + (depth + 1) * open_mass
    chain = build_chain(spec, Stage.initial(game))
    least = min(chain.win_probability(s) for s in range(len(chain)))
    upper = finished + (depth + Fraction(1) / least) * open_mass if least > 0 else None
    logger.debug("bracket for %s at depth %d: %d raw stages", spec, depth, expanded)
    return EctBracket(lower=lower, upper=upper, depth=depth, stages=expanded)


@dataclass(frozen=True)
class LowerBoundScan:
    """Least expected time found over a family of protocols and focal-free stages."""

    minimum: Fraction
    protocol: str
    stage: str
    checked: int


def _focal_free_stages(game: WlcGame, depth: int) -> list[Stage]:
    frontier = [Stage.initial(game)]
    stages: list[Stage] = []
    for _ in range(depth + 1):
        following = []
        for stage in frontier:
            if stage.is_final or focal_edges(stage):
                continue
            stages.append(stage)
            following += [stage.play_round(p) for p, _ in support_profiles(UNIFORM, stage)]
        frontier = following
    return stages


def touched_lower_bound_scan(m: int, grid: int = 64, depth: int = 1) -> LowerBoundScan:
    """Expected times of the touched-edge family on a ``1/grid`` weight grid, and the built-ins.

    Times are taken from every ``CM(m)`` stage without focal edges reached in at
    most ``depth`` rounds; stages equal up to class are scanned once.
    """
    game = build_notation(f"CM({m})")
    unique: dict[tuple[StageClassKey, ...], Stage] = {}
    for stage in _focal_free_stages(game, depth):
        unique.setdefault(tuple(chain_key(stage, view) for view in HistoryView), stage)
    protocols = [ProtocolSpec.wm(), ProtocolSpec.la(), UNIFORM]
    protocols += [ProtocolSpec.touched(Fraction(k, grid)) for k in range(grid + 1)]
    best: LowerBoundScan | None = None
    checked = 0
    for spec in protocols:
        for stage in unique.values():
            try:
                value = stage_ect(stage, spec).value
            except SingularSystem:
                continue
            checked += 1
            assert isinstance(value, Fraction)
            if best is None or value < best.minimum:
                best = LowerBoundScan(value, str(spec), str(stage), 0)
    assert best is not None
    logger.debug("lower bound scan on CM(%d): %d protocol/stage pairs", m, checked)
    return LowerBoundScan(best.minimum, best.protocol, best.stage, checked)

