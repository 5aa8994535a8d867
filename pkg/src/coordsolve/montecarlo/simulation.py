"""Seeded repeated-play simulation.

Trials are split into blocks of ``SimulationSettings.block_size``; block ``i``
draws from a PCG64 generator seeded with the ``i``-th child of
``SeedSequence(seed)``. Results are aggregated from round-count histograms, so
they do not depend on block order.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import UsageError
from ..game import Stage, WlcGame
from ..protocols import ProtocolSpec, evaluate
from ..settings import get_settings
from ..utils import GENERATOR_NAME, timed

logger = logging.getLogger(__name__)

UNIFORM_BATCH = 4096


class SimReport(BaseModel):
    """Outcome of a simulation run; ``mean_rounds`` and ``std_error`` cover completed plays only."""

    model_config = ConfigDict(frozen=True)

    game: str
    protocol: str
    protocol2: str | None = None
    trials: int
    completed: int
    truncated: int
    mean_rounds: float
    std_error: float
    max_observed_rounds: int
    one_round_wins: int
    seed: int
    max_rounds: int
    block_size: int
    generator: str = GENERATOR_NAME
    histogram: dict[int, int] = Field(default_factory=dict)

    @property
    def one_round_frequency(self) -> float:
        return self.one_round_wins / self.trials

    def within(self, expected: float, sigmas: float = 3.0) -> bool:
        """Whether ``expected`` lies within ``sigmas`` standard errors of the mean."""
        return abs(self.mean_rounds - expected) <= sigmas * self.std_error


@dataclass
class _Sampler:
    """Cached cumulative weights per (stage, player) and a batched uniform stream."""

    rng: np.random.Generator
    specs: tuple[ProtocolSpec, ...]
    cache: dict[tuple[Stage, int], tuple[np.ndarray, np.ndarray]] = field(default_factory=dict)
    buffer: np.ndarray = field(default_factory=lambda: np.empty(0))
    position: int = 0

    def uniform(self) -> float:
        if self.position == len(self.buffer):
            self.buffer = self.rng.random(UNIFORM_BATCH)
            self.position = 0
        value = self.buffer[self.position]
        self.position += 1
        return float(value)

    def choice(self, stage: Stage, player: int) -> int:
        key = (stage, player)
        if key not in self.cache:
            distribution = evaluate(self.specs[player - 1], stage, player)
            locals_ = np.array([k for k, _ in distribution.weights])
            cumulative = np.cumsum([float(w) for _, w in distribution.weights])
            self.cache[key] = (locals_, cumulative)
        locals_, cumulative = self.cache[key]
        index = int(np.searchsorted(cumulative, self.uniform() * cumulative[-1], side="right"))
        return int(locals_[min(index, len(locals_) - 1)])


def _play(sampler: _Sampler, game: WlcGame, max_rounds: int) -> int | None:
    stage = Stage.initial(game)
    for rounds in range(1, max_rounds + 1):
        profile = tuple(sampler.choice(stage, player) for player in range(1, game.n_players + 1))
        if game.is_winning(profile):
            return rounds
        stage = stage.play_round(profile)
    return None


def simulate(
    game: WlcGame,
    spec: ProtocolSpec,
    trials: int | None = None,
    seed: int | None = None,
    max_rounds: int | None = None,
    spec2: ProtocolSpec | None = None,
    name: str | None = None,
) -> SimReport:
    """Play ``trials`` independent repetitions of mutual play of ``spec``.

    ``spec2``, when given, is followed by player 2 instead of ``spec``.

    Raises:
        UsageError: ``trials`` or ``max_rounds`` is not positive.

    """
    settings = get_settings().simulation
    trials = trials if trials is not None else settings.trials
    seed = seed if seed is not None else settings.seed
    max_rounds = max_rounds if max_rounds is not None else settings.max_rounds
    if trials < 1:
        msg = f"trials must be positive, got {trials}"
        raise UsageError(msg, field="--trials", item=trials)
    if max_rounds < 1:
        msg = f"max rounds must be positive, got {max_rounds}"
        raise UsageError(msg, field="--max-rounds", item=max_rounds)

    specs = tuple(spec2 if (player == 2 and spec2 is not None) else spec for player in range(1, game.n_players + 1))
    block_size = settings.block_size
    blocks = math.ceil(trials / block_size)
    histogram: Counter[int] = Counter()
    truncated = 0
    with timed(logger, f"simulation of {spec}") as facts:
        for block, child in enumerate(np.random.SeedSequence(seed).spawn(blocks)):
            sampler = _Sampler(np.random.Generator(np.random.PCG64(child)), specs)
            size = min(block_size, trials - block * block_size)
            for _ in range(size):
                rounds = _play(sampler, game, max_rounds)
                if rounds is None:
                    truncated += 1
                else:
                    histogram[rounds] += 1
            logger.debug("block %d/%d: %d trials, %d cached moves", block + 1, blocks, size, len(sampler.cache))
        facts["trials"] = trials
        facts["blocks"] = blocks

    completed = trials - truncated
    mean, std_error = _moments(histogram)
    return SimReport(
        game=name or str(game),
        protocol=str(spec),
        protocol2=str(spec2) if spec2 is not None else None,
        trials=trials,
        completed=completed,
        truncated=truncated,
        mean_rounds=mean,
        std_error=std_error,
        max_observed_rounds=max(histogram, default=0),
        one_round_wins=histogram.get(1, 0),
        seed=seed,
        max_rounds=max_rounds,
        block_size=block_size,
        histogram=dict(sorted(histogram.items())),
    )


def _moments(histogram: Counter[int]) -> tuple[float, float]:
    if not histogram:
        return math.nan, math.nan
    rounds = np.array(sorted(histogram), dtype=np.float64)
    counts = np.array([histogram[int(r)] for r in rounds], dtype=np.float64)
    n = counts.sum()
    mean = float(np.dot(rounds, counts) / n)
    if n < 2:
        return mean, 0.0
    variance = float(np.dot(counts, (rounds - mean) ** 2) / (n - 1))
    return mean, math.sqrt(variance / n)
