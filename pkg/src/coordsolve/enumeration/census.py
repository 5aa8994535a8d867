"""Isomorph-free census of small two-player games and its classification."""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, replace
from fractions import Fraction

from ..analysis import E1, AlgebraicConstant, exact_ect, wm_ect_bound
from ..errors import (
    CensusMismatch,
    ChainNotClosed,
    NotSimilarityInvariant,
    SingularSystem,
    TooLarge,
    UnsupportedM,
    UsageError,
    VerificationFailed,
)
from ..game import Stage, WlcGame, build_notation
from ..protocols import ProtocolSpec
from ..symmetry import StageClassKey, focal_indices, game_key, one_round_solvable
from ..types import CensusClass
from ..utils import CENSUS_EDGE_FILTER, timed
from .catalogue import CATALOGUES, FIVE_CHOICE_HARD, FIVE_CHOICE_SPECIALS, G_STAR, THREE_CHOICE_HARD
from .components import component_notation

logger = logging.getLogger(__name__)

RELATION_SCAN_LIMIT = 3
COMPONENT_SCAN_LIMIT = 5

Value = Fraction | AlgebraicConstant


@dataclass(frozen=True)
class EctEstimate:
    """Expected coordination time attached to a census game.

    ``bound`` marks values that bound the optimal time from above without being
    known optimal.
    """

    value: Value
    method: str
    bound: bool = False

    def below(self, limit: Fraction) -> bool:
        if isinstance(self.value, AlgebraicConstant):
            return not self.value.exceeds(limit)
        return self.value < limit

    def __str__(self) -> str:
        return f"<= {self.value}" if self.bound else str(self.value)


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class of ``m``-choice games."""

    notation: str
    edge_count: int
    degrees: tuple[tuple[int, ...], tuple[int, ...]]
    has_initial_focal_point: bool
    one_round_solvable: bool
    estimate: EctEstimate | None = None

    @property
    def max_degree(self) -> int:
        return max(max(side) for side in self.degrees)

    @property
    def kind(self) -> CensusClass:
        if self.one_round_solvable:
            return CensusClass.SOLVABLE
        return CensusClass.FOCAL if self.has_initial_focal_point else CensusClass.HARD

    @property
    def game(self) -> WlcGame:
        return build_notation(self.notation)


@dataclass(frozen=True)
class CensusReport:
    m: int
    entries: tuple[CensusEntry, ...]
    unconstrained_classes: int | None = None
    wm_filter: Fraction | None = None

    def counts(self, max_degree: int = 2) -> dict[int, int]:
        """Classes with all degrees at most ``max_degree``, by number of winning pairs."""
        counts = Counter(e.edge_count for e in self.entries if e.max_degree <= max_degree)
        return dict(sorted(counts.items()))

    @property
    def hard(self) -> tuple[CensusEntry, ...]:
        return tuple(e for e in self.entries if e.kind is CensusClass.HARD)

    @property
    def maximum(self) -> CensusEntry:
        """Entry with the greatest attached expected time."""
        return max((e for e in self.entries if e.estimate), key=lambda e: float(e.estimate.value))  # type: ignore[union-attr]


def classify(game: WlcGame, notation: str | None = None) -> CensusEntry:
    stage = Stage.initial(game)
    solvable = one_round_solvable(stage) is not None
    degrees = tuple(tuple(sorted(side, reverse=True)) for side in game.degrees())
    return CensusEntry(
        notation=notation or component_notation(game),
        edge_count=len(game.winning),
        degrees=degrees,  # type: ignore[arg-type]
        has_initial_focal_point=bool(focal_indices(stage)),
        one_round_solvable=solvable,
        estimate=EctEstimate(Fraction(1), "one round") if solvable else None,
    )


def _relation_games(m: int) -> Iterator[WlcGame]:
    cells = list(itertools.product(range(m), repeat=2))
    for mask in range(1, 1 << len(cells)):
        edges = [cell for bit, cell in enumerate(cells) if mask >> bit & 1]
        rows = sorted({a for a, _ in edges})
        columns = sorted({b for _, b in edges})
        if max(len(rows), len(columns)) != m:
            continue
        row_index = {a: k for k, a in enumerate(rows)}
        column_index = {b: k for k, b in enumerate(columns)}
        yield WlcGame.two_player(len(rows), len(columns), ((row_index[a], column_index[b]) for a, b in edges))


# (n1, n2, notation) of connected games whose choices all have degree at most 2
def _path_and_cycle_pieces(m: int) -> list[tuple[int, int, str]]:
    pieces = [(1, 1, "1x1"), (1, 2, "1x2"), (2, 1, "2x1")]
    pieces += [(k, k, f"O({k})") for k in range(2, m + 1)]
    pieces += [(k, k, f"Z({k})") for k in range(2, m + 1)]
    pieces += [(k - 1, k, f"Sigma({k})") for k in range(3, m + 1)]
    pieces += [(k, k - 1, f"SigmaR({k})") for k in range(3, m + 1)]
    return pieces


def _component_games(m: int, max_degree: int) -> Iterator[tuple[WlcGame, str]]:
    pieces = _path_and_cycle_pieces(m) if max_degree == 2 else [(1, 1, "1x1")]

    def extend(start: int, n1: int, n2: int, chosen: list[str]) -> Iterator[list[str]]:
        if chosen and max(n1, n2) == m:
            yield chosen
        for index in range(start, len(pieces)):
            a, b, _ = pieces[index]
            if n1 + a <= m and n2 + b <= m:
                yield from extend(index, n1 + a, n2 + b, [*chosen, pieces[index][2]])

    for chosen in extend(0, 0, 0, []):
        game = build_notation(" + ".join(chosen))
        yield game, component_notation(game)


def enumerate_m_choice(
    m: int,
    max_degree: int | None = None,
    min_edges: int | None = None,
    max_edges: int | None = None,
) -> list[CensusEntry]:
    """One entry per renaming-isomorphism class of ``m``-choice games.

    Games with all degrees at most 2 are unions of paths and cycles and are
    generated from those pieces; anything else scans every relation on an
    ``m x m`` grid.

    Raises:
        TooLarge: The requested enumeration is beyond the scan limits.

    """
    if m < 1:
        msg = f"m must be at least 1, got {m}"
        raise UsageError(msg, field="m", item=m)
    if max_degree is not None and max_degree <= 2:
        if m > COMPONENT_SCAN_LIMIT:
            msg = f"degree-bounded census supports m <= {COMPONENT_SCAN_LIMIT}, got {m}"
            raise TooLarge(msg, item=m)
        candidates: Iterator[tuple[WlcGame, str | None]] = _component_games(m, max_degree)
    else:
        if m > RELATION_SCAN_LIMIT:
            msg = f"unconstrained census supports m <= {RELATION_SCAN_LIMIT}, got {m}"
            raise TooLarge(msg, item=m)
        candidates = ((game, None) for game in _relation_games(m))

    classes: dict[StageClassKey, CensusEntry] = {}
    scanned = 0
    with timed(logger, f"census m={m}") as facts:
        for game, notation in candidates:
            scanned += 1
            edges = len(game.winning)
            if (min_edges is not None and edges < min_edges) or (max_edges is not None and edges > max_edges):
                continue
            if max_degree is not None and max(max(side) for side in game.degrees()) > max_degree:
                continue
            key = game_key(game)
            if key not in classes:
                classes[key] = classify(game, notation)
        facts["candidates"] = scanned
        facts["classes"] = len(classes)
    return sorted(classes.values(), key=lambda e: (e.edge_count, e.notation))


def _exact(game: WlcGame, spec: ProtocolSpec, method: str, bound: bool) -> EctEstimate:
    value = exact_ect(game, spec).value
    return EctEstimate(value, method, bound)


def _hard_estimate(notation: str) -> EctEstimate:
    wm, la, uniform = ProtocolSpec.wm(), ProtocolSpec.la(), ProtocolSpec.uniform()
    match notation:
        case "CM(3)" | "CM(5)":
            return _exact(build_notation(notation), la, "LA", bound=False)
        case "O(3)":
            return _exact(build_notation("O(3)"), uniform, "uniform", bound=True)
        case "1x2 + 2x1":
            return EctEstimate(E1, "fixed point")
        case "1x2 + 2x1 + 2*(1x1)":
            return EctEstimate(E1, "1x2 + 2x1 subgame", bound=True)
        case "O(3) + 2*(1x1)":
            return _exact(build_notation("O(3)"), uniform, "uniform on O(3)", bound=True)
        case "1x4 + 4x1" | "Sigma(3) + SigmaR(3)":
            return _exact(build_notation("CM(2)"), wm, "split first round, then WM", bound=True)
    if notation == G_STAR:
        return _exact(build_notation("CM(2)"), wm, "split first round, then WM", bound=True)
    msg = f"no certificate for {notation}"
    raise CensusMismatch(msg, field=notation)


def _best_estimate(game: WlcGame) -> EctEstimate:
    best = EctEstimate(wm_ect_bound(game), "WM bound", bound=True)
    for spec in (ProtocolSpec.wm(), ProtocolSpec.la(), ProtocolSpec.uniform(), ProtocolSpec.touched(Fraction(1, 2))):
        try:
            value = exact_ect(game, spec).value
        except (SingularSystem, ChainNotClosed, NotSimilarityInvariant) as e:
            logger.debug("skipping %s on %s: %s", spec, game, e)
            continue
        assert isinstance(value, Fraction)
        if value < best.value:  # type: ignore[operator]
            best = EctEstimate(value, str(spec), bound=True)
    return best


def _match_catalogue(m: int, entries: list[CensusEntry]) -> list[CensusEntry]:
    listed = {game_key(build_notation(n)): n for group in CATALOGUES[m].values() for n in group}
    found = {game_key(e.game): e for e in entries}
    unlisted = [e.notation for key, e in found.items() if key not in listed]
    if unlisted:
        msg = f"{m}-choice census found classes missing from the published table: {', '.join(unlisted)}"
        raise CensusMismatch(msg, item=len(unlisted))
    missing = [n for key, n in listed.items() if key not in found]
    if missing:
        msg = f"{m}-choice census did not find listed classes: {', '.join(missing)}"
        raise CensusMismatch(msg, item=len(missing))
    return [replace(e, notation=listed[key]) for key, e in found.items()]


def _check_unconstrained_three_choice() -> int:
    classes = enumerate_m_choice(3)
    for entry in classes:
        if entry.max_degree == 3 and not entry.one_round_solvable:
            msg = f"{entry.notation} has a degree-3 choice but no one-round solution"
            raise CensusMismatch(msg, field=entry.notation)
    logger.info("3-choice relation scan: %d classes", len(classes))
    return len(classes)


def census_report(m: int) -> CensusReport:
    """Classified census of 3- or 5-choice games, with expected times on the hard cases.

    Raises:
        UnsupportedM: ``m`` is neither 3 nor 5.
        CensusMismatch: The enumeration disagrees with the published tables or a
            certificate fails.

    """
    if m not in CATALOGUES:
        msg = f"census covers m = 3 and m = 5 only, got {m}"
        raise UnsupportedM(msg, field="--m", item=m)
    max_edges = CENSUS_EDGE_FILTER if m == 5 else None
    entries = _match_catalogue(m, enumerate_m_choice(m, max_degree=2, max_edges=max_edges))
    if m == 5:
        entries += [classify(build_notation(n), n) for n in FIVE_CHOICE_SPECIALS]

    expected_hard = {game_key(build_notation(n)) for n in (THREE_CHOICE_HARD if m == 3 else FIVE_CHOICE_HARD)}
    hard = {game_key(e.game) for e in entries if e.kind is CensusClass.HARD}
    if hard != expected_hard:
        msg = f"{m}-choice games without focal point differ from the published hard cases"
        raise CensusMismatch(msg, item=len(hard))

    classified = []
    for entry in entries:
        if entry.kind is CensusClass.HARD:
            entry = replace(entry, estimate=_hard_estimate(entry.notation))
        elif entry.estimate is None:
            entry = replace(entry, estimate=_best_estimate(entry.game))
        classified.append(entry)
    classified.sort(key=lambda e: (e.edge_count, e.notation))

    report = CensusReport(
        m=m,
        entries=tuple(classified),
        unconstrained_classes=_check_unconstrained_three_choice() if m == 3 else None,
        wm_filter=3 - 2 * Fraction(CENSUS_EDGE_FILTER + 1, m * m) if m == 5 else None,
    )
    _certify(report)
    return report


def _certify(report: CensusReport) -> None:
    top = report.maximum
    if report.m == 3:
        values = sorted(float(e.estimate.value) for e in report.hard if e.estimate is not None)
        if top.notation != "1x2 + 2x1" or len(set(values)) != len(values) or values[0] <= 1:
            msg = f"3-choice maximum is {top.notation}, expected 1x2 + 2x1"
            raise CensusMismatch(msg, field=top.notation)
        return
    cm5 = Fraction(7, 3)
    assert report.wm_filter is not None and report.wm_filter < cm5
    for entry in report.entries:
        if entry.notation == "CM(5)":
            continue
        if entry.estimate is None or not entry.estimate.below(cm5):
            msg = f"{entry.notation} is not certified below 7/3"
            raise CensusMismatch(msg, field=entry.notation)
    logger.info("5-choice census certified: every game other than CM(5) below 7/3")


def verify_census(report: CensusReport) -> None:
    """Re-derive a census independently of how it was enumerated.

    Class counts per number of winning pairs must match the published tables, no
    two entries may be isomorphic, and every entry rebuilt from its notation must
    classify the same way. For ``m = 3`` the degree-bounded classes must also
    agree with a scan of every relation on the ``3 x 3`` grid.

    Raises:
        VerificationFailed: Any of the checks disagrees.

    """
    published = {edges: len(names) for edges, names in sorted(CATALOGUES[report.m].items())}
    if report.counts() != published:
        msg = f"{report.m}-choice class counts {report.counts()} differ from the published {published}"
        raise VerificationFailed(msg, item=report.m)
    keys = [game_key(e.game) for e in report.entries]
    if len(set(keys)) != len(keys):
        msg = f"{report.m}-choice census lists {len(keys) - len(set(keys))} isomorphic duplicates"
        raise VerificationFailed(msg, item=report.m)
    for entry in report.entries:
        again = classify(entry.game, entry.notation)
        if (again.edge_count, again.has_initial_focal_point, again.one_round_solvable) != (
            entry.edge_count,
            entry.has_initial_focal_point,
            entry.one_round_solvable,
        ):
            msg = f"{entry.notation} classifies differently when rebuilt from its notation"
            raise VerificationFailed(msg, field=entry.notation)
    if report.m == 3:
        scanned = {game_key(e.game) for e in enumerate_m_choice(3) if e.max_degree <= 2}
        bounded = {key for key, e in zip(keys, report.entries, strict=True) if e.max_degree <= 2}
        if scanned != bounded:
            msg = f"relation scan finds {len(scanned)} degree-bounded classes, the census {len(bounded)}"
            raise VerificationFailed(msg, item=report.m)
    logger.info("%d-choice census verified: %d classes", report.m, len(report.entries))
