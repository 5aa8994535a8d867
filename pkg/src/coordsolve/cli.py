"""Command line interface for coordination time analysis."""

import logging
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import NoReturn

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from .analysis import (
    FormulaEParams,
    bounds_rows,
    bracket_ect,
    formula_e,
    formula_e_sweep,
    oscp,
    stage_ect,
    stage_gct,
    summary_table,
    three_choice_fixed_point,
    verify_fixed_point,
    verify_formula_e,
    verify_formula_e_sweep,
    verify_gct,
    verify_oscp,
    wm_vs_la_table,
)
from .enumeration import census_report, verify_census
from .errors import CoordsolveError, UsageError, VerificationFailed
from .game import Stage, load_stage, resolve_game, stage_from_history
from .montecarlo import SimReport, simulate
from .presentation import (
    Document,
    RichConsole,
    bounds_document,
    census_document,
    classify_document,
    ect_document,
    fixed_point_document,
    formula_e_document,
    gct_document,
    oscp_document,
    render,
    simulation_document,
    summary_document,
    sweep_document,
    timestamp_header,
    wm_vs_la_document,
    write_histogram,
)
from .protocols import ProtocolSpec, parse_protocol
from .settings import get_settings
from .symmetry import verify_renamings
from .types import OutputFormat, TableKind
from .utils import GCT_ODD_NOTE

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="coordsolve",
    help="Expected and guaranteed coordination times of repeated win-lose coordination games",
    add_completion=False,
    no_args_is_help=True,
)
console = RichConsole(Console(highlight=False))
error_console = RichConsole(Console(stderr=True, highlight=False))

# Raw stages expanded when checking an exact expected time
VERIFY_DEPTH = 2


def _setup_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else get_settings().output.log_level
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _format(fmt: OutputFormat | None) -> OutputFormat:
    return fmt or OutputFormat(get_settings().output.format)


def _decimal(decimal: int | None) -> int | None:
    value = decimal if decimal is not None else get_settings().output.decimal
    if value is not None and value < 1:
        msg = f"--decimal needs a positive digit count, got {value}"
        raise UsageError(msg, field="--decimal", item=value)
    return value


def _header(stamped: bool, deterministic: bool) -> str | None:
    if not stamped or deterministic or get_settings().output.deterministic:
        return None
    return timestamp_header()


def _fail(error: CoordsolveError, cause: Exception | None = None) -> NoReturn:
    for line in error.errors.lines():
        error_console.print_error(f"error {line}")
    raise typer.Exit(error.exit_code) from (cause or error)


def _run(
    compute: Callable[[], Document],
    fmt: OutputFormat | None,
    verbose: bool = False,
    stamped: bool = False,
    deterministic: bool = False,
) -> None:
    """Compute a document, then render it; errors leave stdout untouched.

    Raises:
        typer.Exit: With the error's exit code (2 for usage errors, 1 otherwise).

    """
    _setup_logging(verbose)
    try:
        document = compute()
        output = _format(fmt)
    except CoordsolveError as e:
        _fail(e)
    except ValidationError as e:
        _fail(UsageError(e), e)
    render(console, document, output, _header(stamped, deterministic))


def _stage(game: str | None, history: str | None, stage: str | None) -> tuple[str, Stage]:
    if stage is not None:
        if not stage.startswith("@"):
            msg = "--stage expects @file.json"
            raise UsageError(msg, field="--stage")
        path = Path(stage[1:])
        if not path.is_file():
            msg = f"stage file not found: {path}"
            raise UsageError(msg, field="--stage")
        loaded = load_stage(path)
        return path.name, loaded
    if game is None:
        msg = "either --game or --stage is required"
        raise UsageError(msg, field="--game")
    return game, stage_from_history(resolve_game(game), history)


def _verify_ect(stage: Stage, spec: ProtocolSpec, value: object) -> None:
    if stage.rounds:
        return
    if not isinstance(value, Fraction):
        msg = f"no rational expected time to check: {value}"
        raise VerificationFailed(msg)
    bracket = bracket_ect(stage.game, spec, VERIFY_DEPTH)
    if value < bracket.lower or (bracket.upper is not None and value > bracket.upper):
        msg = f"expected time {value} outside [{bracket.lower}, {bracket.upper}] from {bracket.stages} raw stages"
        raise VerificationFailed(msg, expected=str(value))


def _verify_simulation(report: SimReport, stage: Stage, spec: ProtocolSpec) -> Fraction:
    value = stage_ect(stage, spec).value
    if not isinstance(value, Fraction):
        msg = f"no rational expected time to compare with: {value}"
        raise VerificationFailed(msg)
    if not report.within(float(value)):
        msg = f"simulated mean {report.mean_rounds:.6f} is more than 3 standard errors from {value}"
        raise VerificationFailed(msg, expected=str(value))
    return value


def _format_option() -> typer.models.OptionInfo:
    return typer.Option(None, "--format", help="Output format: text, csv or json")


def _decimal_option() -> typer.models.OptionInfo:
    return typer.Option(None, "--decimal", help="Render values with N significant digits instead of rationals")


def _verbose_option() -> typer.models.OptionInfo:
    return typer.Option(False, "--verbose", "-v", help="Log debug records to stderr")


def _deterministic_option() -> typer.models.OptionInfo:
    return typer.Option(False, "--deterministic", help="Omit the timestamp header")


@app.command()
def ect(
    game: str = typer.Option(None, "--game", help="Game notation or @file.json"),
    protocol: str = typer.Option("wm", "--protocol", help="wm, la, uniform, touched:p or @table.json"),
    history: str = typer.Option(None, "--history", help="Rounds played so far, e.g. a1:b2,b1:a2"),
    stage: str = typer.Option(None, "--stage", help="Stage as @file.json"),
    verify: bool = typer.Option(False, "--verify", help="Check the value against a raw expansion"),
    fmt: OutputFormat = _format_option(),
    decimal: int = _decimal_option(),
    verbose: bool = _verbose_option(),
):
    """Exact expected coordination time under mutual play of a protocol."""

    def compute() -> Document:
        name, start = _stage(game, history, stage)
        spec = parse_protocol(protocol)
        result = stage_ect(start, spec)
        if verify:
            _verify_ect(start, spec, result.value)
        return ect_document(name, str(spec), result, _decimal(decimal), verified=verify)

    _run(compute, fmt, verbose)


@app.command()
def gct(
    game: str = typer.Option(None, "--game", help="Game notation or @file.json"),
    protocol: str = typer.Option("la", "--protocol", help="wm, la, uniform, touched:p or @table.json"),
    history: str = typer.Option(None, "--history", help="Rounds played so far"),
    stage: str = typer.Option(None, "--stage", help="Stage as @file.json"),
    verify: bool = typer.Option(False, "--verify", help="Check the value against a topological sort of the chain"),
    fmt: OutputFormat = _format_option(),
    verbose: bool = _verbose_option(),
):
    """Guaranteed coordination time; ``inf`` when coordination is never guaranteed."""

    def compute() -> Document:
        name, start = _stage(game, history, stage)
        spec = parse_protocol(protocol)
        result = stage_gct(start, spec)
        if verify:
            verify_gct(start, spec, result)
        return gct_document(name, str(spec), result)

    _run(compute, fmt, verbose)


@app.command(name="oscp")
def oscp_command(
    game: str = typer.Option(None, "--game", help="Game notation or @file.json"),
    protocol: str = typer.Option("uniform", "--protocol", help="wm, la, uniform, touched:p or @table.json"),
    history: str = typer.Option(None, "--history", help="Rounds played so far"),
    stage: str = typer.Option(None, "--stage", help="Stage as @file.json"),
    verify: bool = typer.Option(False, "--verify", help="Recompute the probability over the winning profiles"),
    fmt: OutputFormat = _format_option(),
    decimal: int = _decimal_option(),
    verbose: bool = _verbose_option(),
):
    """Probability of coordinating in the next round."""

    def compute() -> Document:
        name, start = _stage(game, history, stage)
        spec = parse_protocol(protocol)
        value = oscp(start, spec)
        if verify:
            verify_oscp(start, spec, value)
        return oscp_document(name, str(spec), value, _decimal(decimal))

    _run(compute, fmt, verbose)


@app.command(name="simulate")
def simulate_command(
    game: str = typer.Option(..., "--game", help="Game notation or @file.json"),
    protocol: str = typer.Option("wm", "--protocol", help="Protocol of every player"),
    protocol2: str = typer.Option(None, "--protocol2", help="Protocol of player 2, for cross-protocol play"),
    trials: int = typer.Option(None, "--trials", help="Number of plays"),
    seed: int = typer.Option(None, "--seed", help="Master seed"),
    max_rounds: int = typer.Option(None, "--max-rounds", help="Rounds after which a play is truncated"),
    histogram: Path = typer.Option(None, "--histogram", help="Write the round-count histogram as CSV"),
    verify: bool = typer.Option(False, "--verify", help="Compare the mean with the exact expected time"),
    fmt: OutputFormat = _format_option(),
    deterministic: bool = _deterministic_option(),
    verbose: bool = _verbose_option(),
):
    """Seeded Monte Carlo estimate of the expected coordination time."""

    def compute() -> Document:
        board = resolve_game(game)
        spec = parse_protocol(protocol)
        spec2 = parse_protocol(protocol2) if protocol2 else None
        report = simulate(board, spec, trials, seed, max_rounds, spec2=spec2, name=game)
        exact = None
        if verify:
            if spec2 is not None:
                msg = "--verify needs a single protocol"
                raise UsageError(msg, field="--protocol2")
            exact = _verify_simulation(report, Stage.initial(board), spec)
        if histogram is not None:
            write_histogram(report, histogram)
        return simulation_document(report, exact)

    _run(compute, fmt, verbose, stamped=True, deterministic=deterministic)


@app.command()
def classify(
    game: str = typer.Option(None, "--game", help="Game notation or @file.json"),
    history: str = typer.Option(None, "--history", help="Rounds played so far"),
    stage: str = typer.Option(None, "--stage", help="Stage as @file.json"),
    verify: bool = typer.Option(False, "--verify", help="Check the renamings against brute-force enumeration"),
    fmt: OutputFormat = _format_option(),
    verbose: bool = _verbose_option(),
):
    """Symmetry partition, focal points and conjugates of a stage."""

    def compute() -> Document:
        _, start = _stage(game, history, stage)
        if verify:
            verify_renamings(start)
        return classify_document(start)

    _run(compute, fmt, verbose)


@app.command()
def table(
    kind: TableKind = typer.Argument(..., help="summary, bounds or wm-vs-la"),
    max_m: int = typer.Option(None, "--max-m", help="Largest number of choices (default: analysis limit)"),
    verify: bool = typer.Option(False, "--verify", help="Re-check every row against its formula"),
    fmt: OutputFormat = _format_option(),
    decimal: int = _decimal_option(),
    deterministic: bool = _deterministic_option(),
    verbose: bool = _verbose_option(),
):
    """Reproduce the choice matching tables."""

    def compute() -> Document:
        m_max = max_m if max_m is not None else get_settings().analysis.analysis_limit
        digits = _decimal(decimal)
        if kind is TableKind.SUMMARY:
            notes = (GCT_ODD_NOTE,) if verify else ()
            return summary_document(summary_table(m_max, verify=verify), digits, notes)
        if kind is TableKind.BOUNDS:
            return bounds_document(bounds_rows(m_max, verify=verify), digits)
        return wm_vs_la_document(wm_vs_la_table(m_max, verify=verify), digits)

    _run(compute, fmt, verbose, stamped=True, deterministic=deterministic)


@app.command()
def census(
    m: int = typer.Option(..., "--m", help="Number of choices: 3 or 5"),
    verify: bool = typer.Option(False, "--verify", help="Re-derive class counts and classifications"),
    fmt: OutputFormat = _format_option(),
    decimal: int = _decimal_option(),
    deterministic: bool = _deterministic_option(),
    verbose: bool = _verbose_option(),
):
    """Isomorph-free census of m-choice games with their expected times."""

    def compute() -> Document:
        report = census_report(m)
        if verify:
            verify_census(report)
        return census_document(report, _decimal(decimal))

    _run(compute, fmt, verbose, stamped=True, deterministic=deterministic)


@app.command(name="formula-e")
def formula_e_command(
    n: int = typer.Option(..., "--n", help="Untouched winning pairs"),
    e1: str = typer.Option(..., "--e1", help="Expected time after a touched-edge miss"),
    e2: str = typer.Option(..., "--e2", help="Expected time after an untouched miss"),
    p: str = typer.Option("0", "--p", help="Weight on touched edges"),
    sweep: bool = typer.Option(False, "--sweep", help="Tabulate the value over [0, 1]"),
    steps: int = typer.Option(100, "--steps", help="Grid steps for --sweep"),
    verify: bool = typer.Option(False, "--verify", help="Re-derive the formula symbolically"),
    fmt: OutputFormat = _format_option(),
    decimal: int = _decimal_option(),
    verbose: bool = _verbose_option(),
):
    """Expected time of the touched-edge weighting and its minimizing weights."""

    def compute() -> Document:
        params = FormulaEParams(p=p, n=n, e1=e1, e2=e2)
        if sweep:
            if steps < 1:
                msg = f"--steps must be positive, got {steps}"
                raise UsageError(msg, field="--steps", item=steps)
            points = formula_e_sweep(params, steps)
            if verify:
                verify_formula_e_sweep(params, points)
            return sweep_document(points, _decimal(decimal))
        value, minimizers = formula_e(params)
        if verify:
            verify_formula_e(params, value, minimizers)
        return formula_e_document(params, value, minimizers, _decimal(decimal))

    _run(compute, fmt, verbose)


@app.command(name="fixed-point")
def fixed_point(
    verify: bool = typer.Option(False, "--verify", help="Check the closed forms exactly"),
    fmt: OutputFormat = _format_option(),
    decimal: int = _decimal_option(),
    verbose: bool = _verbose_option(),
):
    """Optimal follow-up times and weights in ``1x2 + 2x1``."""

    def compute() -> Document:
        point = three_choice_fixed_point()
        if verify:
            verify_fixed_point(point)
        return fixed_point_document(point, _decimal(decimal))

    _run(compute, fmt, verbose)


if __name__ == "__main__":
    app()
