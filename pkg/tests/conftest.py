"""Fixtures for command line tests."""

from pathlib import Path

import pytest
from typer.testing import CliRunner

from coordsolve.settings import get_settings

GOLDEN_DIR = Path(__file__).parent / "golden"


def data_lines(output: str) -> list[str]:
    """Output lines without ``#`` comments."""
    return [line for line in output.splitlines() if line and not line.startswith("#")]


def assert_golden(output: str, name: str) -> None:
    """Compare CSV output, comments aside, with ``tests/golden/<name>``."""
    expected = (GOLDEN_DIR / name).read_text()
    assert data_lines(output) == data_lines(expected)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch):
    for name in ("FORMAT", "DECIMAL", "DETERMINISTIC", "LOG_LEVEL", "TRIALS", "SEED", "MAX_ROUNDS"):
        monkeypatch.delenv(name, raising=False)
        monkeypatch.delenv(f"COORDSOLVE_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
