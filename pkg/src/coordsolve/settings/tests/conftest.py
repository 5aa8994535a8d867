"""Fixtures for settings tests."""

from pathlib import Path

import pytest

from .. import get_settings

SETTING_NAMES = (
    "ANALYSIS_LIMIT",
    "MAX_CLASSES",
    "GROUP_LIMIT",
    "TOLERANCE",
    "DECIMAL_DIGITS",
    "SEED",
    "TRIALS",
    "MAX_ROUNDS",
    "BLOCK_SIZE",
    "FORMAT",
    "DECIMAL",
    "LOG_LEVEL",
    "DETERMINISTIC",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch):
    """Remove coordsolve variables from the environment and reset the cached settings."""
    for name in SETTING_NAMES:
        monkeypatch.delenv(name, raising=False)
        monkeypatch.delenv(f"COORDSOLVE_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def tmp_env_file(tmp_path: Path) -> Path:
    """Temporary .env with one value per section."""
    env_file = tmp_path / ".env"
    content = """
COORDSOLVE_ANALYSIS_LIMIT=7
MAX_CLASSES=500
COORDSOLVE_SEED=42
TRIALS=1000
COORDSOLVE_FORMAT=CSV
LOG_LEVEL=debug
DECIMAL=
"""
    env_file.write_text(content.strip())
    return env_file
