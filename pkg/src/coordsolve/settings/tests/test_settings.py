"""Tests for the settings system."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from .. import AnalysisSettings, OutputSettings, Settings, SimulationSettings, get_settings

pytestmark = pytest.mark.unit


class TestAnalysisSettings:
    """Tests for AnalysisSettings."""

    def test_defaults(self):
        settings = AnalysisSettings()

        assert settings.analysis_limit == 9
        assert settings.max_classes == 10_000
        assert settings.group_limit == 250_000
        assert settings.tolerance == 1e-12
        assert settings.decimal_digits == 50

    def test_load_from_env_file(self, tmp_env_file: Path):
        """Both the prefixed and the short name are accepted."""
        settings = AnalysisSettings(_env_file=str(tmp_env_file))  # pyright: ignore[reportCallIssue]

        assert settings.analysis_limit == 7
        assert settings.max_classes == 500

    def test_environment(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("coordsolve_max_classes", "12")

        assert AnalysisSettings().max_classes == 12

    @pytest.mark.parametrize(
        ("field", "value"),
        [("max_classes", 0), ("analysis_limit", -1), ("tolerance", 0.0), ("tolerance", 1.5)],
    )
    def test_rejects(self, field, value):
        with pytest.raises(ValidationError):
            AnalysisSettings(**{field: value})


class TestSimulationSettings:
    """Tests for SimulationSettings."""

    def test_defaults(self):
        settings = SimulationSettings()

        assert settings.seed == 20_240_917
        assert settings.trials == 100_000
        assert settings.max_rounds == 1000
        assert settings.block_size == 4096

    def test_load_from_env_file(self, tmp_env_file: Path):
        settings = SimulationSettings(_env_file=str(tmp_env_file))  # pyright: ignore[reportCallIssue]

        assert settings.seed == 42
        assert settings.trials == 1000

    @pytest.mark.parametrize(("field", "value"), [("seed", -1), ("seed", 2**64), ("trials", 0), ("block_size", 0)])
    def test_rejects(self, field, value):
        with pytest.raises(ValidationError):
            SimulationSettings(**{field: value})


class TestOutputSettings:
    """Tests for OutputSettings."""

    def test_defaults(self):
        settings = OutputSettings()

        assert settings.format == "text"
        assert settings.decimal is None
        assert settings.log_level == "WARNING"
        assert settings.deterministic is False

    def test_case_normalization(self, tmp_env_file: Path):
        settings = OutputSettings(_env_file=str(tmp_env_file))  # pyright: ignore[reportCallIssue]

        assert settings.format == "csv"
        assert settings.log_level == "DEBUG"
        assert settings.decimal is None

    def test_rejects_unknown_format(self):
        with pytest.raises(ValidationError):
            OutputSettings(format="xml")


class TestSettings:
    """Tests for the aggregate and its cache."""

    def test_sections(self, tmp_env_file: Path):
        settings = Settings(env_file=str(tmp_env_file))

        dumped = settings.model_dump()
        assert set(dumped) == {"analysis", "simulation", "output"}
        assert dumped["simulation"]["seed"] == 42
        assert "SIMULATION SETTINGS" in str(settings)

    def test_cached(self):
        assert get_settings() is get_settings()

    def test_cache_clear_reads_environment(self, monkeypatch: pytest.MonkeyPatch):
        first = get_settings()
        monkeypatch.setenv("COORDSOLVE_TRIALS", "77")
        get_settings.cache_clear()

        assert get_settings() is not first
        assert get_settings().simulation.trials == 77
