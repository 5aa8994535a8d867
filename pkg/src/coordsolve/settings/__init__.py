from __future__ import annotations

from functools import lru_cache
from typing import Any

from .models import AnalysisSettings, OutputSettings, SimulationSettings

__all__ = ["AnalysisSettings", "OutputSettings", "Settings", "SimulationSettings", "get_settings"]


class Settings:
    def __init__(self, env_file: str | None = ".env"):
        self.analysis = AnalysisSettings(_env_file=env_file)  # pyright: ignore[reportCallIssue]
        self.simulation = SimulationSettings(_env_file=env_file)  # pyright: ignore[reportCallIssue]
        self.output = OutputSettings(_env_file=env_file)  # pyright: ignore[reportCallIssue]

    def model_dump(self, *args, **kwargs) -> dict[str, Any]:
        return {
            "analysis": self.analysis.model_dump(*args, **kwargs),
            "simulation": self.simulation.model_dump(*args, **kwargs),
            "output": self.output.model_dump(*args, **kwargs),
        }

    def __str__(self) -> str:
        parts = [
            f"ANALYSIS SETTINGS:\n{self.analysis}\n",
            f"SIMULATION SETTINGS:\n{self.simulation}\n",
            f"OUTPUT SETTINGS:\n{self.output}\n",
        ]
        return "\n".join(parts)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings, read once from the environment and ``.env``."""
    return Settings()
