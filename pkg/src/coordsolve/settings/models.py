from __future__ import annotations

from typing import Any, Literal

from pydantic import AliasChoices, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _aliases(name: str) -> AliasChoices:
    return AliasChoices(f"COORDSOLVE_{name}", name)


class AnalysisSettings(BaseSettings):
    model_config = SettingsConfigDict(
        extra="ignore",
        case_sensitive=False,
        populate_by_name=True,
    )

    analysis_limit: int = Field(
        default=9,
        validation_alias=_aliases("ANALYSIS_LIMIT"),
        description="Largest m accepted by the summary tables",
    )
    max_classes: int = Field(
        default=10_000,
        validation_alias=_aliases("MAX_CLASSES"),
        description="Stage classes expanded before a chain is declared not closed",
    )
    group_limit: int = Field(
        default=250_000,
        validation_alias=_aliases("GROUP_LIMIT"),
        description="Renamings enumerated before renaming_group gives up",
    )
    tolerance: float = Field(
        default=1e-12,
        validation_alias=_aliases("TOLERANCE"),
        description="Absolute tolerance for comparisons against algebraic constants",
    )
    decimal_digits: int = Field(
        default=50,
        validation_alias=_aliases("DECIMAL_DIGITS"),
        description="Digits kept in the decimal shadow of algebraic constants",
    )

    @field_validator("analysis_limit", "max_classes", "group_limit", "decimal_digits")
    @classmethod
    def positive(cls, value: int) -> int:
        if value < 1:
            msg = "must be a positive integer"
            raise ValueError(msg)
        return value

    @field_validator("tolerance")
    @classmethod
    def tolerance_range(cls, value: float) -> float:
        if not 0 < value < 1:
            msg = "tolerance must lie strictly between 0 and 1"
            raise ValueError(msg)
        return value


class SimulationSettings(BaseSettings):
    model_config = SettingsConfigDict(
        extra="ignore",
        case_sensitive=False,
        populate_by_name=True,
    )

    seed: int = Field(default=20_240_917, validation_alias=_aliases("SEED"))
    trials: int = Field(default=100_000, validation_alias=_aliases("TRIALS"))
    max_rounds: int = Field(default=1000, validation_alias=_aliases("MAX_ROUNDS"))
    block_size: int = Field(
        default=4096,
        validation_alias=_aliases("BLOCK_SIZE"),
        description="Trials played with one derived generator",
    )

    @field_validator("trials", "max_rounds", "block_size")
    @classmethod
    def positive(cls, value: int) -> int:
        if value < 1:
            msg = "must be a positive integer"
            raise ValueError(msg)
        return value

    @field_validator("seed")
    @classmethod
    def seed_range(cls, value: int) -> int:
        if not 0 <= value < 2**64:
            msg = "seed must be a 64-bit unsigned value"
            raise ValueError(msg)
        return value


class OutputSettings(BaseSettings):
    model_config = SettingsConfigDict(
        extra="ignore",
        case_sensitive=False,
        populate_by_name=True,
    )

    format: Literal["text", "csv", "json"] = Field(default="text", validation_alias=_aliases("FORMAT"))
    decimal: int | None = Field(
        default=None,
        validation_alias=_aliases("DECIMAL"),
        description="Render values with this many significant digits instead of rationals",
    )
    log_level: LogLevel = Field(default="WARNING", validation_alias=_aliases("LOG_LEVEL"))
    deterministic: bool = Field(default=False, validation_alias=_aliases("DETERMINISTIC"))

    @model_validator(mode="before")
    @classmethod
    def normalize_case(cls, values: Any) -> Any:
        if not isinstance(values, dict):
            return values
        for key in list(values):
            upper = key.upper()
            if upper.endswith("LOG_LEVEL") and isinstance(values[key], str):
                values[key] = values[key].upper()
            elif upper.endswith("FORMAT") and isinstance(values[key], str):
                values[key] = values[key].lower()
            elif upper.endswith("DECIMAL") and values[key] in {"", None}:
                values[key] = None
        return values
