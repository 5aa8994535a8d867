"""Error System.

Provides the error item, the error container and the coordsolve exception
hierarchy.

Architecture:
    - ErrorItem: Basic error structure
    - Errors: Error container (normalize, about, with_code, tally, summary);
      doubles as the validation report of a game
    - to_errors(): Direct conversion function (alias for Errors.normalize)
    - CoordsolveError: Base exception; typed subclasses per failure kind

Usage:

    1. **Direct conversion** (classmethod):
        >>> errors = Errors.normalize("error")

    2. **Incremental manipulation** (instance):
        >>> errors = Errors.empty()
        >>> errors.add("choice c2 never coordinates", field="c2", code="surely_losing_choice")

    3. **Raising**:
        >>> raise SurelyLosingChoice("choice c2 never coordinates", field="c2")

"""

from __future__ import annotations

from typing import Any

from .container import Errors
from .exceptions import (
    COMPUTATION_EXIT_CODE,
    USAGE_EXIT_CODE,
    CensusMismatch,
    ChainNotClosed,
    CoordsolveError,
    DisjointnessViolation,
    DomainError,
    EmptyComplement,
    EvenM,
    FinalStage,
    InvalidGame,
    InvalidProfile,
    LimitExceeded,
    NoConvergence,
    NotAChoiceMatchingGame,
    NotationArityError,
    NotationSyntaxError,
    NotSimilarityInvariant,
    ProfileArityMismatch,
    ProtocolSyntaxError,
    SingularSystem,
    StageAlreadyFinal,
    SurelyLosingChoice,
    TableMiss,
    TooLarge,
    UnsupportedM,
    UnsupportedPlayerCount,
    UsageError,
    VerificationFailed,
)
from .types import ErrorItem

__all__ = [
    "COMPUTATION_EXIT_CODE",
    "USAGE_EXIT_CODE",
    "CensusMismatch",
    "ChainNotClosed",
    "CoordsolveError",
    "DisjointnessViolation",
    "DomainError",
    "EmptyComplement",
    "ErrorItem",
    "Errors",
    "EvenM",
    "FinalStage",
    "InvalidGame",
    "InvalidProfile",
    "LimitExceeded",
    "NoConvergence",
    "NotAChoiceMatchingGame",
    "NotSimilarityInvariant",
    "NotationArityError",
    "NotationSyntaxError",
    "ProfileArityMismatch",
    "ProtocolSyntaxError",
    "SingularSystem",
    "StageAlreadyFinal",
    "SurelyLosingChoice",
    "TableMiss",
    "TooLarge",
    "UnsupportedM",
    "UnsupportedPlayerCount",
    "UsageError",
    "VerificationFailed",
    "raise_first",
    "to_errors",
]

_ERRORS_BY_CODE: dict[str, type[CoordsolveError]] = {
    cls.code: cls
    for cls in (
        InvalidGame,
        EmptyComplement,
        SurelyLosingChoice,
        DisjointnessViolation,
    )
}


def to_errors(error: Any, code: str | None = None) -> Errors:
    """Converts any error type to Errors.

    Shortcut for Errors.normalize().

    Examples:
        >>> to_errors("Simple error")
        >>> to_errors({"message": "error", "field": "a1"}, code="invalid_game")

    """
    return Errors.normalize(error, code=code)


def raise_first(report: Errors) -> None:
    """Raise the first item of a validation report as its typed exception.

    Does nothing when the report is empty.
    """
    if report.ok:
        return
    first = report.errors[0]
    exc_type = _ERRORS_BY_CODE.get(first.code or "", InvalidGame)
    raise exc_type(first)
