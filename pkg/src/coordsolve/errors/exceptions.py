"""Error System - Exceptions.

Every failure raised by coordsolve is a ``CoordsolveError`` carrying structured
``Errors``. Subclasses fix the error ``code`` and the CLI exit status.
"""

from __future__ import annotations

from typing import Any, ClassVar

from .container import Errors
from .types import ErrorItem

USAGE_EXIT_CODE = 2
COMPUTATION_EXIT_CODE = 1


class CoordsolveError(Exception):
    """Base exception that carries Errors internally.

    Accepts any entry type and normalizes to Errors automatically. Keyword
    arguments other than ``field`` and ``item`` are stored as metadata.

    Examples:
        >>> raise CoordsolveError("Simple error")
        >>> raise SurelyLosingChoice("choice c2 never coordinates", field="c2")
        >>> raise NotationSyntaxError("unexpected ')'", position=4)

    """

    code: ClassVar[str] = "coordsolve_error"
    exit_code: ClassVar[int] = COMPUTATION_EXIT_CODE

    def __init__(
        self,
        error: str | ErrorItem | Errors | dict[str, Any] | Exception,
        *,
        field: str | None = None,
        item: int | None = None,
        **meta: Any,
    ) -> None:
        super().__init__()
        if isinstance(error, str):
            self._errors = Errors(
                root=[ErrorItem(message=error, field=field, code=self.code, item=item, meta=meta)],
            )
        else:
            self._errors = Errors.normalize(error, code=self.code)

    @property
    def errors(self) -> Errors:
        """Returns the internal Errors."""
        return self._errors

    @property
    def message(self) -> str:
        """Returns the first message."""
        messages = self._errors.messages
        if messages:
            return messages[0]
        return self.__class__.__name__

    def __str__(self) -> str:
        return self.message


class UsageError(CoordsolveError):
    """Malformed user input (notation, protocol text, flags)."""

    code = "usage_error"
    exit_code = USAGE_EXIT_CODE


# -- game-core ------------------------------------------------------------------------------


class InvalidGame(CoordsolveError):
    code = "invalid_game"


class EmptyComplement(InvalidGame):
    code = "empty_complement"


class SurelyLosingChoice(InvalidGame):
    code = "surely_losing_choice"


class DisjointnessViolation(InvalidGame):
    code = "disjointness_violation"


class StageAlreadyFinal(CoordsolveError):
    code = "stage_already_final"


class ProfileArityMismatch(CoordsolveError):
    code = "profile_arity_mismatch"


class InvalidProfile(CoordsolveError):
    code = "invalid_profile"


class NotationSyntaxError(UsageError):
    """Syntax error in a game notation string; ``position`` is 0-based."""

    code = "notation_syntax_error"

    def __init__(self, error: str, *, position: int, **meta: Any) -> None:
        super().__init__(f"{error} at position {position}", item=position, **meta)
        self.position = position


class NotationArityError(UsageError):
    code = "notation_arity_error"


# -- symmetry / protocols -------------------------------------------------------------------


class UnsupportedPlayerCount(CoordsolveError):
    code = "unsupported_player_count"


class NotAChoiceMatchingGame(CoordsolveError):
    code = "not_a_choice_matching_game"


class FinalStage(CoordsolveError):
    code = "final_stage"


class TableMiss(CoordsolveError):
    code = "table_miss"


class ProtocolSyntaxError(UsageError):
    code = "protocol_syntax_error"


# -- analysis -------------------------------------------------------------------------------


class ChainNotClosed(CoordsolveError):
    code = "chain_not_closed"


class NotSimilarityInvariant(CoordsolveError):
    code = "not_similarity_invariant"


class SingularSystem(CoordsolveError):
    code = "singular_system"


class EvenM(CoordsolveError):
    code = "even_m"


class DomainError(CoordsolveError):
    code = "domain_error"


class NoConvergence(CoordsolveError):
    code = "no_convergence"


class LimitExceeded(CoordsolveError):
    code = "limit_exceeded"


class VerificationFailed(CoordsolveError):
    """A computed value disagrees with its independent formula or oracle."""

    code = "verification_failed"


# -- enumeration ----------------------------------------------------------------------------


class TooLarge(CoordsolveError):
    code = "too_large"


class UnsupportedM(CoordsolveError):
    code = "unsupported_m"


class CensusMismatch(CoordsolveError):
    code = "census_mismatch"
