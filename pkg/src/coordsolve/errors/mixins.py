"""Error System - Normalization Mixins.

Turns the things that go wrong while reading input (strings, mappings from JSON
documents, pydantic ``ValidationError``, other coordsolve exceptions) into
``Errors``. The container is imported lazily to keep this module below it.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import TYPE_CHECKING, Any

from pydantic import ValidationError

from .types import ErrorItem

if TYPE_CHECKING:
    from .container import Errors

VALIDATION_CODE = "validation_error"
_ITEM_KEYS = frozenset({"message", "msg", "field", "code", "item", "meta"})


class NormalizeErrorsMixin:
    """Adds ``normalize`` to the error container."""

    @classmethod
    def normalize(cls, error: Any, code: str | None = None) -> Errors:
        """Convert any error value to ``Errors``; ``code`` fills in items that have none.

        Examples:
            >>> Errors.normalize("unknown protocol 'fast'", code="protocol_syntax_error")
            >>> Errors.normalize({"message": "bad row", "field": "a1"})

        """
        from .container import Errors

        match error:
            case Errors():
                return error
            case ErrorItem():
                return Errors(root=[error])
            case ValidationError():
                return cls._from_validation_error(error)
            case Exception() if isinstance(getattr(error, "errors", None), Errors):
                return error.errors  # type: ignore[attr-defined]
            case Mapping():
                return Errors(root=[cls._item_from_mapping(error, code)])
            case str():
                return Errors(root=[ErrorItem(message=error, code=code)])
            case Sequence():
                return Errors(root=[e for part in error for e in cls.normalize(part, code=code)])
            case _:
                return Errors(root=[ErrorItem(message=str(error), code=code)])

    @classmethod
    def _from_validation_error(cls, exc: ValidationError) -> Errors:
        """One item per failed field; ``field`` is the dotted location, e.g. ``e1`` or ``analysis.seed``."""
        from .container import Errors

        items = [
            ErrorItem(
                message=err["msg"],
                field=".".join(str(part) for part in err.get("loc", ())) or None,
                code=VALIDATION_CODE,
                meta={"type": err.get("type", VALIDATION_CODE)},
            )
            for err in exc.errors()
            if err.get("msg")
        ]
        return Errors(root=items or [ErrorItem(message=str(exc), code=VALIDATION_CODE)])

    @staticmethod
    def _item_from_mapping(error: Mapping[str, Any], code: str | None) -> ErrorItem:
        """Read an error object from a JSON document; unknown keys become metadata."""
        meta = error.get("meta")
        if not isinstance(meta, dict):
            meta = {k: v for k, v in error.items() if k not in _ITEM_KEYS}
        return ErrorItem(
            message=error.get("message") or error.get("msg") or str(dict(error)),
            field=error.get("field"),
            code=error.get("code", code),
            item=error.get("item"),
            meta=meta,
        )
