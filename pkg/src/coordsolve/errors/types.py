"""Error System - Basic Types.

``ErrorItem`` is one problem found in a game, a stage or a command line. This
module is at the base of the import hierarchy.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class ErrorItem(BaseModel):
    """One problem; unset optional fields are left out of dumps.

    ``field`` is the offending choice label (``b1``), flag (``--trials``) or
    parameter; ``item`` an index into whatever ``field`` names (a winning
    profile, a round, a notation offset).
    """

    message: str
    field: str | None = None
    code: str | None = None
    item: int | None = None
    meta: dict[str, Any] = Field(default_factory=dict)

    def concerns(self, label: str) -> bool:
        return self.field == label

    def line(self) -> str:
        """``[code] message``, followed by the field when the message does not name it."""
        text = self.message if self.code is None else f"[{self.code}] {self.message}"
        if self.field is not None and self.field not in self.message:
            text += f" ({self.field})"
        return text
