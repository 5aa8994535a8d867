# pyright: reportImportCycles=false

"""Error System - Container.

``Errors`` collects the problems of one validation run or one failure. An empty
container is a clean validation report.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from typing import Any

from pydantic import RootModel

from .mixins import NormalizeErrorsMixin
from .types import ErrorItem


class Errors(NormalizeErrorsMixin, RootModel[list[ErrorItem]]):
    """Ordered problems, in the order they were found."""

    root: list[ErrorItem]

    @classmethod
    def empty(cls) -> Errors:
        return cls(root=[])

    @property
    def errors(self) -> list[ErrorItem]:
        return self.root

    @property
    def ok(self) -> bool:
        """True when nothing was reported."""
        return not self.root

    def add(
        self,
        message: str | ErrorItem,
        *,
        field: str | None = None,
        code: str | None = None,
        item: int | None = None,
        **meta: Any,
    ) -> None:
        if isinstance(message, ErrorItem):
            self.root.append(message)
        else:
            self.root.append(ErrorItem(message=message, field=field, code=code, item=item, meta=meta))

    def extend(self, items: Iterable[str | ErrorItem]) -> None:
        for it in items:
            self.add(it)

    def __bool__(self) -> bool:
        return bool(self.root)

    def __len__(self) -> int:
        return len(self.root)

    def __iter__(self) -> Iterator[ErrorItem]:  # pyright: ignore[reportIncompatibleMethodOverride]
        yield from self.root

    def __add__(self, other: Errors) -> Errors:
        return Errors(root=self.root + other.root)

    @property
    def messages(self) -> list[str]:
        return [e.message for e in self.root]

    @property
    def codes(self) -> list[str]:
        """Codes in the order found; items without a code are skipped."""
        return [e.code for e in self.root if e.code is not None]

    def about(self, label: str) -> Errors:
        """Problems reported against one choice label or flag."""
        return Errors(root=[e for e in self.root if e.concerns(label)])

    def with_code(self, code: str) -> Errors:
        return Errors(root=[e for e in self.root if e.code == code])

    def tally(self) -> dict[str, int]:
        """Number of problems per code, most frequent first."""
        return dict(Counter(self.codes).most_common())

    def summary(self) -> str:
        """One line for logs, e.g. ``2 problems (surely_losing_choice x2)``."""
        if self.ok:
            return "no problems"
        counts = ", ".join(f"{code} x{n}" for code, n in self.tally().items())
        noun = "problem" if len(self) == 1 else "problems"
        return f"{len(self)} {noun} ({counts})" if counts else f"{len(self)} {noun}"

    def lines(self) -> list[str]:
        return [e.line() for e in self.root]

    def to_dict(self) -> dict[str, Any]:
        """``{"valid": bool, "problems": [...]}`` with unset fields left out."""
        return {
            "valid": self.ok,
            "problems": [e.model_dump(exclude_unset=True, exclude_none=True) for e in self.root],
        }
