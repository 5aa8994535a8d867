"""Console interface - where rendered documents and diagnostics are written."""

from __future__ import annotations

from abc import ABC, abstractmethod

from rich.console import Console as RichConsoleType
from rich.table import Table
from rich.text import Text

NOTE_STYLE = "yellow"
ERROR_STYLE = "bold red"


class ConsoleInterface(ABC):
    """Output sink of the renderers.

    ``write`` carries machine-readable output (bare values, CSV, JSON) and must
    not alter it; the other methods are for people.
    """

    @abstractmethod
    def write(self, text: str) -> None:
        """Write text verbatim, without markup or wrapping."""

    @abstractmethod
    def print_table(self, table: Table) -> None: ...

    @abstractmethod
    def print_note(self, note: str) -> None:
        """Print a remark attached to a document."""

    @abstractmethod
    def print_error(self, message: str) -> None: ...


class RichConsole(ConsoleInterface):
    """Rich console implementation; brackets in notes and errors are printed literally."""

    def __init__(self, console: RichConsoleType | None = None):
        self._console = console or RichConsoleType()

    def write(self, text: str) -> None:
        self._console.out(text, highlight=False)

    def print_table(self, table: Table) -> None:
        self._console.print(table)

    def print_note(self, note: str) -> None:
        self._console.print(Text(note, style=NOTE_STYLE))

    def print_error(self, message: str) -> None:
        self._console.print(Text(message, style=ERROR_STYLE))
