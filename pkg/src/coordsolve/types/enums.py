"""Enums shared across coordsolve."""

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        """Backport of ``enum.StrEnum`` from Python 3.11."""

        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()


class ProtocolKind(StrEnum):
    """Built-in protocol families."""

    WM = "wm"
    LA = "la"
    UNIFORM = "uniform"
    TOUCHED = "touched"
    TABLE = "table"


class HistoryView(StrEnum):
    """Part of a stage's history a protocol reads.

    The analysis chain lumps stages whose views are isomorphic.
    """

    NONE = "none"
    FIRST_USES = "first-uses"
    PROFILE_SET = "profile-set"
    PARTITION = "partition"


class OutputFormat(StrEnum):
    """Rendering formats of the CLI."""

    TEXT = "text"
    CSV = "csv"
    JSON = "json"


class TableKind(StrEnum):
    """Tables reproduced by ``coordsolve table``."""

    SUMMARY = "summary"
    BOUNDS = "bounds"
    WM_VS_LA = "wm-vs-la"


class CensusClass(StrEnum):
    """Classification of a census game."""

    SOLVABLE = "one-round"
    FOCAL = "focal"
    HARD = "hard"
