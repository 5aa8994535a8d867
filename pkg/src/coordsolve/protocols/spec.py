"""Protocol specifications and their textual and JSON forms.

Protocol text: ``wm``, ``la``, ``uniform``, ``touched:<p>`` with ``p`` a rational or
decimal in ``[0, 1]``, or ``@path.json`` for a table protocol.

Table documents map a stage class digest to canonical sides and canonical choice
ranks: ``{"<digest>": {"1": {"0": "1/2", "1": "1/2"}, "2": {...}}}``.
"""

from __future__ import annotations

import hashlib
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import orjson
from pydantic import RootModel, ValidationError

from ..errors import ProtocolSyntaxError
from ..types import HistoryView, ProtocolKind

TableEntries = Mapping[str, Mapping[int, Mapping[int, Fraction]]]


class TableDocument(RootModel[dict[str, dict[int, dict[int, str]]]]):
    """JSON shape of a table protocol."""


@dataclass(frozen=True)
class ProtocolTable:
    """Distributions per stage class digest, canonical side and canonical choice rank."""

    entries: TableEntries = field(hash=False)

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(self.dumps()).hexdigest()

    def lookup(self, key: str, side: int) -> Mapping[int, Fraction] | None:
        return self.entries.get(key, {}).get(side)

    def __len__(self) -> int:
        return len(self.entries)

    def to_dict(self) -> dict[str, dict[str, dict[str, str]]]:
        return {
            key: {str(side): {str(rank): str(w) for rank, w in sorted(dist.items())} for side, dist in sorted(sides.items())}
            for key, sides in sorted(self.entries.items())
        }

    def dumps(self) -> bytes:
        return orjson.dumps(self.to_dict(), option=orjson.OPT_SORT_KEYS)

    @classmethod
    def loads(cls, data: str | bytes) -> ProtocolTable:
        try:
            document = TableDocument.model_validate(orjson.loads(data))
        except (orjson.JSONDecodeError, ValidationError) as e:
            msg = f"invalid protocol table: {e}"
            raise ProtocolSyntaxError(msg) from e
        entries: dict[str, dict[int, dict[int, Fraction]]] = {}
        for key, sides in document.root.items():
            entries[key] = {}
            for side, dist in sides.items():
                try:
                    weights = {rank: Fraction(w) for rank, w in dist.items()}
                except (ValueError, ZeroDivisionError) as e:
                    msg = f"invalid probability in class {key[:16]}, side {side}: {e}"
                    raise ProtocolSyntaxError(msg) from e
                if any(w < 0 for w in weights.values()) or sum(weights.values()) != 1:
                    msg = f"class {key[:16]}, side {side}: probabilities must be nonnegative and sum to 1"
                    raise ProtocolSyntaxError(msg)
                entries[key][side] = weights
        return cls(entries)

    @classmethod
    def load(cls, path: Path) -> ProtocolTable:
        if not path.is_file():
            msg = f"protocol table not found: {path}"
            raise ProtocolSyntaxError(msg, field="--protocol")
        return cls.loads(path.read_bytes())


_VIEWS = {
    ProtocolKind.UNIFORM: HistoryView.NONE,
    ProtocolKind.WM: HistoryView.FIRST_USES,
    ProtocolKind.LA: HistoryView.PARTITION,
    ProtocolKind.TOUCHED: HistoryView.PROFILE_SET,
    ProtocolKind.TABLE: HistoryView.PARTITION,
}

# WM reads first uses and TOUCHED reads touched edges; neither is a function of the partition alone.
_SIMILARITY_INVARIANT = {
    ProtocolKind.UNIFORM: True,
    ProtocolKind.WM: False,
    ProtocolKind.LA: True,
    ProtocolKind.TOUCHED: False,
    ProtocolKind.TABLE: True,
}


@dataclass(frozen=True)
class ProtocolSpec:
    """An evaluable structural protocol."""

    kind: ProtocolKind
    p: Fraction | None = None
    table: ProtocolTable | None = None

    @classmethod
    def wm(cls) -> ProtocolSpec:
        return cls(ProtocolKind.WM)

    @classmethod
    def la(cls) -> ProtocolSpec:
        return cls(ProtocolKind.LA)

    @classmethod
    def uniform(cls) -> ProtocolSpec:
        return cls(ProtocolKind.UNIFORM)

    @classmethod
    def touched(cls, p: Fraction | int | str) -> ProtocolSpec:
        value = Fraction(p)
        if not 0 <= value <= 1:
            msg = f"touched-edge weight {value} outside [0, 1]"
            raise ProtocolSyntaxError(msg, field="p")
        return cls(ProtocolKind.TOUCHED, p=value)

    @classmethod
    def from_table(cls, table: ProtocolTable) -> ProtocolSpec:
        return cls(ProtocolKind.TABLE, table=table)

    @property
    def view(self) -> HistoryView:
        return _VIEWS[self.kind]

    @property
    def similarity_invariant(self) -> bool:
        """Whether evaluation factors through the stage class key."""
        return _SIMILARITY_INVARIANT[self.kind]

    @property
    def name(self) -> str:
        if self.kind is ProtocolKind.TOUCHED:
            return f"touched:{self.p}"
        if self.kind is ProtocolKind.TABLE:
            return f"table:{self.table.digest[:12] if self.table else '?'}"
        return str(self.kind)

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.table.digest if self.table else None))

    def __str__(self) -> str:
        return self.name


def parse_protocol(text: str) -> ProtocolSpec:
    """Parse ``wm | la | uniform | touched:p | @table.json``.

    Raises:
        ProtocolSyntaxError: Unknown name, malformed weight or unreadable table.

    """
    cleaned = text.strip()
    if cleaned.startswith("@"):
        return ProtocolSpec.from_table(ProtocolTable.load(Path(cleaned[1:])))
    name, _, argument = cleaned.partition(":")
    name = name.lower()
    if name == "touched":
        if not argument:
            msg = "touched protocol needs a weight, e.g. touched:1/2"
            raise ProtocolSyntaxError(msg, field="--protocol")
        try:
            return ProtocolSpec.touched(Fraction(argument.strip()))
        except (ValueError, ZeroDivisionError) as e:
            msg = f"invalid touched-edge weight {argument!r}"
            raise ProtocolSyntaxError(msg, field="--protocol") from e
    if argument:
        msg = f"protocol {name!r} takes no argument"
        raise ProtocolSyntaxError(msg, field="--protocol")
    try:
        kind = ProtocolKind(name)
    except ValueError as e:
        msg = f"unknown protocol {text!r}; expected wm, la, uniform, touched:p or @table.json"
        raise ProtocolSyntaxError(msg, field="--protocol") from e
    if kind is ProtocolKind.TOUCHED or kind is ProtocolKind.TABLE:
        msg = f"protocol {name!r} needs an argument"
        raise ProtocolSyntaxError(msg, field="--protocol")
    return ProtocolSpec(kind)
