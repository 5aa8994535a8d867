"""Shared enums."""

from .enums import CensusClass, HistoryView, OutputFormat, ProtocolKind, TableKind

__all__ = ["CensusClass", "HistoryView", "OutputFormat", "ProtocolKind", "TableKind"]
