"""Census of small two-player games: enumeration up to renaming and classification."""

from .catalogue import FIVE_CHOICE, FIVE_CHOICE_HARD, FIVE_CHOICE_SPECIALS, G_STAR, THREE_CHOICE, THREE_CHOICE_HARD
from .census import (
    CensusEntry,
    CensusReport,
    EctEstimate,
    census_report,
    classify,
    enumerate_m_choice,
    verify_census,
)
from .components import Component, component_notation, components

__all__ = [
    "FIVE_CHOICE",
    "FIVE_CHOICE_HARD",
    "FIVE_CHOICE_SPECIALS",
    "G_STAR",
    "THREE_CHOICE",
    "THREE_CHOICE_HARD",
    "CensusEntry",
    "CensusReport",
    "Component",
    "EctEstimate",
    "census_report",
    "classify",
    "component_notation",
    "components",
    "enumerate_m_choice",
    "verify_census",
]
