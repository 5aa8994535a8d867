"""Structural protocols: wait-or-move, loop avoidance, uniform play, touched-edge weighting and tables."""

from .distribution import Distribution
from .evaluation import avoided_choices, completion_edge, evaluate, support_profiles, touched_choices, used_choices
from .spec import ProtocolSpec, ProtocolTable, parse_protocol
from .structurality import TwoEdgeResult, check_structurality, two_edge_maximizer
from .table import dump_table, export_table

__all__ = [
    "Distribution",
    "ProtocolSpec",
    "ProtocolTable",
    "TwoEdgeResult",
    "avoided_choices",
    "check_structurality",
    "completion_edge",
    "dump_table",
    "evaluate",
    "export_table",
    "parse_protocol",
    "support_profiles",
    "touched_choices",
    "two_edge_maximizer",
    "used_choices",
]
