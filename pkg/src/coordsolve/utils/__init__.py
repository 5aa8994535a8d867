from .constants import CENSUS_EDGE_FILTER, CHOICE_LETTERS, GCT_ODD_NOTE, GENERATOR_NAME
from .timing import timed

__all__ = ["CENSUS_EDGE_FILTER", "CHOICE_LETTERS", "GCT_ODD_NOTE", "GENERATOR_NAME", "timed"]
