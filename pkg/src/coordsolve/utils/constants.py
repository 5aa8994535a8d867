"""Constants used across coordsolve."""

import string

# Default choice labels: a1, b1, ... for player 1; a2, b2, ... for player 2
CHOICE_LETTERS = string.ascii_lowercase

# Name of the bit generator recorded in simulation reports
GENERATOR_NAME = "PCG64"

# Printed with verified summary tables
GCT_ODD_NOTE = (
    "note: GCT for odd m = 2k+1 is ceil(m/2) = k+1 (LA coordinates within ceil(m/2) rounds); "
    "a published 'k' entry for this cell is a typo"
)

# Reported with the 5-choice census: any game with more than 8 winning pairs
# has a wait-or-move bound of at most 3 - 2*(9/25)
CENSUS_EDGE_FILTER = 8
