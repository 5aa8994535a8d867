"""Symmetry of two-player stages: renamings, equivalence partitions and class keys."""

from .focal import (
    conjugates,
    focal_edges,
    focal_indices,
    focal_points,
    is_choice_matching,
    one_round_solvable,
)
from .group import (
    Renaming,
    brute_force_renamings,
    is_renaming,
    renaming_generators,
    renaming_group,
    verify_renamings,
)
from .partition import (
    CanonicalLabeling,
    EquivPartition,
    StageClassKey,
    canonical_key,
    canonical_labeling,
    chain_key,
    equiv_partition,
    game_key,
    isomorphic,
    similar,
    view_labeling,
)
from .search import Orbits, automorphism_generators, canonical_form
from .structure import ColoredGraph, stage_graph, structure_graph

__all__ = [
    "CanonicalLabeling",
    "ColoredGraph",
    "EquivPartition",
    "Orbits",
    "Renaming",
    "StageClassKey",
    "automorphism_generators",
    "brute_force_renamings",
    "canonical_form",
    "canonical_key",
    "canonical_labeling",
    "chain_key",
    "conjugates",
    "equiv_partition",
    "focal_edges",
    "focal_indices",
    "focal_points",
    "game_key",
    "is_choice_matching",
    "is_renaming",
    "isomorphic",
    "one_round_solvable",
    "renaming_generators",
    "renaming_group",
    "similar",
    "stage_graph",
    "structure_graph",
    "verify_renamings",
    "view_labeling",
]
