"""Uniqueness-tree graph isomorphism testing."""

from .compare import MatchResult, Verdict, canonical_tree_code, match_graphs, profiles_equal
from .graph import (
    Graph,
    GraphFormatError,
    apply_permutation,
    degree_sequence,
    graph_from_edge_list,
    graph_to_edge_list,
    inverse_permutation,
    neighbors,
)
from .unitree import TreeProfile, UniquenessTree, build_all_trees, build_uniqueness_tree, tree_profile

__version__ = "0.1.0"
