"""Rooted cycle bases of undirected graphs.

A rooted cycle basis is a cycle basis in which every cycle passes through one
designated root edge.  The package tests existence, builds a basis from an
open ear decomposition, finds a minimum-weight one with a greedy
disjoint-paths algorithm, and searches for fundamental rooted bases.
"""

from .errors import (CapExceeded, GraphError, InternalEarViolation, InvalidEmbedding, NoCycle, NoPair,
                     NoRootedBasis, NotASpanningTree, NotBiconnected, RootedBasisError, RootNotInTree,
                     SearchLimitExceeded, WrongDegree)
from .graph import (Cycle, CycleBasis, Graph, RootedGraph, ValidationReport, XorBasis, build_graph,
                    cycle_space_dimension, gf2_rank, is_cycle, root_component_dimension,
                    validate_rooted_basis)
from .connectivity import Ear, EarDecomposition, Path, disjoint_paths_to_root, is_biconnected, open_ear_decomposition, two_core
from .rooted import Existence, build_rooted_cycle_basis, has_rooted_cycle_basis
from .tiebreak import DeterministicTieBreak, NaiveTieBreak, RandomizedTieBreak, TieBreak, make_tiebreak
from .suurballe import (DisjointPathPair, RootedCycleTable, all_edges_shortest_rooted_cycle_lengths,
                        shortest_disjoint_path_pair, shortest_rooted_cycle_through_edge)
from .minbasis import GreedyRun, greedy_rooted_basis, min_weight_rooted_basis
from .fundamental import (DualGraph, PlaneEmbedding, dual_graph, find_fundamental_rooted_tree,
                          find_tree_partition, forced_edge_gadget, fundamental_basis, has_rooted_hamiltonian,
                          is_fundamental_rooted)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "Cycle", "CycleBasis", "DeterministicTieBreak", "DisjointPathPair", "DualGraph",
    "Ear", "EarDecomposition", "Existence", "Graph", "GraphError", "GreedyRun",
    "InternalEarViolation", "InvalidEmbedding", "NaiveTieBreak", "NoCycle", "NoPair",
    "NoRootedBasis", "NotASpanningTree", "NotBiconnected", "Path", "PlaneEmbedding",
    "RandomizedTieBreak", "RootNotInTree", "RootedBasisError", "RootedCycleTable", "RootedGraph",
    "SearchLimitExceeded", "TieBreak", "ValidationReport", "WrongDegree", "XorBasis",
    "all_edges_shortest_rooted_cycle_lengths", "build_graph", "build_rooted_cycle_basis",
    "cycle_space_dimension", "disjoint_paths_to_root", "dual_graph", "find_fundamental_rooted_tree",
    "find_tree_partition", "forced_edge_gadget", "fundamental_basis", "gf2_rank",
    "greedy_rooted_basis", "has_rooted_cycle_basis", "has_rooted_hamiltonian", "is_biconnected",
    "is_cycle", "is_fundamental_rooted", "make_tiebreak", "min_weight_rooted_basis",
    "open_ear_decomposition", "root_component_dimension", "shortest_disjoint_path_pair",
    "shortest_rooted_cycle_through_edge", "two_core", "validate_rooted_basis",
]
