"""Facial colourings of plane graphs.

Plane graphs are combinatorial maps (darts with clockwise rotations). On
top of them the package computes l-facial adjacency, exact and list
colourings, contract-and-lift reductions, the structural properties of
minimal counterexamples, and an exact discharging ledger.
"""

from .coloring import (
    Coloring,
    SearchBudgetExceeded,
    degree_choosable_oracle,
    exact_chromatic,
    facial_k_coloring,
    greedy_color,
    is_gallai_tree,
    list_color_brute,
    verify,
)
from .discharging import apply_rules, audit, discharge, initial_charges
from .embedding import EmbeddingError, Face, PlaneGraph, build_from_rotation
from .facial import facial_adjacency_graph, facial_degree, l_facial_neighbors, lemma1_bound
from .generators import named, random_plane_graph, tight_example
from .io import FormatError, read_planar_code, read_rotation_text, write_planar_code, write_rotation_text
from .reducibility import ReductionScript, contract, run_reduction
from .structure import (
    boundary_path_stats,
    classify,
    corollary_witnesses,
    minimality_witnesses,
    revalidate,
    separating_cycles,
)

__version__ = "0.1.0"

__all__ = [
    "Coloring", "EmbeddingError", "Face", "FormatError", "PlaneGraph", "ReductionScript",
    "SearchBudgetExceeded", "apply_rules", "audit", "boundary_path_stats", "build_from_rotation",
    "classify", "contract", "corollary_witnesses", "degree_choosable_oracle", "discharge",
    "exact_chromatic", "facial_adjacency_graph", "facial_degree", "facial_k_coloring",
    "greedy_color", "initial_charges", "is_gallai_tree", "l_facial_neighbors", "lemma1_bound",
    "list_color_brute", "minimality_witnesses", "named", "random_plane_graph",
    "read_planar_code", "read_rotation_text", "revalidate", "run_reduction",
    "separating_cycles", "tight_example", "verify", "write_planar_code", "write_rotation_text",
]
