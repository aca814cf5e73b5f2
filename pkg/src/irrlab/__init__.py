"""Locally irregular arc colorings of digraphs.

Library plus CLI for decomposing digraphs into subdigraphs whose adjacent
vertices are distinguished by outdegree-indegree pairs (weak mode) or by
balanced degrees (strong mode), with an exact brute-force oracle, constructive
decompositions for the structured digraph classes, a finite case-analysis
engine for orientations of cacti, and exhaustive conjecture sweeps.
"""

from .digraph import (
    Arc,
    DegreeProfile,
    Digraph,
    PartitionedSkeleton,
    PendantStructure,
    SimpleGraph,
    StructureFlags,
    build_digraph,
    classify,
    degree_profile,
    enumerate_family,
    pendant_structure,
    proper_color_skeleton,
    reverse,
    skeleton,
)
from .irregularity import (
    ArcColoring,
    Certificate,
    Mode,
    Violation,
    is_irregular,
    is_irregular_graph,
    verify_coloring,
)
from .solver import SolveResult, exact_index, exact_index_naive, extend_partial

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcColoring",
    "Certificate",
    "DegreeProfile",
    "Digraph",
    "Mode",
    "PartitionedSkeleton",
    "PendantStructure",
    "SimpleGraph",
    "SolveResult",
    "StructureFlags",
    "Violation",
    "build_digraph",
    "classify",
    "degree_profile",
    "enumerate_family",
    "exact_index",
    "exact_index_naive",
    "extend_partial",
    "is_irregular",
    "is_irregular_graph",
    "pendant_structure",
    "proper_color_skeleton",
    "reverse",
    "skeleton",
    "verify_coloring",
]
