"""Exact solvers for open packings and related invariants on small graphs."""

from .graph_core import Graph, GraphError, ParseError, from_graph6, to_graph6
from .solvers import (
    DomainError,
    SolverResult,
    max_independent_set,
    max_matching,
    max_open_packing,
    max_two_packing,
    total_domination_number,
)
from .tree_ops import generate_class_O, recognize_tree

__all__ = [
    "DomainError",
    "Graph",
    "GraphError",
    "ParseError",
    "SolverResult",
    "from_graph6",
    "generate_class_O",
    "max_independent_set",
    "max_matching",
    "max_open_packing",
    "max_two_packing",
    "recognize_tree",
    "to_graph6",
    "total_domination_number",
]
