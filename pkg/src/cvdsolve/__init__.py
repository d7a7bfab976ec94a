"""Exact branch-and-reduce solver for Cluster Vertex Deletion."""

from .analyzer import branching_number, final_bound, top_cases
from .graph import Graph, parse_graph
from .oracle import oracle_min_cvd
from .solver import solve_decision, solve_min, verify

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "parse_graph",
    "solve_decision",
    "solve_min",
    "verify",
    "oracle_min_cvd",
    "branching_number",
    "top_cases",
    "final_bound",
]
