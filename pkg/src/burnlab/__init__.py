"""Exact r-burning numbers, closed forms for graph families, and percolation bounds."""

from .graph import Graph, GraphError, ParseError, SizeLimitError, DisconnectedGraphError
from .process import BurnSequence, BurnTrace, simulate, rd, necessity_check
from .solver import SolveResult, burning_number, source_number, burning_1, lower_bound, solve
from .percolation import min_percolating, percolate, sandwich_check
from .specs import FamilySpec, parse_spec, generate
from .families import closed_form, construct_sequence, product_bounds, wheel_gap_instance

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "ParseError", "SizeLimitError", "DisconnectedGraphError",
    "BurnSequence", "BurnTrace", "simulate", "rd", "necessity_check",
    "SolveResult", "burning_number", "source_number", "burning_1", "lower_bound", "solve",
    "min_percolating", "percolate", "sandwich_check",
    "FamilySpec", "parse_spec", "generate",
    "closed_form", "construct_sequence", "product_bounds", "wheel_gap_instance",
]
