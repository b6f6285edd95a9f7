"""Exact total domination polynomials of graphs."""

from .errors import (
    ConsistencyError, Graph6Error, NotFoundError, NumericFailure, ParameterError, PreconditionError,
    SizeLimitError, TdpError, TheoremViolation, UndefinedError,
)
from .graph import Graph, VertexSet
from .graph6 import decode, encode
from .poly import IntPoly, integer_roots, numeric_roots, summarize_roots
from .engine import (
    CountVector, closed_form, count_all, count_containing, gamma_t, is_essential, is_irrelevant_edge,
    is_td_covered, polynomial, polynomial_vertex_transitive, total_dominating_sets,
)
from .recurrence import RecurrenceEngine, ReductionTrace, compute_via_recurrence
from .symmetry import automorphism_orbits, canonical_form, are_isomorphic
from .generate import generate_connected, generate_regular

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "Graph6Error", "NotFoundError", "NumericFailure", "ParameterError",
    "PreconditionError", "SizeLimitError", "TdpError", "TheoremViolation", "UndefinedError",
    "Graph", "VertexSet", "decode", "encode", "IntPoly", "integer_roots", "numeric_roots",
    "summarize_roots", "CountVector", "closed_form", "count_all", "count_containing", "gamma_t",
    "is_essential", "is_irrelevant_edge", "is_td_covered", "polynomial", "polynomial_vertex_transitive",
    "total_dominating_sets", "RecurrenceEngine", "ReductionTrace", "compute_via_recurrence",
    "automorphism_orbits", "canonical_form", "are_isomorphic", "generate_connected", "generate_regular",
]
