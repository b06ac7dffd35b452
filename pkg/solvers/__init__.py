"""Exhaustive oracle, linear-time ear selection and the degenerate-case search."""
from .degenerate import EnumerationResult, enumerate_optimal, regular_count, solve_canonical
from .fast import SolverState, base_case_small, solve_extended, solve_simplified, update_top_ears
from .oracle import OptimalSet, enumerate_triangulations, is_unique_optimum, optimal_set

__all__ = [
    "EnumerationResult",
    "OptimalSet",
    "SolverState",
    "base_case_small",
    "enumerate_optimal",
    "enumerate_triangulations",
    "is_unique_optimum",
    "optimal_set",
    "regular_count",
    "solve_canonical",
    "solve_extended",
    "solve_simplified",
    "update_top_ears",
]
