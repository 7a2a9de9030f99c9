"""Cycle-assigning and alpha-assigning polynomials of multigraphs."""

from ._core import (
    Assigning,
    BudgetExceeded,
    ContractError,
    Graph,
    Group,
    InputError,
    Polynomial,
    alpha_assigning_polynomial,
    broken_cycle_counts,
    check_admissible,
    chromatic_polynomial,
    count_colorings,
    count_tensions,
    cycle_assigning_polynomial,
    induced,
)

METHODS = ("subgraph", "delcon", "broken", "bond", "decompose")

__all__ = [
    "Assigning",
    "BudgetExceeded",
    "ContractError",
    "Graph",
    "Group",
    "InputError",
    "METHODS",
    "Polynomial",
    "alpha_assigning_polynomial",
    "broken_cycle_counts",
    "check_admissible",
    "chromatic_polynomial",
    "count_colorings",
    "count_tensions",
    "cycle_assigning_polynomial",
    "induced",
]
