"""Latin squares and Sudokus as exact unit-sum linear systems."""

from .engine import (Outcome, RankCondition, SolveOutcome, Violation, classify_rank_condition,
                     derive_max_linear_puzzle, generate_complete, linear_solve)
from .exact import (ContractError, ExactMatrix, RrefReport, Underdetermined, back_substitute,
                    rank, residual, rref)
from .grid import (CellIndex, DomainError, Grid, Kind, Puzzle, PuzzleSpec, Unit, UnitKind,
                   cell_to_flat, flat_to_cell, partial_consistent, units_of, validate_complete)
from .oracle import OracleResult, agrees_with_linear, count_completions
from .system import (UnitSystem, augment_with_clues, build_system, expected_rank,
                     pivot_unknown_pattern, unit_sum)

__version__ = "0.1.0"

__all__ = [
    "Outcome", "RankCondition", "SolveOutcome", "Violation", "classify_rank_condition",
    "derive_max_linear_puzzle", "generate_complete", "linear_solve",
    "ContractError", "ExactMatrix", "RrefReport", "Underdetermined", "back_substitute",
    "rank", "residual", "rref",
    "CellIndex", "DomainError", "Grid", "Kind", "Puzzle", "PuzzleSpec", "Unit", "UnitKind",
    "cell_to_flat", "flat_to_cell", "partial_consistent", "units_of", "validate_complete",
    "OracleResult", "agrees_with_linear", "count_completions",
    "UnitSystem", "augment_with_clues", "build_system", "expected_rank",
    "pivot_unknown_pattern", "unit_sum",
]
