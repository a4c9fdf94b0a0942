"""Linear solving with outcome classification, grid generation and
derivation of maximal linearly-solvable puzzles."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import Underdetermined, back_substitute, rref
from .grid import (CellIndex, DomainError, Grid, Puzzle, PuzzleSpec, Unit,
                   cell, flat_to_cell, units_of, validate_complete)
from .rng import Lcg64
from .system import augment_with_clues, build_system, expected_rank, pivot_unknown_pattern


class Outcome(enum.Enum):
    UNIQUE_VALID = "UniqueValid"
    UNIQUE_INVALID = "UniqueInvalid"
    UNDERDETERMINED = "Underdetermined"
    INCONSISTENT = "Inconsistent"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Violation:
    kind: str  # non_integral | out_of_range | duplicate
    cell: Optional[CellIndex] = None
    value: Optional[Fraction] = None
    unit: Optional[Unit] = None

    def __str__(self):
        if self.unit is not None:
            return f"{self.kind}: {self.unit}"
        return f"{self.kind}: {self.cell} = {self.value}"


@dataclass(frozen=True)
class SolveOutcome:
    outcome: Outcome
    rank: int
    unknowns: int
    solution: Optional[Grid] = None
    values: Optional[tuple[Fraction, ...]] = None
    free_cells: tuple[CellIndex, ...] = ()
    violations: tuple[Violation, ...] = ()


def second_check(spec: PuzzleSpec, values) -> list[Violation]:
    """Integrality, then range, then unit distinctness; every failure is kept."""
    n = spec.n
    cells = [cell(*flat_to_cell(k, n), n) for k in range(1, n * n + 1)]
    found = [Violation("non_integral", c, v) for c, v in zip(cells, values)
             if Fraction(v).denominator != 1]
    found += [Violation("out_of_range", c, v) for c, v in zip(cells, values)
              if not 1 <= v <= n]
    for u in units_of(spec):
        seen = [values[c.k - 1] for c in u.members]
        if len(set(seen)) != len(seen):
            found.append(Violation("duplicate", unit=u))
    return found


def linear_solve(puzzle: Puzzle) -> SolveOutcome:
    spec = puzzle.spec
    n = spec.n
    unknowns = len(puzzle.blanks())
    report = rref(augment_with_clues(build_system(spec), puzzle))
    if not report.consistent:
        return SolveOutcome(Outcome.INCONSISTENT, report.rank, unknowns)
    x = back_substitute(report)
    if isinstance(x, Underdetermined):
        labels = report.reduced.col_labels
        free = tuple(cell(*flat_to_cell(labels[c], n), n) for c in x.free_cols)
        return SolveOutcome(Outcome.UNDERDETERMINED, report.rank, unknowns, free_cells=free)
    violations = second_check(spec, x)
    if violations:
        return SolveOutcome(Outcome.UNIQUE_INVALID, report.rank, unknowns,
                            values=tuple(x), violations=tuple(violations))
    grid = Grid(spec, [[int(v) for v in x[r * n:(r + 1) * n]] for r in range(n)])
    return SolveOutcome(Outcome.UNIQUE_VALID, report.rank, unknowns,
                        solution=grid, values=tuple(x))


def base_value(spec: PuzzleSpec, i: int, j: int) -> int:
    n = spec.n
    if spec.is_sudoku:
        l, m = spec.l, spec.m
        return (m * ((i - 1) % l) + (i - 1) // l + (j - 1)) % n + 1
    return (i + j - 2) % n + 1


def _grouped_order(rng: Lcg64, groups: int, size: int) -> list[int]:
    """Permute whole groups of ``size`` lines, then the lines inside each group."""
    order = []
    for g in rng.permutation(groups):
        order += [g * size + t for t in rng.permutation(size)]
    return order


def generate_complete(spec: PuzzleSpec, seed: int) -> Grid:
    """A valid complete grid, deterministic per seed.

    Seed 0 returns the base pattern untouched.  Other seeds draw, in this
    order, a symbol permutation, a row order and a column order.  Sudoku row
    orders keep bands of ``l`` rows together (bands shuffled, then rows in
    each band) and column orders keep stacks of ``m`` columns together.
    """
    n = spec.n
    base = [[base_value(spec, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    if seed == 0:
        return Grid(spec, base)
    rng = Lcg64(seed)
    symbols = rng.permutation(n)
    if spec.is_sudoku:
        rows = _grouped_order(rng, spec.m, spec.l)
        cols = _grouped_order(rng, spec.l, spec.m)
    else:
        rows = rng.permutation(n)
        cols = rng.permutation(n)
    return Grid(spec, [[symbols[base[r][c] - 1] + 1 for c in cols] for r in rows])


def derive_max_linear_puzzle(grid: Grid) -> Puzzle:
    """Blank exactly the pivot cells of the reduced unit system."""
    bad = validate_complete(grid)
    if bad:
        raise DomainError("grid is not valid: " + ", ".join(map(str, bad)))
    return grid.to_puzzle().with_blanks(sorted(pivot_unknown_pattern(grid.spec)))


@dataclass(frozen=True)
class RankCondition:
    unknowns: int
    bound: int
    within_bound: bool


def classify_rank_condition(puzzle: Puzzle) -> RankCondition:
    """Compare the blank count to the rank of the unit system.

    Staying within the bound is necessary for a unique linear solve, not
    sufficient.
    """
    k = len(puzzle.blanks())
    bound = expected_rank(puzzle.spec)
    return RankCondition(k, bound, k <= bound)

