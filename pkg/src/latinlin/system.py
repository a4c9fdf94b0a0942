"""Unit-sum linear systems for Latin squares and Sudokus.

Every unit (column, row, block) of a completed board holds the values
1..n once each, so its cells sum to ``n(n+1)/2``.  One equation per unit
gives ``B x = c`` over the flat cell vector ``x``.  The equations are
necessary for a valid completion but do not encode distinctness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import ExactMatrix
from .grid import CellIndex, DomainError, Puzzle, PuzzleSpec, Unit, cell, units_of


@dataclass(frozen=True)
class UnitSystem:
    spec: PuzzleSpec
    matrix: ExactMatrix
    row_labels: tuple[Unit, ...]


def unit_sum(n: int) -> int:
    if n < 1:
        raise DomainError(f"order must be positive, got {n}")
    return n * (n + 1) // 2


def build_system(spec: PuzzleSpec) -> UnitSystem:
    n = spec.n
    s = unit_sum(n)
    units = units_of(spec)
    rows = []
    for u in units:
        row = [0] * (n * n)
        for c in u.members:
            row[c.k - 1] = 1
        rows.append(row)
    matrix = ExactMatrix.from_rows(rows, [s] * len(rows), labels=range(1, n * n + 1))
    return UnitSystem(spec, matrix, tuple(units))


def expected_rank(spec: PuzzleSpec) -> int:
    r = 2 * spec.n - 1
    if spec.is_sudoku:
        r += (spec.l - 1) * (spec.m - 1)
    return r


def pivot_unknown_pattern(spec: PuzzleSpec) -> frozenset[CellIndex]:
    """Cells whose variables are the pivots of the reduced unit system.

    Row 1 and column 1 always; for Sudokus also the top-left corner of
    every block that touches neither row 1 nor column 1.
    """
    n = spec.n
    cells = {cell(1, j, n) for j in range(1, n + 1)}
    cells |= {cell(i, 1, n) for i in range(2, n + 1)}
    if spec.is_sudoku:
        l, m = spec.l, spec.m
        # m bands of l rows, l stacks of m columns
        cells |= {cell(1 + l * band, 1 + m * stack, n)
                  for band in range(1, m) for stack in range(1, l)}
    return frozenset(cells)


def clue_rows(puzzle: Puzzle) -> list[list[int]]:
    size = puzzle.spec.n ** 2
    rows = []
    for c, v in puzzle.clues():
        row = [0] * (size + 1)
        row[c.k - 1] = 1
        row[-1] = v
        rows.append(row)
    return rows


def augment_with_clues(system: UnitSystem, puzzle: Puzzle) -> ExactMatrix:
    """Append one equation ``x_k = value`` per clue, in flat-index order."""
    if puzzle.spec != system.spec:
        raise DomainError(f"puzzle is {puzzle.spec}, system is {system.spec}")
    return system.matrix.stack(clue_rows(puzzle))
