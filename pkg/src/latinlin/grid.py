"""Board geometry for Latin squares and Sudokus.

Cells are addressed by 1-based ``(i, j)`` (row, column) and by the flat
index ``k = (i - 1) * n + j`` obtained by reading the board row by row.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence


class DomainError(ValueError):
    """Raised for out-of-range indices or malformed puzzle shapes."""


class Kind(enum.Enum):
    LATIN = "latin"
    SUDOKU = "sudoku"


class UnitKind(enum.Enum):
    COLUMN = "column"
    ROW = "row"
    BLOCK = "block"


@dataclass(frozen=True)
class PuzzleSpec:
    kind: Kind
    n: int
    l: int = 0
    m: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"order must be a positive integer, got {self.n!r}")
        if self.kind is Kind.SUDOKU:
            if self.l < 1 or self.m < 1 or self.l * self.m != self.n:
                raise DomainError(
                    f"sudoku blocks need l*m = n with l, m >= 1 "
                    f"(got n={self.n}, l={self.l}, m={self.m})")
        elif self.kind is Kind.LATIN:
            if self.l or self.m:
                raise DomainError("latin specs carry no block dimensions")
        else:
            raise DomainError(f"unknown puzzle kind {self.kind!r}")

    @classmethod
    def latin(cls, n: int) -> "PuzzleSpec":
        return cls(Kind.LATIN, n)

    @classmethod
    def sudoku(cls, n: int, l: int, m: int) -> "PuzzleSpec":
        return cls(Kind.SUDOKU, n, l, m)

    @property
    def is_sudoku(self) -> bool:
        return self.kind is Kind.SUDOKU

    def __str__(self):
        if self.is_sudoku:
            return f"sudoku {self.n} {self.l} {self.m}"
        return f"latin {self.n}"


class CellIndex(NamedTuple):
    i: int
    j: int
    k: int

    def __str__(self):
        return f"({self.i},{self.j})"


def cell_to_flat(i: int, j: int, n: int) -> int:
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"cell ({i},{j}) outside a board of order {n}")
    return (i - 1) * n + j


def flat_to_cell(k: int, n: int) -> tuple[int, int]:
    if not 1 <= k <= n * n:
        raise DomainError(f"flat index {k} outside 1..{n * n}")
    j = 1 + (k - 1) % n
    i = (k - j) // n + 1
    return i, j


def cell(i: int, j: int, n: int) -> CellIndex:
    return CellIndex(i, j, cell_to_flat(i, j, n))


@dataclass(frozen=True)
class Unit:
    kind: UnitKind
    index: int
    members: tuple[CellIndex, ...]

    def __str__(self):
        return f"{self.kind.value} {self.index}"


def block_index(spec: PuzzleSpec, i: int, j: int) -> int:
    """1-based number of the block holding cell (i, j), blocks numbered row-major."""
    if not spec.is_sudoku:
        raise DomainError("latin squares have no blocks")
    cell_to_flat(i, j, spec.n)
    # l block columns per band of l rows
    return ((i - 1) // spec.l) * spec.l + (j - 1) // spec.m + 1


def _block_members(spec: PuzzleSpec, k: int) -> tuple[CellIndex, ...]:
    n, l, m = spec.n, spec.l, spec.m
    band = k - k % l
    return tuple(cell(band + di, (k % l) * m + dj, n)
                 for di in range(1, l + 1) for dj in range(1, m + 1))


def units_of(spec: PuzzleSpec) -> list[Unit]:
    """Columns 1..n, then rows 1..n, then (Sudoku only) blocks 1..n."""
    n = spec.n
    units = [Unit(UnitKind.COLUMN, j, tuple(cell(i, j, n) for i in range(1, n + 1)))
             for j in range(1, n + 1)]
    units += [Unit(UnitKind.ROW, i, tuple(cell(i, j, n) for j in range(1, n + 1)))
              for i in range(1, n + 1)]
    if spec.is_sudoku:
        units += [Unit(UnitKind.BLOCK, k + 1, _block_members(spec, k)) for k in range(n)]
    return units


def _check_cells(spec: PuzzleSpec, cells, allow_blank: bool):
    n = spec.n
    if len(cells) != n or any(len(row) != n for row in cells):
        raise DomainError(f"board must be {n}x{n}")
    for r, row in enumerate(cells, 1):
        for c, v in enumerate(row, 1):
            if v is None and allow_blank:
                continue
            if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n:
                raise DomainError(f"cell ({r},{c}) holds {v!r}, expected 1..{n}")


@dataclass(frozen=True)
class Grid:
    spec: PuzzleSpec
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(row) for row in self.cells))
        _check_cells(self.spec, self.cells, allow_blank=False)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cells[i - 1][j - 1]

    def vector(self) -> list[int]:
        """Values in flat-index order."""
        return [v for row in self.cells for v in row]

    def to_puzzle(self) -> "Puzzle":
        return Puzzle(self.spec, self.cells)


@dataclass(frozen=True)
class Puzzle:
    spec: PuzzleSpec
    cells: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(row) for row in self.cells))
        _check_cells(self.spec, self.cells, allow_blank=True)

    @classmethod
    def empty(cls, spec: PuzzleSpec) -> "Puzzle":
        return cls(spec, tuple((None,) * spec.n for _ in range(spec.n)))

    def __getitem__(self, ij: tuple[int, int]) -> Optional[int]:
        i, j = ij
        return self.cells[i - 1][j - 1]

    def blanks(self) -> list[CellIndex]:
        n = self.spec.n
        return [cell(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1)
                if self.cells[i - 1][j - 1] is None]

    def clues(self) -> list[tuple[CellIndex, int]]:
        """Present cells with their values, in flat-index order."""
        n = self.spec.n
        return [(cell(i, j, n), v) for i, row in enumerate(self.cells, 1)
                for j, v in enumerate(row, 1) if v is not None]

    def is_complete(self) -> bool:
        return all(v is not None for row in self.cells for v in row)

    def to_grid(self) -> Grid:
        return Grid(self.spec, self.cells)

    def with_blanks(self, blanks: Sequence[tuple[int, int]]) -> "Puzzle":
        rows = [list(r) for r in self.cells]
        for i, j, *_ in blanks:
            rows[i - 1][j - 1] = None
        return Puzzle(self.spec, rows)


def _duplicated(values) -> bool:
    present = [v for v in values if v is not None]
    return len(present) != len(set(present))


def validate_complete(grid: Grid) -> list[Unit]:
    """Return the units whose values are not all distinct; empty means valid."""
    return [u for u in units_of(grid.spec)
            if len({grid[c.i, c.j] for c in u.members}) != grid.spec.n]


def is_valid(grid: Grid) -> bool:
    return not validate_complete(grid)


def partial_consistent(puzzle: Puzzle) -> bool:
    return not any(_duplicated(puzzle[c.i, c.j] for c in u.members)
                   for u in units_of(puzzle.spec))
