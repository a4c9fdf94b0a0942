"""Brute-force completion counting, independent of the linear model.

Plain backtracking: blanks are filled in flat-index order, candidates are
tried in ascending order, and a candidate is rejected as soon as it repeats
a value already present in one of its units.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .engine import Outcome, linear_solve
from .grid import Grid, Puzzle, partial_consistent, units_of

DEFAULT_RETAIN = 2


@dataclass(frozen=True)
class OracleResult:
    count: int
    capped: bool
    solutions: tuple[Grid, ...] = ()


def count_completions(puzzle: Puzzle, cap: int = 1_000_000,
                      retain: int = DEFAULT_RETAIN) -> OracleResult:
    """Count valid completions, stopping once ``cap`` have been found.

    ``capped`` is set when the search stopped at the cap, so the true
    count may be larger.  The first ``retain`` completions are kept.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    if not partial_consistent(puzzle):
        return OracleResult(0, False)
    spec = puzzle.spec
    n = spec.n
    units = units_of(spec)
    # per-cell list of unit positions, per-unit bitmask of used values
    unit_ids = [[] for _ in range(n * n)]
    for u_id, u in enumerate(units):
        for c in u.members:
            unit_ids[c.k - 1].append(u_id)
    used = [0] * len(units)
    board = [v for row in puzzle.cells for v in row]
    for k, v in enumerate(board):
        if v is not None:
            for u_id in unit_ids[k]:
                used[u_id] |= 1 << v
    blanks = [k for k, v in enumerate(board) if v is None]

    count = 0
    solutions = []

    def search(pos: int) -> bool:
        nonlocal count
        if pos == len(blanks):
            count += 1
            if len(solutions) < retain:
                solutions.append(Grid(spec, [board[r * n:(r + 1) * n] for r in range(n)]))
            return count >= cap
        k = blanks[pos]
        ids = unit_ids[k]
        for v in range(1, n + 1):
            bit = 1 << v
            if any(used[u] & bit for u in ids):
                continue
            board[k] = v
            for u in ids:
                used[u] |= bit
            stop = search(pos + 1)
            for u in ids:
                used[u] &= ~bit
            board[k] = None
            if stop:
                return True
        return False

    capped = search(0)
    return OracleResult(count, capped, tuple(solutions))


@dataclass(frozen=True)
class Agreement:
    linear: Outcome
    count: int
    capped: bool
    agree: bool
    note: str
    solutions: tuple[Grid, ...] = field(default=(), repr=False)
    linear_solution: Optional[Grid] = field(default=None, repr=False)


def agrees_with_linear(puzzle: Puzzle, cap: int = 1000) -> Agreement:
    """Cross-check the linear solver against the oracle.

    A unique valid linear solution must be the oracle's only completion; an
    inconsistent system must have none.  Underdetermined and unique-invalid
    outcomes allow any count and are recorded as they are.  ``cap`` is raised
    to at least 2 so a single completion can be told apart from several.
    """
    lin = linear_solve(puzzle)
    orc = count_completions(puzzle, cap=max(cap, 2))
    if lin.outcome is Outcome.UNIQUE_VALID:
        agree = orc.count == 1 and orc.solutions[0] == lin.solution
        note = "unique on both sides" if agree else "linear unique but oracle disagrees"
    elif lin.outcome is Outcome.INCONSISTENT:
        agree = orc.count == 0
        note = ("no completion on both sides" if agree
                else "linear contradiction but oracle completes")
    else:
        agree = True
        note = f"{lin.outcome} permits any count"
    return Agreement(lin.outcome, orc.count, orc.capped, agree, note,
                     orc.solutions, lin.solution)
