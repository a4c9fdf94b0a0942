"""Exit criteria.  Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""

import itertools
import random
import subprocess
import sys
import time

import pytest

from latinlin import (Outcome, PuzzleSpec, build_system, count_completions,
                      classify_rank_condition, derive_max_linear_puzzle, expected_rank,
                      generate_complete, linear_solve, rank, residual, validate_complete)
from latinlin.puzzlefile import format_puzzle

from boards import (SOLUTION_VECTOR, latin_max_puzzle, sudoku_max_puzzle, two_solution_latin,
                    two_solution_sudoku)

ROUND_TRIP_SPECS = [PuzzleSpec.latin(n) for n in range(3, 10)] + [
    PuzzleSpec.sudoku(4, 2, 2), PuzzleSpec.sudoku(6, 2, 3), PuzzleSpec.sudoku(6, 3, 2),
    PuzzleSpec.sudoku(9, 3, 3)]

DESK_SPECS = [PuzzleSpec.latin(n) for n in range(1, 10)] + [
    PuzzleSpec.sudoku(4, 2, 2), PuzzleSpec.sudoku(6, 2, 3), PuzzleSpec.sudoku(6, 3, 2),
    PuzzleSpec.sudoku(8, 2, 4), PuzzleSpec.sudoku(8, 4, 2), PuzzleSpec.sudoku(9, 3, 3)]


@pytest.mark.criterion(1, "rank table for n = 4, 6, 8, 9 (< 1 s)")
def test_rank_table():
    table = {(4, 2, 2): 8, (6, 2, 3): 13, (6, 3, 2): 13, (8, 2, 4): 18, (8, 4, 2): 18,
             (9, 3, 3): 21}
    start = time.perf_counter()
    got = {nlm: rank(build_system(PuzzleSpec.sudoku(*nlm)).matrix) for nlm in table}
    elapsed = time.perf_counter() - start
    assert got == table
    assert elapsed < 1.0


@pytest.mark.criterion(2, "latin rank 2n-1 for n = 2..12")
def test_latin_rank_law():
    for n in range(2, 13):
        assert rank(build_system(PuzzleSpec.latin(n)).matrix) == 2 * n - 1


@pytest.mark.criterion(3, "sudoku rank 2n-1+(l-1)(m-1) for n <= 12, l, m >= 2 (< 10 s)")
def test_sudoku_rank_law():
    start = time.perf_counter()
    checked = 0
    for n in range(4, 13):
        for l in range(2, n):
            if n % l == 0 and n // l >= 2:
                m = n // l
                assert rank(build_system(PuzzleSpec.sudoku(n, l, m)).matrix) == \
                    2 * n - 1 + (l - 1) * (m - 1)
                checked += 1
    assert checked == 12
    assert time.perf_counter() - start < 10.0


@pytest.mark.criterion(4, "worked latin and sudoku solves give the exact solution vector")
def test_worked_solves():
    for puzzle in (latin_max_puzzle(), sudoku_max_puzzle()):
        result = linear_solve(puzzle)
        assert result.outcome is Outcome.UNIQUE_VALID
        assert list(result.values) == SOLUTION_VECTOR
        assert all(v.denominator == 1 for v in result.values)


@pytest.mark.criterion(5, "pivot-pattern round trip, 50 grids per spec (< 60 s)")
def test_pivot_pattern_round_trip():
    start = time.perf_counter()
    for spec in ROUND_TRIP_SPECS:
        for seed in range(1, 51):
            grid = generate_complete(spec, seed)
            puzzle = derive_max_linear_puzzle(grid)
            assert len(puzzle.blanks()) == expected_rank(spec)
            result = linear_solve(puzzle)
            assert result.outcome is Outcome.UNIQUE_VALID, (spec, seed)
            assert result.solution == grid
            if spec.n <= 6:
                oracle = count_completions(puzzle, cap=2)
                assert oracle.count == 1 and oracle.solutions[0] == grid
    assert time.perf_counter() - start < 60.0


@pytest.mark.criterion(6, "100 valid grids per desk-scale spec have zero residual")
def test_necessity():
    for spec in DESK_SPECS:
        mat = build_system(spec).matrix
        for seed in range(100):
            grid = generate_complete(spec, seed)
            assert validate_complete(grid) == []
            assert all(r == 0 for r in residual(mat, grid.vector()))


@pytest.mark.criterion(7, "4 unknowns within the bound, underdetermined, 2 completions")
@pytest.mark.parametrize("make", [two_solution_sudoku, two_solution_latin])
def test_insufficiency(make):
    puzzle = make()
    cond = classify_rank_condition(puzzle)
    assert cond.unknowns == 4 and cond.within_bound
    assert linear_solve(puzzle).outcome is Outcome.UNDERDETERMINED
    oracle = count_completions(puzzle, cap=10)
    assert oracle.count == 2 and not oracle.capped


@pytest.mark.criterion(8, "any 3 unknowns in a latin square solve uniquely")
def test_three_unknowns():
    rng = random.Random(2024)
    for n in (3, 4, 5):
        spec = PuzzleSpec.latin(n)
        cells = list(itertools.product(range(1, n + 1), repeat=2))
        for seed in range(1, 21):
            grid = generate_complete(spec, seed)
            for _ in range(50):
                puzzle = grid.to_puzzle().with_blanks(rng.sample(cells, 3))
                result = linear_solve(puzzle)
                assert result.outcome is Outcome.UNIQUE_VALID
                oracle = count_completions(puzzle, cap=2)
                assert oracle.count == 1 and oracle.solutions[0] == result.solution == grid


@pytest.mark.criterion(9, "row n+1 minus columns plus rows n+2..2n is the zero row")
def test_dependency_identity():
    for n in range(2, 10):
        rows = build_system(PuzzleSpec.latin(n)).matrix.entries
        width = n * n + 1
        combo = [rows[n][q] - sum(rows[i][q] for i in range(n))
                 + sum(rows[i][q] for i in range(n + 1, 2 * n)) for q in range(width)]
        assert combo == [0] * width


@pytest.mark.criterion(10, "CLI output is byte-identical across runs")
def test_determinism(tmp_path):
    puzzle = tmp_path / "p.txt"
    puzzle.write_text(format_puzzle(derive_max_linear_puzzle(
        generate_complete(PuzzleSpec.sudoku(6, 2, 3), 9))))
    two = tmp_path / "two.txt"
    two.write_text(format_puzzle(two_solution_sudoku()))
    commands = [
        ["generate", "--kind", "sudoku", "--n", "9", "--l", "3", "--m", "3", "--seed", "123"],
        ["generate", "--kind", "latin", "--n", "7", "--seed", "5", "--max-linear"],
        ["rank", "--table", "--max-n", "12"],
        ["rank", "--kind", "sudoku", "--n", "6", "--l", "3", "--m", "2",
         "--dump-rref", str(tmp_path / "dump.txt")],
        ["solve", "--json", str(puzzle)],
        ["solve", "--json", str(two)],
        ["count", str(two)],
    ]
    for argv in commands:
        runs = [subprocess.run([sys.executable, "-m", "latinlin", *argv], capture_output=True)
                for _ in range(2)]
        assert runs[0].stdout == runs[1].stdout and runs[0].stdout
        assert runs[0].returncode == runs[1].returncode
