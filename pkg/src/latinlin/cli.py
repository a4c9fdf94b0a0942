"""Command-line front end.

Exit codes: 0 success / unique valid solve, 2 usage or parse error,
3 underdetermined, 4 inconsistent, 5 unique but invalid (also used by
``verify`` for an invalid grid).
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import (Outcome, derive_max_linear_puzzle, generate_complete,
                     linear_solve)
from .exact import format_rational, rank, rref, residual
from .grid import DomainError, Kind, PuzzleSpec, validate_complete
from .oracle import agrees_with_linear
from .puzzlefile import PuzzleFormatError, format_body, format_puzzle, read_puzzle
from .system import build_system, expected_rank

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CODES = {
    Outcome.UNIQUE_VALID: 0,
    Outcome.UNDERDETERMINED: 3,
    Outcome.INCONSISTENT: 4,
    Outcome.UNIQUE_INVALID: 5,
}


class UsageError(Exception):
    pass


def spec_from_args(args) -> PuzzleSpec:
    if args.kind is None or args.n is None:
        raise UsageError("--kind and --n are required")
    if args.kind == Kind.LATIN.value:
        if args.l is not None or args.m is not None:
            raise UsageError("--l/--m only apply to sudoku")
        return PuzzleSpec.latin(args.n)
    if args.l is None or args.m is None:
        raise UsageError("sudoku needs --l and --m")
    if args.l * args.m != args.n:
        raise UsageError(f"l*m must equal n (got {args.l}*{args.m} != {args.n})")
    return PuzzleSpec.sudoku(args.n, args.l, args.m)


def rank_table(max_n: int) -> list[tuple[int, int, int, int, int]]:
    """(n, l, m, computed rank, formula rank) for every l*m = n with l, m >= 2."""
    rows = []
    for n in range(4, max_n + 1):
        for l in range(2, n // 2 + 1):
            if n % l == 0:
                spec = PuzzleSpec.sudoku(n, l, n // l)
                rows.append((n, l, n // l, rank(build_system(spec).matrix),
                             expected_rank(spec)))
    return rows


def cmd_rank(args, out) -> int:
    if args.table:
        out.write("n\tl\tm\trk\tformula\tmatch\n")
        ok = True
        for n, l, m, rk, formula in rank_table(args.max_n):
            ok &= rk == formula
            out.write(f"{n}\t{l}\t{m}\t{rk}\t{formula}\t{'yes' if rk == formula else 'no'}\n")
        return EXIT_OK if ok else 1
    spec = spec_from_args(args)
    report = rref(build_system(spec).matrix)
    formula = expected_rank(spec)
    match = "yes" if report.rank == formula else "no"
    out.write(f"rank={report.rank} formula={formula} match={match}\n")
    if args.dump_rref:
        with open(args.dump_rref, "w", encoding="utf-8") as fh:
            fh.write(report.reduced.dump() + "\n")
    return EXIT_OK


def outcome_json(result) -> dict:
    doc = {"class": str(result.outcome), "rank": result.rank, "unknowns": result.unknowns}
    if result.outcome is Outcome.UNIQUE_VALID:
        doc["solution"] = [list(row) for row in result.solution.cells]
    elif result.outcome is Outcome.UNIQUE_INVALID:
        n = int(len(result.values) ** 0.5)
        vals = [format_rational(v) for v in result.values]
        doc["solution"] = [vals[r * n:(r + 1) * n] for r in range(n)]
        doc["violations"] = [violation_json(v) for v in result.violations]
    elif result.outcome is Outcome.UNDERDETERMINED:
        doc["free_cells"] = [[c.i, c.j] for c in result.free_cells]
    return doc


def violation_json(v) -> dict:
    if v.unit is not None:
        return {"kind": v.kind, "unit": str(v.unit)}
    return {"kind": v.kind, "cell": [v.cell.i, v.cell.j], "value": format_rational(v.value)}


def cmd_solve(args, out) -> int:
    puzzle = read_puzzle(args.path)
    result = linear_solve(puzzle)
    if args.json:
        out.write(json.dumps(outcome_json(result)) + "\n")
        return EXIT_CODES[result.outcome]
    out.write(f"{result.outcome} rank={result.rank} unknowns={result.unknowns}\n")
    if result.outcome is Outcome.UNIQUE_VALID:
        out.write(format_body(result.solution) + "\n")
    elif result.outcome is Outcome.UNDERDETERMINED:
        out.write("free: " + " ".join(map(str, result.free_cells)) + "\n")
    elif result.outcome is Outcome.UNIQUE_INVALID:
        n = puzzle.spec.n
        vals = [format_rational(v) for v in result.values]
        for r in range(n):
            out.write(" ".join(vals[r * n:(r + 1) * n]) + "\n")
        for v in result.violations:
            out.write(f"violation {v}\n")
    return EXIT_CODES[result.outcome]


def cmd_generate(args, out) -> int:
    spec = spec_from_args(args)
    grid = generate_complete(spec, args.seed)
    board = derive_max_linear_puzzle(grid) if args.max_linear else grid
    out.write(format_puzzle(board))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    puzzle = read_puzzle(args.path)
    if not puzzle.is_complete():
        raise UsageError(f"{args.path} has blank cells; use solve")
    grid = puzzle.to_grid()
    bad = validate_complete(grid)
    res = residual(build_system(grid.spec).matrix, grid.vector())
    out.write("valid\n" if not bad else "invalid: " + ", ".join(map(str, bad)) + "\n")
    out.write("residual=" + ("zero" if not any(res) else "nonzero") + "\n")
    return EXIT_OK if not bad else EXIT_CODES[Outcome.UNIQUE_INVALID]


def cmd_count(args, out) -> int:
    if args.cap < 1:
        raise UsageError("--cap must be positive")
    puzzle = read_puzzle(args.path)
    agreement = agrees_with_linear(puzzle, cap=args.cap)
    out.write(f"count={agreement.count}{'+' if agreement.capped else ''}\n")
    out.write(f"capped={'yes' if agreement.capped else 'no'}\n")
    out.write(f"linear={agreement.linear} agreement={'yes' if agreement.agree else 'no'}\n")
    return EXIT_OK


def _spec_flags(p):
    p.add_argument("--kind", choices=[k.value for k in Kind])
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latinlin",
        description="Latin squares and Sudokus as exact unit-sum linear systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank of the unit-sum system vs. the closed form")
    _spec_flags(p)
    p.add_argument("--dump-rref", metavar="PATH", help="write the reduced system here")
    p.add_argument("--table", action="store_true",
                   help="rank table over all sudoku shapes l*m = n with l, m >= 2")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("solve", help="solve a puzzle file as a linear system")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="emit a complete grid or a max-linear puzzle")
    _spec_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-linear", action="store_true",
                   help="blank the pivot cells of the unit system")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a complete grid")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="brute-force completion count and linear cross-check")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=1000)
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except PuzzleFormatError as exc:
        print(f"{getattr(args, 'path', '-')}:{exc.line}:{exc.col}: {exc.message}", file=sys.stderr)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
