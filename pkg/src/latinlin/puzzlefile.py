"""Plain-text puzzle files.

::

    sudoku 4 2 2
    . . . .
    . 2 1 4
    . 3 . 1
    . 1 4 3

The header is ``latin <n>`` or ``sudoku <n> <l> <m>``; then ``n`` lines of
``n`` whitespace-separated tokens, each ``.`` (unknown) or an integer in
1..n.  ``0`` is read as unknown; output always uses ``.``.
"""

from __future__ import annotations

import re

from .grid import DomainError, Kind, Puzzle, PuzzleSpec


class PuzzleFormatError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


def _tokens(text: str):
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", text)]


def _int(tok: str, line: int, col: int) -> int:
    if not re.fullmatch(r"[0-9]+", tok):
        raise PuzzleFormatError(line, col, f"expected a decimal integer, got {tok!r}")
    return int(tok)


def parse_puzzle(text: str) -> Puzzle:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise PuzzleFormatError(1, 1, "empty file")
    head = _tokens(lines[0])
    if not head:
        raise PuzzleFormatError(1, 1, "missing header")
    kind_col, kind = head[0]
    nums = [_int(t, 1, c) for c, t in head[1:]]
    try:
        if kind == Kind.LATIN.value and len(nums) == 1:
            spec = PuzzleSpec.latin(nums[0])
        elif kind == Kind.SUDOKU.value and len(nums) == 3:
            spec = PuzzleSpec.sudoku(*nums)
        else:
            raise PuzzleFormatError(1, kind_col,
                                    "header must be 'latin <n>' or 'sudoku <n> <l> <m>'")
    except DomainError as exc:
        raise PuzzleFormatError(1, kind_col, str(exc)) from None
    n = spec.n
    body = lines[1:]
    if len(body) != n:
        raise PuzzleFormatError(min(len(lines) + 1, n + 2), 1,
                                f"expected {n} grid lines, found {len(body)}")
    rows = []
    for lineno, raw in enumerate(body, 2):
        toks = _tokens(raw)
        if len(toks) != n:
            col = toks[n][0] if len(toks) > n else len(raw) + 1
            raise PuzzleFormatError(lineno, col, f"expected {n} tokens, found {len(toks)}")
        row = []
        for col, tok in toks:
            if tok == ".":
                row.append(None)
                continue
            v = _int(tok, lineno, col)
            if v == 0:
                row.append(None)
            elif v > n:
                raise PuzzleFormatError(lineno, col, f"value {v} outside 1..{n}")
            else:
                row.append(v)
        rows.append(row)
    return Puzzle(spec, rows)


def format_body(board) -> str:
    """Body lines for a Grid or Puzzle."""
    return "\n".join(" ".join("." if v is None else str(v) for v in row)
                     for row in board.cells)


def format_puzzle(board) -> str:
    return f"{board.spec}\n{format_body(board)}\n"


def read_puzzle(path: str) -> Puzzle:
    with open(path, encoding="utf-8") as fh:
        return parse_puzzle(fh.read())
