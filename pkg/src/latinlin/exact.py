"""Dense matrices over the rationals: reduced row echelon form, rank,
consistency and back-substitution.

Entries are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.  The last column of an
:class:`ExactMatrix` is the right-hand side; it never receives a pivot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .grid import DomainError

RHS = "rhs"

Number = Union[int, Fraction]


class ContractError(RuntimeError):
    """An operation was called outside its precondition."""


@dataclass(frozen=True)
class ExactMatrix:
    """Augmented matrix ``(B | c)``.

    ``col_labels`` names each coefficient column (flat cell indices for the
    unit systems) and ends with the :data:`RHS` marker.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    col_labels: tuple[Union[int, str], ...]

    def __post_init__(self):
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        if not self.col_labels or self.col_labels[-1] != RHS:
            raise DomainError("the last column must be the right-hand side")
        if RHS in self.col_labels[:-1]:
            raise DomainError("exactly one right-hand-side column allowed")
        width = len(self.col_labels)
        for r, row in enumerate(entries):
            if len(row) != width:
                raise DomainError(f"row {r} has {len(row)} entries, expected {width}")

    @classmethod
    def from_rows(cls, coeffs: Sequence[Sequence[Number]], rhs: Sequence[Number],
                  labels: Optional[Sequence[int]] = None) -> "ExactMatrix":
        if len(coeffs) != len(rhs):
            raise DomainError("coefficient rows and right-hand side differ in length")
        width = len(coeffs[0]) if coeffs else len(labels or ())
        if labels is None:
            labels = range(1, width + 1)
        return cls(tuple(tuple(row) + (c,) for row, c in zip(coeffs, rhs)),
                   tuple(labels) + (RHS,))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        """Number of coefficient columns (the right-hand side excluded)."""
        return len(self.col_labels) - 1

    def coefficients(self) -> list[list[Fraction]]:
        return [list(row[:-1]) for row in self.entries]

    def rhs(self) -> list[Fraction]:
        return [row[-1] for row in self.entries]

    def stack(self, extra: Sequence[Sequence[Number]]) -> "ExactMatrix":
        """Append rows below this matrix."""
        return ExactMatrix(self.entries + tuple(tuple(r) for r in extra), self.col_labels)

    def dump(self) -> str:
        return "\n".join(
            " ".join(format_rational(x) for x in row[:-1]) + " | " + format_rational(row[-1])
            for row in self.entries)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RrefReport:
    rank: int
    pivot_cols: tuple[int, ...]
    consistent: bool
    reduced: ExactMatrix

    def pivot_labels(self) -> list[Union[int, str]]:
        return [self.reduced.col_labels[c] for c in self.pivot_cols]


def rref(mat: ExactMatrix) -> RrefReport:
    """Gauss-Jordan elimination.

    Columns are scanned left to right; the pivot is the topmost remaining
    row with a nonzero entry, swapped up and scaled to 1, then cleared
    from every other row.  ``pivot_cols`` are 0-based positions.
    """
    a = [list(row) for row in mat.entries]
    nrows, ncoef = len(a), mat.cols
    pivots = []
    r = 0
    for c in range(ncoef):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pivot_row = a[r]
        if pivot_row[c] != 1:
            inv = 1 / pivot_row[c]
            pivot_row = a[r] = [x * inv for x in pivot_row]
        support = [q for q, x in enumerate(pivot_row) if x]
        for i in range(nrows):
            f = a[i][c]
            if i != r and f:
                row = a[i]
                for q in support:
                    row[q] -= f * pivot_row[q]
        pivots.append(c)
        r += 1
    consistent = all(row[-1] == 0 for row in a[r:])
    return RrefReport(r, tuple(pivots), consistent, ExactMatrix(a, mat.col_labels))


def rank(mat: ExactMatrix) -> int:
    return rref(mat).rank


@dataclass(frozen=True)
class Underdetermined:
    """Back-substitution found free coefficient columns (0-based positions)."""

    free_cols: tuple[int, ...]


def back_substitute(report: RrefReport) -> Union[list[Fraction], Underdetermined]:
    """Solve a consistent reduced system.

    Returns the solution vector when every coefficient column is a pivot,
    otherwise an :class:`Underdetermined` marker naming the free columns.
    """
    if not report.consistent:
        raise ContractError("back-substitution on an inconsistent system")
    mat = report.reduced
    pivots = set(report.pivot_cols)
    free = tuple(c for c in range(mat.cols) if c not in pivots)
    if free:
        return Underdetermined(free)
    x = [Fraction(0)] * mat.cols
    # walk pivots bottom-up; in full RREF the inner sum vanishes, but the
    # loop stays correct for any echelon input
    for r in reversed(range(report.rank)):
        c = report.pivot_cols[r]
        row = mat.entries[r]
        acc = row[-1] - sum(row[q] * x[q] for q in range(c + 1, mat.cols))
        x[c] = acc / row[c]
    return x


def residual(mat: ExactMatrix, x: Sequence[Number]) -> list[Fraction]:
    """Exact ``B x - c``."""
    if len(x) != mat.cols:
        raise DomainError(f"vector has {len(x)} entries, matrix has {mat.cols} columns")
    return [sum((a * v for a, v in zip(row[:-1], x) if a), Fraction(0)) - row[-1]
            for row in mat.entries]
