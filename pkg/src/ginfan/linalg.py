"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries (Python ints are
accepted and promoted).  Matrices are immutable; the helpers return new
objects rather than mutating their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from typing import Hashable, Iterable, Sequence

from .errors import DimensionError

__all__ = [
    "RationalMatrix",
    "EliminationState",
    "det",
    "det_bareiss",
    "det_laplace",
    "rank",
    "row_basis",
    "try_extend",
    "permutation_sign",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    """Dense immutable matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_frac(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, (e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def submatrix(self, rows: Sequence[int] | None = None,
                  cols: Sequence[int] | None = None) -> "RationalMatrix":
        rows = range(self.rows) if rows is None else rows
        cols = range(self.cols) if cols is None else cols
        return RationalMatrix(len(rows), len(cols),
                              (self[i, j] for i in rows for j in cols))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.col(j) for j in range(other.cols)]
        return RationalMatrix(self.rows, other.cols,
                              (sum(a * b for a, b in zip(self.row(i), c))
                               for i in range(self.rows) for c in ocols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(e) for e in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"RationalMatrix([{body}])"

    @cached_property
    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.entries)


# --------------------------------------------------------------------------
# determinants


def _require_square(M: RationalMatrix) -> None:
    if M.rows != M.cols:
        raise DimensionError(f"determinant of non-square {M.rows}x{M.cols} matrix")


def det(M: RationalMatrix) -> Fraction:
    """Exact determinant by Gaussian elimination with largest-|.| pivoting."""
    _require_square(M)
    n = M.rows
    a = M.to_lists()
    result = Fraction(1)
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            result = -result
        pivot = a[k][k]
        result *= pivot
        pk = a[k]
        for i in range(k + 1, n):
            f = a[i][k]
            if f:
                f /= pivot
                ai = a[i]
                for j in range(k + 1, n):
                    ai[j] -= f * pk[j]
    return result


def det_bareiss(M: RationalMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rational input is scaled to integers row by row first, so all the
    inner arithmetic is on Python ints.
    """
    _require_square(M)
    n = M.rows
    if n == 0:
        return Fraction(1)
    a = []
    scale = Fraction(1)
    for i in range(n):
        row = M.row(i)
        den = 1
        for e in row:
            den = den * e.denominator // _gcd(den, e.denominator)
        a.append([int(e * den) for e in row])
        scale /= den
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k]:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai = a[i]
            ak = a[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * ak[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] * scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of ``range(len(perm))`` via cycle counting."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_laplace(M: RationalMatrix) -> Fraction:
    """Leibniz/cofactor determinant; only for tiny matrices (oracle use)."""
    _require_square(M)
    n = M.rows
    if n > 7:
        raise ValueError("det_laplace is exponential; refusing n > 7")
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(permutation_sign(perm))
        for i, j in enumerate(perm):
            term *= M[i, j]
            if not term:
                break
        total += term
    return total


# --------------------------------------------------------------------------
# rank and row spaces


def _echelon(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form of ``rows`` (modified copy), zero rows dropped."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    r = 0
    for c in range(ncols):
        p = None
        best = 0
        for i in range(r, len(rows)):
            v = abs(rows[i][c])
            if v > best:
                best, p = v, i
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        pr = [e / piv for e in rows[r]]
        rows[r] = pr
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [a - f * b for a, b in zip(ri, pr)]
        r += 1
        if r == len(rows):
            break
    out = rows[:r]
    return out


def rank(M: RationalMatrix) -> int:
    return len(_echelon(M.to_lists()))


def row_basis(M: RationalMatrix) -> RationalMatrix:
    """Reduced row echelon basis of the row space of ``M``.

    The column matroid is unchanged, so callers that only care about
    column independence can work on this (usually much smaller) matrix.
    """
    rows = _echelon(M.to_lists())
    return RationalMatrix(len(rows), M.cols, (e for r in rows for e in r))


# --------------------------------------------------------------------------
# incremental independence


@dataclass(frozen=True)
class EliminationState:
    """Column-by-column elimination state.

    ``pivots`` holds ``(pivot_row, reduced_column)`` pairs; every reduced
    column vanishes at the pivot rows of the columns accepted before it.
    States are never mutated, so a caller can branch from any of them.
    """

    length: int
    pivots: tuple[tuple[int, tuple[Fraction, ...]], ...] = ()
    selected: tuple[Hashable, ...] = ()

    @property
    def size(self) -> int:
        return len(self.selected)

    def reduce(self, column: Sequence) -> list[Fraction]:
        if len(column) != self.length:
            raise DimensionError(
                f"column of length {len(column)}, expected {self.length}")
        w = [_frac(e) for e in column]
        for p, v in self.pivots:
            f = w[p]
            if f:
                f /= v[p]
                w = [a - f * b for a, b in zip(w, v)]
        return w

    def determinant(self) -> Fraction:
        """Determinant of the selected columns when they form a square matrix.

        Column operations used during reduction only add multiples of earlier
        columns, so the product of pivots times the sign of the pivot-row
        permutation is the determinant of the original columns.
        """
        if self.size != self.length:
            raise DimensionError("selected columns do not form a square matrix")
        value = Fraction(permutation_sign([p for p, _ in self.pivots]))
        for p, v in self.pivots:
            value *= v[p]
        return value


def try_extend(state: EliminationState, column: Sequence,
               id: Hashable = None) -> tuple[EliminationState, bool]:
    """Try to add ``column``; returns ``(new_state, accepted)``.

    When the column depends on the selected ones the original ``state`` is
    returned unchanged.
    """
    w = state.reduce(column)
    best = None
    for i, e in enumerate(w):
        if e and (best is None or abs(e) > abs(w[best])):
            best = i
    if best is None:
        return state, False
    return EliminationState(state.length,
                            state.pivots + ((best, tuple(w)),),
                            state.selected + (id,)), True
