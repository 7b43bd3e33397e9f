"""Exhaustive ground truth for small instances.

Every maximal minor of a basis matrix of ``I_e`` is evaluated exactly, so
``N(I, e)``, ``M(I, e)`` and the hull of ``M(I, e)`` come out without using
the greedy oracle at all.  Only feasible for small degrees: ``e = 5`` already
means 54264 minors of size 6.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence

from .errors import EnumerationLimitError, NoBasisError
from .fan import ColumnMatroid, column_matroid
from .linalg import RationalMatrix, permutation_sign
from .poly import ExponentVec

__all__ = [
    "LIMIT_ENV",
    "default_limit",
    "PlueckerTable",
    "all_pluecker",
    "brute_M",
    "brute_vertices",
    "brute_component",
]

LIMIT_ENV = "GINFAN_BRUTE_LIMIT"
_DEFAULT_LIMIT = 100_000


def default_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else _DEFAULT_LIMIT


@dataclass(frozen=True)
class PlueckerTable:
    """Nonzero Plücker coordinates, keyed by the column labels of ``J``."""

    entries: dict[tuple[ExponentVec, ...], Fraction]
    total_subsets: int
    rank: int

    def __len__(self) -> int:
        return len(self.entries)


def all_pluecker(A, labels: Sequence[ExponentVec] | None = None,
                 limit: int | None = None) -> PlueckerTable:
    """Evaluate every maximal minor of a row basis of ``A``.

    Subsets are walked depth-first in lexicographic order; the elimination
    state of each prefix is shared by all its extensions and a dependent
    prefix prunes its whole subtree.  Arithmetic is fraction-free on an
    integer-scaled row basis, so values are Plücker coordinates up to one
    common nonzero factor.  When ``A`` already has independent rows with
    integer entries the values are exactly its maximal minors.
    """
    M: ColumnMatroid = column_matroid(A, labels)
    r, ncols = M.rank, len(M.labels)
    if r == 0:
        raise NoBasisError("rank zero: no maximal minors")
    total = comb(ncols, r)
    limit = default_limit() if limit is None else limit
    if total > limit:
        raise EnumerationLimitError(total, limit)

    entries: dict[tuple[ExponentVec, ...], Fraction] = {}
    if isinstance(A, RationalMatrix) and A.rows == r:
        cols = _integral_columns([A.col(j) for j in range(A.cols)])
    else:
        cols = _integral_columns(M.columns)
    labels = M.labels

    # prefix = list of (pivot_row, integer column, multiplier); the reduced
    # column equals multiplier * (original column + earlier columns), so the
    # minor is sign * prod(pivots) / prod(multipliers).
    def walk(prefix, chosen, start):
        depth = len(prefix)
        if depth == r:
            value = Fraction(permutation_sign([p for p, _, _ in prefix]))
            for p, v, c in prefix:
                value *= v[p]
                value /= c
            entries[tuple(labels[j] for j in chosen)] = value
            return
        for j in range(start, ncols - (r - depth) + 1):
            w = cols[j]
            c = Fraction(1)
            for p, v, _ in prefix:
                b = w[p]
                if b:
                    a = v[p]
                    w = [a * x - b * y for x, y in zip(w, v)]
                    c *= a
            g = 0
            for x in w:
                if x:
                    g = gcd(g, x)
            if not g:
                continue
            if g != 1:
                w = [x // g for x in w]
                c /= g
            p = next(i for i, x in enumerate(w) if x)
            prefix.append((p, w, c))
            chosen.append(j)
            walk(prefix, chosen, j + 1)
            prefix.pop()
            chosen.pop()

    walk([], [], 0)
    return PlueckerTable(entries, total, r)


def _integral_columns(columns) -> list[list[int]]:
    """The columns after scaling each row to integers.

    Row scaling multiplies every maximal minor by the same constant, so the
    Plücker point is unchanged.
    """
    rows = [list(row) for row in zip(*columns)] if columns else []
    scaled = []
    for row in rows:
        den = 1
        for e in row:
            den = lcm(den, e.denominator)
        scaled.append([int(e * den) for e in row])
    return [list(col) for col in zip(*scaled)]


def brute_M(table: PlueckerTable) -> dict[tuple[int, int, int], tuple[ExponentVec, ...]]:
    """Distinct ``m_J`` over the nonzero coordinates, each with one witness ``J``."""
    out = {}
    for J in table.entries:
        m = (sum(nu[0] for nu in J), sum(nu[1] for nu in J), sum(nu[2] for nu in J))
        out.setdefault(m, J)
    return out


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def brute_vertices(points: Iterable[Sequence[int]]) -> list[tuple[int, int, int]]:
    """Hull vertices of points on a plane ``m1 + m2 + m3 = const``.

    Monotone chain on ``(m1, m2)`` with exact integer turns; collinear
    boundary points are dropped.  Counter-clockwise order.
    """
    pts3 = sorted(set(tuple(p) for p in points))
    if len(pts3) <= 1:
        return list(pts3)
    third = {(p[0], p[1]): p[2] for p in pts3}
    pts = sorted(third)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return [(x, y, third[(x, y)]) for x, y in hull]


def brute_component(A, labels=None, limit=None) -> list[tuple[int, int, int]]:
    return brute_vertices(brute_M(all_pluecker(A, labels, limit)))
