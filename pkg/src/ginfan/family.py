"""The monomial family I(d) and its explicit separating data.

``I(d) = (y^d, x y^(d-1), ..., x^(d-1) y, z^d)``.  For ``0 <= n < d/3`` the
index set ``J(n)`` collects ``d+1`` degree-``d`` exponents that a single line
in the plane ``sum = d`` separates from the rest; ``omega(n)`` is the normal
of that line and ``lambda(n)`` its level.

The last part of the module replays a determinant-reduction argument for
the matrix ``B`` (coefficients of ``g0(I(d))_d`` on the columns ``J(n)``)
as an exact computation.  Each step is executed on the actual matrix and
the closed-form matrix quoted for that step is built alongside, so a step
that is not an elementary operation, or a closed form that does not match
what the step produces, is reported instead of being assumed away.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from .errors import ChainConsistencyError, DomainError
from .linalg import RationalMatrix, det, det_bareiss
from .poly import (ExponentVec, IdealSpec, LinearChange, Poly, degree_matrix,
                   monomial_basis, monomial_index)

__all__ = [
    "G0",
    "binomial",
    "family_ideal",
    "bound",
    "valid_n",
    "index_set_J",
    "m_of",
    "SeparationData",
    "SeparationReport",
    "omega_lambda",
    "check_separation",
    "build_matrix_B",
    "evaluated_matrix_B",
    "ChainStage",
    "AppendixChain",
    "appendix_reduction",
]

# x -> x + z, y -> x + y, z -> x
G0 = LinearChange.from_rows([[1, 0, 1], [1, 1, 0], [1, 0, 0]])


def binomial(a: int, b: int) -> int:
    """``C(a, b)``; zero when ``b < 0`` or ``b > a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def family_ideal(d: int) -> IdealSpec:
    if d < 3:
        raise DomainError(f"I(d) is defined for d >= 3, got {d}")
    gens = [Poly.monomial((a, d - a, 0)) for a in range(d)]
    gens.append(Poly.monomial((0, 0, d)))
    return IdealSpec(tuple(gens))


def bound(d: int) -> int:
    """Number of ``n`` with ``0 <= n < d/3``, i.e. ``floor((d-1)/3) + 1``."""
    return (d - 1) // 3 + 1


def valid_n(d: int) -> range:
    return range(bound(d))


def _check_n(d: int, n: int, appendix: bool = False) -> None:
    if appendix:
        if d < 1 or not 0 <= n < d:
            raise DomainError(f"need 0 <= n < d, got d={d}, n={n}")
    elif d < 3 or n < 0 or 3 * n >= d:
        raise DomainError(f"need d >= 3 and 0 <= n < d/3, got d={d}, n={n}")


def index_set_J(d: int, n: int) -> tuple[ExponentVec, ...]:
    """``J(n)`` in the column order used for ``B``.

    That order is ``x^d, x^(d-1) y, ..., x^n y^(d-n)`` followed by
    ``x^(d-1) z, x^(d-2) y z, ..., x^(d-n) y^(n-1) z``.
    """
    _check_n(d, n)
    return _J(d, n)


def _J(d: int, n: int) -> tuple[ExponentVec, ...]:
    flat = tuple((d - b, b, 0) for b in range(d - n + 1))
    linear = tuple((d - a - 1, a, 1) for a in range(n))
    return flat + linear


def m_of(J) -> tuple[int, int, int]:
    return tuple(sum(nu[k] for nu in J) for k in range(3))


@dataclass(frozen=True)
class SeparationData:
    d: int
    n: int
    omega: tuple[int, int, int]
    lam: int
    J: tuple[ExponentVec, ...]


def omega_lambda(d: int, n: int) -> SeparationData:
    _check_n(d, n)
    omega = (2 * n - d - 2, 2 * n - d + 1, 2 * d - 4 * n + 1)
    lam = d + 2 * n * d - d * d - 3 * n
    return SeparationData(d, n, omega, lam, _J(d, n))


@dataclass(frozen=True)
class SeparationReport:
    d: int
    n: int
    passed: bool
    violations: tuple[ExponentVec, ...]
    boundary: tuple[ExponentVec, ...]


def check_separation(d: int, n: int) -> SeparationReport:
    """Check ``omega . nu <= lambda`` on ``J(n)`` and ``>`` on the rest of the simplex."""
    data = omega_lambda(d, n)
    inside = set(data.J)
    violations, boundary = [], []
    w = data.omega
    for nu in monomial_basis(d):
        v = w[0] * nu[0] + w[1] * nu[1] + w[2] * nu[2]
        if v == data.lam:
            boundary.append(nu)
        if (nu in inside) != (v <= data.lam):
            violations.append(nu)
    return SeparationReport(d, n, not violations, tuple(violations), tuple(boundary))


# --------------------------------------------------------------------------
# the matrix B


def _block_B(d: int, n: int) -> list[list[int]]:
    rows = []
    for i in range(1, d + 1):
        rows.append([binomial(d - i + 1, j - 1) for j in range(1, d - n + 2)]
                    + [(i - 1) * binomial(d - i + 1, j - 1) for j in range(1, n + 1)])
    rows.append([1] + [0] * d)
    return rows


def build_matrix_B(d: int, n: int, appendix: bool = False) -> RationalMatrix:
    """``[[B', B''], [b, 0]]``, ``(d+1) x (d+1)``.

    ``B'_ij = C(d-i+1, j-1)``, ``B''_ij = (i-1) C(d-i+1, j-1)`` and
    ``b = (1, 0, ..., 0)``.  ``appendix=True`` widens the range to ``n < d``.
    """
    _check_n(d, n, appendix)
    return RationalMatrix.from_rows(_block_B(d, n))


def evaluated_matrix_B(d: int, n: int, g: LinearChange = G0) -> RationalMatrix:
    """Rows of ``g(I(d))_d`` restricted to the columns ``J(n)``.

    For ``g = G0`` this should reproduce :func:`build_matrix_B`.
    """
    _check_n(d, n, appendix=True)
    if d < 3:
        raise DomainError("I(d) needs d >= 3")
    A, _ = degree_matrix(family_ideal(d).transform(g), d)
    idx = monomial_index(d)
    return A.submatrix(cols=[idx[nu] for nu in _J(d, n)])


# --------------------------------------------------------------------------
# replaying the determinant reduction


@dataclass(frozen=True)
class ChainStage:
    """One step of the reduction.

    ``factor`` satisfies ``det(previous) == factor * det(matrix)``; it is
    ``None`` when the step is not a determinant-tracking operation on the
    matrix it is applied to.  ``formula`` is the closed form given for the
    result of the step, if there is one.
    """

    name: str
    matrix: RationalMatrix
    formula: RationalMatrix | None
    factor: Fraction | None
    det: Fraction
    note: str = ""

    @property
    def matches_formula(self) -> bool | None:
        return None if self.formula is None else self.formula == self.matrix


@dataclass(frozen=True)
class AppendixChain:
    d: int
    n: int
    B: RationalMatrix
    det_B: Fraction
    stages: tuple[ChainStage, ...]
    E: RationalMatrix = field(repr=False)
    det_E: Fraction = Fraction(0)

    @property
    def factors(self) -> list[Fraction | None]:
        return [s.factor for s in self.stages]

    @property
    def factor_product(self) -> Fraction | None:
        if any(f is None for f in self.factors):
            return None
        return prod(self.factors, start=Fraction(1))

    @property
    def broken_steps(self) -> list[str]:
        return [s.name for s in self.stages if s.factor is None]

    @property
    def formula_mismatches(self) -> list[str]:
        return [s.name for s in self.stages if s.matches_formula is False]

    @property
    def det_B_nonzero(self) -> bool:
        return self.det_B != 0

    @property
    def unimodular_E(self) -> bool:
        return abs(self.det_E) == 1

    @property
    def consistent(self) -> bool:
        """``|det B| == |product of factors| * |det E|`` with every step tracked."""
        p = self.factor_product
        return p is not None and abs(self.det_B) == abs(p) * abs(self.det_E)


def _mat(rows) -> RationalMatrix:
    return RationalMatrix.from_rows(rows)


def _unit_position(col) -> int | None:
    nz = [i for i, e in enumerate(col) if e]
    return nz[0] if len(nz) == 1 else None


def appendix_reduction(d: int, n: int) -> AppendixChain:
    """Run the reduction ``B -> (C|C') -> (D|D') -> D_1 ... D_n -> E`` exactly."""
    _check_n(d, n, appendix=True)
    B = build_matrix_B(d, n, appendix=True)
    det_B = det_bareiss(B)
    stages: list[ChainStage] = []

    def push(name, rows, formula, factor, note=""):
        M = _mat(rows)
        if factor is not None and factor == 0:
            raise ChainConsistencyError(f"{name}: zero determinant factor")
        stages.append(ChainStage(name, M, None if formula is None else _mat(formula),
                                 None if factor is None else Fraction(factor),
                                 det_bareiss(M), note))
        return [list(r) for r in rows]

    # 1. Laplace expansion along the last row (b, 0).
    last = B.row(d)
    k = _unit_position(last)
    rows = [list(B.row(i)) for i in range(d)]
    if k is None:
        cur = push("laplace_last_row", [r[1:] for r in rows], None, None,
                   "last row is not a unit vector")
    else:
        cur = push("laplace_last_row", [r[:k] + r[k + 1:] for r in rows], None,
                   (-1) ** (d + k) * last[k])

    # 2. B''_j -> (d+1-j) B'_j - B''_j.  B'_1 was removed by step 1, so for
    #    j = 1 this is not a column operation on the current matrix.
    w = d - n  # columns of the C block
    elementary = True
    for j in range(1, n + 1):
        ref = [binomial(d - i + 1, j - 1) for i in range(1, d + 1)]
        if 2 <= j <= w + 1:
            ref_col = j - 2
            assert [r[ref_col] for r in cur] == ref
        else:
            elementary = False
        c = w + j - 1
        for i in range(d):
            cur[i][c] = (d + 1 - j) * ref[i] - cur[i][c]
    formula_C = [[binomial(d - i + 1, j) for j in range(1, w + 1)]
                 + [(d - i - j + 2) * binomial(d - i + 1, j - 1) for j in range(1, n + 1)]
                 for i in range(1, d + 1)]
    note = "" if elementary else "uses B'_1, which is not a column of the expanded matrix"
    cur = push("column_replacement", cur, formula_C,
               (-1) ** n if elementary else None, note)

    # 3. scale column j of C by j and row i by 1/(d-i+1).
    cur = [[Fraction(e) for e in r] for r in cur]
    for i in range(d):
        for j in range(w):
            cur[i][j] *= j + 1
        cur[i] = [e / (d - i) for e in cur[i]]
    scale = Fraction(factorial(d), factorial(w))
    formula_D = [[binomial(d - i, j - 1) for j in range(1, w + 1)]
                 + [binomial(d - i, j - 1) for j in range(1, n + 1)]
                 for i in range(1, d + 1)]
    cur = push("scale_rows_columns", cur, formula_D, scale)

    # 4. n rounds of row differencing and expansion on the first D' column.
    for r in range(1, n + 1):
        size = len(cur)
        cur = [[a - b for a, b in zip(cur[i], cur[i + 1])] for i in range(size - 1)] + [cur[-1]]
        col = [row[w] for row in cur]
        k = _unit_position(col)
        if k is None:
            factor, note = None, "expansion column is not a unit vector"
            k = size - 1
        else:
            factor, note = (-1) ** (k + w) * col[k], ""
        cur = [row[:w] + row[w + 1:] for i, row in enumerate(cur) if i != k]
        formula = [[binomial(d - i - r, j - r - 1) for j in range(1, w + 1)]
                   + [binomial(d - i - r, j - 1) for j in range(1, n - r + 1)]
                   for i in range(1, d - r + 1)]
        cur = push(f"difference_expand_{r}", cur, formula, factor, note)

    # 5. rescale rows and columns of D_n into E.
    row_f = [Fraction(factorial(d - i), factorial(d - n - i)) for i in range(1, w + 1)]
    col_f = [Fraction(factorial(n - 1 + j), factorial(j - 1)) for j in range(1, w + 1)]
    cur = [[e * row_f[i] * col_f[j] for j, e in enumerate(row)] for i, row in enumerate(cur)]
    total = prod(row_f, start=Fraction(1)) * prod(col_f, start=Fraction(1))
    formula_E = [[binomial(d - i, j - 1) for j in range(1, w + 1)] for i in range(1, w + 1)]
    push("rescale_to_E", cur, formula_E, 1 / total)

    E = _mat(formula_E)
    return AppendixChain(d, n, B, det_B, tuple(stages), E, det(E))
