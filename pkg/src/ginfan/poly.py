"""Graded polynomials in x, y, z with rational coefficients.

Exponent vectors are plain ``(e1, e2, e3)`` tuples of ints.  Within a degree
the monomials are ordered reverse-lexicographically, largest first:

    nu > mu  iff  the last nonzero entry of nu - mu is negative

so ``monomial_basis(2)`` is ``x^2, xy, y^2, xz, yz, z^2``.  This order is the
column order of every coefficient matrix the package builds.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from os import PathLike
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, IdealFormatError
from .linalg import RationalMatrix, det

ExponentVec = tuple[int, int, int]

__all__ = [
    "ExponentVec",
    "Poly",
    "LinearChange",
    "IdealSpec",
    "monomial_basis",
    "monomial_index",
    "revlex_greater",
    "apply_linear_change",
    "degree_matrix",
    "parse_ideal",
    "load_ideal",
    "ideal_to_json",
]


def revlex_greater(nu: ExponentVec, mu: ExponentVec) -> bool:
    for a, b in zip(reversed(nu), reversed(mu)):
        if a != b:
            return a < b
    return False


@lru_cache(maxsize=None)
def monomial_basis(d: int) -> tuple[ExponentVec, ...]:
    """All degree-``d`` exponents, revlex-descending; ``C(d+2, 2)`` of them."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return tuple((d - e2 - e3, e2, e3)
                 for e3 in range(d + 1) for e2 in range(d - e3 + 1))


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict[ExponentVec, int]:
    return {nu: i for i, nu in enumerate(monomial_basis(d))}


def _add_exp(a: ExponentVec, b: ExponentVec) -> ExponentVec:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


class Poly:
    """Polynomial in x, y, z; a frozen mapping exponent -> nonzero Fraction."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExponentVec, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ExponentVec, Fraction] = defaultdict(Fraction)
        for nu, c in items:
            nu = tuple(int(e) for e in nu)
            if len(nu) != 3 or min(nu) < 0:
                raise ValueError(f"bad exponent {nu!r}")
            acc[nu] += Fraction(c)
        self._terms = {nu: c for nu, c in acc.items() if c}

    @classmethod
    def monomial(cls, nu: ExponentVec, coeff=1) -> "Poly":
        return cls({nu: coeff})

    @classmethod
    def linear(cls, a, b, c) -> "Poly":
        return cls({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @property
    def terms(self) -> dict[ExponentVec, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, nu: ExponentVec) -> Fraction:
        return self._terms.get(tuple(nu), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(nu) for nu in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self._terms)
        for nu, c in other._terms.items():
            out[nu] = out.get(nu, 0) + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({nu: -c for nu, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly({nu: c * v for nu, v in self._terms.items()})

    def shift(self, nu: ExponentVec) -> "Poly":
        """Multiply by the monomial ``x^nu``."""
        return Poly({_add_exp(mu, nu): c for mu, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        acc: dict[ExponentVec, Fraction] = defaultdict(Fraction)
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                acc[_add_exp(a, b)] += ca * cb
        return Poly(acc)

    __rmul__ = scale

    def __pow__(self, k: int) -> "Poly":
        result = Poly.monomial((0, 0, 0))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coefficient_vector(self, d: int) -> list[Fraction]:
        if any(sum(nu) != d for nu in self._terms):
            raise DimensionError(f"polynomial is not homogeneous of degree {d}")
        idx = monomial_index(d)
        vec = [Fraction(0)] * len(idx)
        for nu, c in self._terms.items():
            vec[idx[nu]] = c
        return vec

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for nu in sorted(self._terms, key=lambda n: (-sum(n), n[2], n[1])):
            c = self._terms[nu]
            mon = "*".join(f"{v}^{e}" if e > 1 else v
                           for v, e in zip("xyz", nu) if e)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class LinearChange:
    """Linear change of coordinates; row ``i`` is the image of variable ``i``.

    With ``matrix = [[g1, g2, g3], [g4, g5, g6], [g7, g8, g9]]`` the change
    sends x to ``g1 x + g2 y + g3 z`` and so on.
    """

    matrix: RationalMatrix

    def __post_init__(self):
        if self.matrix.shape != (3, 3):
            raise DimensionError("a linear change of x, y, z needs a 3x3 matrix")

    @classmethod
    def from_rows(cls, rows) -> "LinearChange":
        return cls(RationalMatrix.from_rows(rows))

    @classmethod
    def identity(cls) -> "LinearChange":
        return cls(RationalMatrix.identity(3))

    def det(self) -> Fraction:
        return det(self.matrix)

    def is_invertible(self) -> bool:
        return self.det() != 0

    def images(self) -> tuple[Poly, Poly, Poly]:
        return tuple(Poly.linear(*self.matrix.row(i)) for i in range(3))

    def then(self, other: "LinearChange") -> "LinearChange":
        """Change equal to applying ``self`` first and ``other`` second.

        ``apply(other, apply(self, f)) == apply(self.then(other), f)``.
        Under the row-image convention the matrix of the composite is
        ``self.matrix @ other.matrix``.
        """
        return LinearChange(self.matrix @ other.matrix)

    def scaled(self, c) -> "LinearChange":
        c = Fraction(c)
        m = self.matrix
        return LinearChange(RationalMatrix(3, 3, (c * e for e in m.entries)))


def apply_linear_change(g: LinearChange, f: Poly) -> Poly:
    """Substitute every variable by its image under ``g`` and expand."""
    images = g.images()
    powers = [[Poly.monomial((0, 0, 0))] for _ in range(3)]
    acc: dict[ExponentVec, Fraction] = defaultdict(Fraction)
    for nu, c in f.items():
        term = None
        for v in range(3):
            pw = powers[v]
            while len(pw) <= nu[v]:
                pw.append(pw[-1] * images[v])
            term = pw[nu[v]] if term is None else term * pw[nu[v]]
        for mu, cm in term.items():
            acc[mu] += c * cm
    return Poly(acc)


@dataclass(frozen=True)
class IdealSpec:
    """Homogeneous generators of a graded ideal in K[x, y, z]."""

    generators: tuple[Poly, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise IdealFormatError("an ideal needs at least one generator")
        for k, f in enumerate(gens):
            if f.is_zero():
                raise IdealFormatError(f"generator {k} is zero")
            if not f.is_homogeneous():
                raise IdealFormatError(f"generator {k} is not homogeneous: {f}")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.generators)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    def transform(self, g: LinearChange) -> "IdealSpec":
        return IdealSpec(tuple(apply_linear_change(g, f) for f in self.generators))


def degree_matrix(I: IdealSpec, e: int) -> tuple[RationalMatrix, list[tuple[int, ExponentVec]]]:
    """Coefficient matrix whose row space is ``I_e``.

    One row per product ``x^mu * f_k`` with ``deg f_k <= e``; rows are
    labelled ``(k, mu)``.  Columns follow ``monomial_basis(e)``.
    """
    if e < I.min_degree:
        raise DimensionError(f"degree {e} is below the smallest generator degree")
    rows: list[list[Fraction]] = []
    labels: list[tuple[int, ExponentVec]] = []
    for k, f in enumerate(I.generators):
        if f.degree > e:
            continue
        for mu in monomial_basis(e - f.degree):
            rows.append(f.shift(mu).coefficient_vector(e))
            labels.append((k, mu))
    return RationalMatrix.from_rows(rows, cols=len(monomial_basis(e))), labels


# --------------------------------------------------------------------------
# ideal files
#
# {"generators": [[[num, den, [e1, e2, e3]], ...], ...]}


def parse_ideal(doc) -> IdealSpec:
    if not isinstance(doc, Mapping) or "generators" not in doc:
        raise IdealFormatError('expected an object with a "generators" list')
    gens = doc["generators"]
    if not isinstance(gens, list) or not gens:
        raise IdealFormatError('"generators" must be a non-empty list')
    polys = []
    for k, terms in enumerate(gens):
        if not isinstance(terms, list):
            raise IdealFormatError(f"generator {k} must be a list of terms")
        parsed = []
        for t in terms:
            try:
                num, den, nu = t
                if (isinstance(num, bool) or isinstance(den, bool)
                        or not isinstance(num, int) or not isinstance(den, int)):
                    raise TypeError
                if den == 0:
                    raise ZeroDivisionError
                nu = tuple(nu)
                if len(nu) != 3 or any(not isinstance(e, int) or e < 0 for e in nu):
                    raise TypeError
            except (TypeError, ValueError, ZeroDivisionError):
                raise IdealFormatError(f"bad term {t!r} in generator {k}") from None
            parsed.append((nu, Fraction(num, den)))
        polys.append(Poly(parsed))
    return IdealSpec(tuple(polys))


def load_ideal(path: str | PathLike) -> IdealSpec:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise IdealFormatError(f"{path}: {exc}") from None
    return parse_ideal(doc)


def ideal_to_json(I: IdealSpec) -> dict:
    return {"generators": [
        [[c.numerator, c.denominator, list(nu)]
         for nu, c in sorted(f.items(), key=lambda t: monomial_index(sum(t[0]))[t[0]])]
        for f in I.generators]}

