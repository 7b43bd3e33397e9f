"""Degree components of Gröbner fans via the column matroid of ``I_e``.

For a basis matrix ``A`` of ``I_e`` (columns = degree-``e`` monomials) a set
``J`` of columns has a nonzero Plücker coordinate exactly when it is a column
basis.  The cones of the degree-``e`` fan are the normal cones of the polygon

    conv{ m_J : J column basis },   m_J = sum of the exponents in J,

and for a weight ``w`` the minimum of ``w . m_J`` is found by the matroid
greedy algorithm.  All points lie on ``m1 + m2 + m3 = e * dim(I_e)``, so the
polygon is handled in the coordinates ``(m1, m2)`` and weights ``(a, b, c)``
only matter up to adding multiples of ``(1, 1, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import GinfanError, InvalidDirectionError, NoBasisError
from .linalg import EliminationState, RationalMatrix, row_basis, try_extend
from .poly import ExponentVec, monomial_basis

__all__ = [
    "BasisIndexSet",
    "ColumnMatroid",
    "FanVertex",
    "DegreeFanComponent",
    "ConeLocation",
    "RefinedFan",
    "column_matroid",
    "greedy_min_basis",
    "support_vertex",
    "enumerate_vertices",
    "locate_cone",
    "refine",
    "canonical_direction",
    "polygon_certificates",
]

Point = tuple[int, int, int]
Weight = tuple[int, int, int]


def _dot(w: Sequence[int], m: Sequence[int]) -> int:
    return w[0] * m[0] + w[1] * m[1] + w[2] * m[2]


def _primitive(a: int, b: int) -> tuple[int, int]:
    g = gcd(a, b)
    return (a // g, b // g) if g else (0, 0)


def canonical_direction(w: Sequence[int]) -> tuple[int, int]:
    """Primitive ``(a, b)`` with ``(a, b, 0)`` equivalent to ``w`` mod (1, 1, 1)."""
    a, b = w[0] - w[2], w[1] - w[2]
    if a == 0 and b == 0:
        raise InvalidDirectionError(f"{tuple(w)} is a multiple of (1, 1, 1)")
    return _primitive(a, b)


@dataclass(frozen=True)
class BasisIndexSet:
    elements: tuple[ExponentVec, ...]

    @property
    def m(self) -> Point:
        return (sum(nu[0] for nu in self.elements),
                sum(nu[1] for nu in self.elements),
                sum(nu[2] for nu in self.elements))

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class FanVertex:
    m: Point
    certificate: Weight
    witness: BasisIndexSet = field(compare=False)


@dataclass(frozen=True)
class DegreeFanComponent:
    """Vertices of ``conv M(I, e)`` in counter-clockwise order in (m1, m2)."""

    degree: int
    vertices: tuple[FanVertex, ...]
    ideal_dim: int

    @property
    def count(self) -> int:
        return len(self.vertices)

    def points(self) -> tuple[Point, ...]:
        return tuple(v.m for v in self.vertices)

    def point_set(self) -> frozenset[Point]:
        return frozenset(self.points())


@dataclass(frozen=True)
class ConeLocation:
    vertex: FanVertex
    value: int
    strict: bool


class ColumnMatroid:
    """Column matroid of ``A`` with exponent labels on the columns.

    Only a row-echelon basis of the row space is kept; row operations do not
    change which column sets are independent.
    """

    def __init__(self, A: RationalMatrix, labels: Sequence[ExponentVec] | None = None):
        if labels is None:
            labels = _infer_labels(A.cols)
        labels = tuple(tuple(nu) for nu in labels)
        if len(labels) != A.cols:
            raise ValueError(f"{len(labels)} labels for {A.cols} columns")
        R = row_basis(A)
        self.labels = labels
        self.rank = R.rows
        self.columns = [R.col(j) for j in range(R.cols)]
        self.degree = sum(labels[0]) if labels else 0

    def greedy(self, key) -> BasisIndexSet:
        if self.rank == 0:
            raise NoBasisError("rank zero: no column basis exists")
        order = sorted(range(len(self.labels)), key=lambda j: (key(self.labels[j]), j))
        state = EliminationState(self.rank)
        for j in order:
            state, _ = try_extend(state, self.columns[j], j)
            if state.size == self.rank:
                break
        return BasisIndexSet(tuple(self.labels[j] for j in sorted(state.selected)))


def _infer_labels(ncols: int) -> tuple[ExponentVec, ...]:
    e = 0
    while (e + 1) * (e + 2) // 2 < ncols:
        e += 1
    if (e + 1) * (e + 2) // 2 != ncols:
        raise ValueError(f"{ncols} columns is not the size of a monomial basis")
    return monomial_basis(e)


@lru_cache(maxsize=128)
def _cached_matroid(A: RationalMatrix, labels) -> ColumnMatroid:
    return ColumnMatroid(A, labels)


def column_matroid(A, labels=None) -> ColumnMatroid:
    if isinstance(A, ColumnMatroid):
        return A
    return _cached_matroid(A, None if labels is None else tuple(map(tuple, labels)))


def greedy_min_basis(A, columns: Sequence[ExponentVec] | None, omega: Sequence[int],
                     tiebreak: Sequence[int] | None = None) -> BasisIndexSet:
    """Column basis ``J`` minimising ``omega . m_J``.

    Columns are scanned by increasing ``omega . nu``; equal weights are
    ordered by ``tiebreak . nu`` when given, then by column position, which
    for ``monomial_basis`` labels means revlex-largest first.  Sorting on a
    lexicographic weight keeps the greedy theorem valid, so with a tiebreak
    the result also minimises ``tiebreak . m_J`` among the ``omega``-optimal
    bases.
    """
    M = column_matroid(A, columns)
    if tiebreak is None:
        return M.greedy(lambda nu: _dot(omega, nu))
    return M.greedy(lambda nu: (_dot(omega, nu), _dot(tiebreak, nu)))


def support_vertex(A, direction: tuple[int, int],
                   columns: Sequence[ExponentVec] | None = None) -> tuple[Point, int, BasisIndexSet]:
    """Vertex of ``conv M`` minimising ``a*m1 + b*m2`` for ``direction = (a, b)``.

    Ties along a face are broken by the perpendicular ``(-b, a)``, which
    picks the endpoint of the face, so the returned point is always a
    vertex.  Returns ``(m, value, J)``.
    """
    a, b = direction
    if a == 0 and b == 0:
        raise InvalidDirectionError("direction (0, 0)")
    J = greedy_min_basis(A, columns, (a, b, 0), tiebreak=(-b, a, 0))
    m = J.m
    return m, a * m[0] + b * m[1], J


def _cross(o, p, q) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def polygon_certificates(points: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Strict minimising directions for the vertices of a convex polygon.

    ``points`` are 2D vertices in counter-clockwise order.  A vertex of a
    proper polygon gets the sum of the inward normals of its two edges;
    segment endpoints get the direction towards the other endpoint.
    """
    k = len(points)
    if k == 1:
        return [(1, 0)]
    if k == 2:
        (px, py), (qx, qy) = points
        return [_primitive(qx - px, qy - py), _primitive(px - qx, py - qy)]
    normals = []
    for i in range(k):
        p, q = points[i], points[(i + 1) % k]
        normals.append(_primitive(p[1] - q[1], q[0] - p[0]))
    return [_primitive(normals[i - 1][0] + normals[i][0], normals[i - 1][1] + normals[i][1])
            for i in range(k)]


def enumerate_vertices(A, columns: Sequence[ExponentVec] | None = None) -> DegreeFanComponent:
    """All vertices of ``conv M(I, e)`` by a support-function sweep.

    Start from the support points for ``(1, 0)`` and ``(-1, 0)``; for each
    gap between consecutive known vertices probe the outward normal of the
    chord and split it whenever the probe finds a point strictly outside.
    Every vertex is then re-checked: its certificate is verified against
    the other vertices exactly and one more greedy call must land on it.
    """
    M = column_matroid(A, columns)
    if M.rank == 0:
        raise NoBasisError("rank zero: no column basis exists")
    found: dict[tuple[int, int], BasisIndexSet] = {}

    def probe(d):
        m, value, J = support_vertex(M, d)
        found.setdefault((m[0], m[1]), J)
        return (m[0], m[1]), value

    def chain(p, q):
        # vertices strictly right of the directed chord p -> q, in ccw order
        out = []
        stack = [(p, q)]
        while stack:
            p, q = stack.pop()
            if p is None:
                out.append(q)
                continue
            n = _primitive(p[1] - q[1], q[0] - p[0])
            r, value = probe(n)
            if value < n[0] * p[0] + n[1] * p[1]:
                stack.append((r, q))
                stack.append((None, r))
                stack.append((p, r))
        return out

    p, _ = probe((1, 0))
    q, _ = probe((-1, 0))
    if p == q:
        hull = [p]
    else:
        hull = [p] + chain(p, q) + [q] + chain(q, p)

    total = M.rank * M.degree
    pts3 = [(x, y, total - x - y) for x, y in hull]
    certs = polygon_certificates(hull)
    vertices = []
    for m, (a, b) in zip(pts3, certs):
        w = (a, b, 0)
        v = _dot(w, m)
        if any(_dot(w, o) <= v for o in pts3 if o != m):
            raise GinfanError(f"certificate {w} does not isolate vertex {m}")
        J = greedy_min_basis(M, None, w)
        if J.m != m:
            raise GinfanError(f"greedy under certificate {w} gives {J.m}, expected {m}")
        vertices.append(FanVertex(m, w, J))
    return DegreeFanComponent(M.degree, tuple(vertices), M.rank)


def locate_cone(component: DegreeFanComponent, A, omega: Sequence[int],
                columns: Sequence[ExponentVec] | None = None) -> ConeLocation:
    """Vertex whose normal cone contains ``omega``; ``strict`` if unique.

    ``A`` may be ``None``; when given, the minimum value is cross-checked
    with a greedy call on the matrix itself.
    """
    values = [_dot(omega, v.m) for v in component.vertices]
    best = min(values)
    hits = [v for v, val in zip(component.vertices, values) if val == best]
    if A is not None:
        J = greedy_min_basis(A, columns, omega)
        if _dot(omega, J.m) != best:
            raise GinfanError("component does not belong to this matrix")
    return ConeLocation(min(hits, key=lambda v: v.m), best, len(hits) == 1)


# --------------------------------------------------------------------------
# refinement across degrees


@dataclass(frozen=True)
class RefinedFan:
    """Normal fan of a Minkowski sum: the common refinement of the inputs."""

    count: int
    vertices: tuple[Point, ...]
    certificates: tuple[Weight, ...]


def _edges(points2d) -> list[tuple[int, int]]:
    k = len(points2d)
    if k == 1:
        return []
    if k == 2:
        (px, py), (qx, qy) = points2d
        return [(qx - px, qy - py), (px - qx, py - qy)]
    return [(points2d[(i + 1) % k][0] - points2d[i][0],
             points2d[(i + 1) % k][1] - points2d[i][1]) for i in range(k)]


def _angle_key(v):
    # half-plane index, then ordering within the half-plane by cross products
    x, y = v
    upper = y > 0 or (y == 0 and x > 0)
    return 0 if upper else 1


def _sort_by_angle(vectors):
    from functools import cmp_to_key

    def cmp(u, v):
        hu, hv = _angle_key(u), _angle_key(v)
        if hu != hv:
            return hu - hv
        c = u[0] * v[1] - u[1] * v[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(vectors, key=cmp_to_key(cmp))


def refine(components: Sequence[DegreeFanComponent]) -> RefinedFan:
    """Common refinement of the components' normal fans.

    Computed as the Minkowski sum of the polygons: the edge vectors of all
    inputs are merged by angle, parallel edges coalesce, and the walk starts
    from the sum of the lowest-leftmost vertices.
    """
    if not components:
        raise ValueError("refine needs at least one component")
    polys2d = [[(m[0], m[1]) for m in c.points()] for c in components]
    start = [0, 0]
    for pts in polys2d:
        low = min(pts, key=lambda p: (p[1], p[0]))
        start[0] += low[0]
        start[1] += low[1]
    merged: list[tuple[int, int]] = []
    for v in _sort_by_angle([e for pts in polys2d for e in _edges(pts)]):
        if merged and merged[-1][0] * v[1] - merged[-1][1] * v[0] == 0 \
                and merged[-1][0] * v[0] + merged[-1][1] * v[1] > 0:
            merged[-1] = (merged[-1][0] + v[0], merged[-1][1] + v[1])
        else:
            merged.append(v)
    pts = [tuple(start)]
    for v in merged[:-1]:
        pts.append((pts[-1][0] + v[0], pts[-1][1] + v[1]))
    total = sum(sum(c.vertices[0].m) for c in components)
    certs = polygon_certificates(pts)
    return RefinedFan(len(pts),
                      tuple((x, y, total - x - y) for x, y in pts),
                      tuple((a, b, 0) for a, b in certs))
