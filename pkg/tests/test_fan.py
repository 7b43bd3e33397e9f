import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import g0_family_matrix, generic_family_matrix, pluecker
from ginfan.errors import InvalidDirectionError, NoBasisError
from ginfan.family import family_ideal
from ginfan.fan import (DegreeFanComponent, FanVertex, canonical_direction,
                        enumerate_vertices, greedy_min_basis, locate_cone, refine,
                        support_vertex)
from ginfan.linalg import RationalMatrix
from ginfan.oracle import brute_M, brute_vertices
from ginfan.poly import degree_matrix


def dot(w, m):
    return sum(a * b for a, b in zip(w, m))


def brute_min(A, omega):
    return min(dot(omega, m) for m in brute_M(pluecker(A)))


def test_greedy_monomial_ideal_unique_basis():
    A, _ = degree_matrix(family_ideal(3), 3)
    for omega in [(1, 2, 3), (-5, -2, 7), (0, 0, 0)]:
        assert greedy_min_basis(A, None, omega).m == (3, 6, 3)


def test_greedy_g0_examples():
    A = g0_family_matrix(3)
    J = greedy_min_basis(A, None, (-5, -2, 7))
    assert J.m == (6, 6, 0)
    assert sorted(J.elements) == [(0, 3, 0), (1, 2, 0), (2, 1, 0), (3, 0, 0)]
    assert brute_min(A, (-5, -2, 7)) == dot((-5, -2, 7), (6, 6, 0))
    assert greedy_min_basis(A, None, (0, 0, 1)).m[2] == 0


def test_greedy_zero_matrix():
    with pytest.raises(NoBasisError):
        greedy_min_basis(RationalMatrix.zeros(3, 10), None, (1, 0, 0))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_greedy_matches_brute_force(d):
    A = generic_family_matrix(d)
    M = brute_M(pluecker(A))
    rng = random.Random(d)
    for _ in range(120):
        omega = tuple(rng.randint(-20, 20) for _ in range(3))
        J = greedy_min_basis(A, None, omega)
        assert J.m in M
        assert dot(omega, J.m) == min(dot(omega, m) for m in M)


def test_support_vertex_examples():
    A = g0_family_matrix(3)
    m, value, _ = support_vertex(A, (-4, -3))
    assert m == (6, 6, 0) and value == -42
    M = brute_M(pluecker(A))
    m, value, _ = support_vertex(A, (1, 0))
    assert value == min(p[0] for p in M)
    mono, _ = degree_matrix(family_ideal(3), 3)
    assert support_vertex(mono, (2, -7))[0] == (3, 6, 3)
    with pytest.raises(InvalidDirectionError):
        support_vertex(A, (0, 0))


def test_support_vertex_returns_vertices():
    # directions normal to hull edges must still give hull vertices
    A = g0_family_matrix(3)
    hull = brute_vertices(brute_M(pluecker(A)))
    for i in range(len(hull)):
        p, q = hull[i], hull[(i + 1) % len(hull)]
        n = (p[1] - q[1], q[0] - p[0])
        assert support_vertex(A, n)[0] in hull


def test_enumerate_monomial_ideal():
    for d in (3, 4, 7):
        A, _ = degree_matrix(family_ideal(d), d)
        comp = enumerate_vertices(A)
        assert comp.count == 1
        assert comp.ideal_dim == d + 1


@pytest.mark.parametrize("A_fn,d", [(g0_family_matrix, 3), (generic_family_matrix, 3),
                                    (generic_family_matrix, 4), (generic_family_matrix, 5)])
def test_enumerate_matches_brute_hull(A_fn, d):
    A = A_fn(d)
    comp = enumerate_vertices(A)
    assert comp.point_set() == set(brute_vertices(brute_M(pluecker(A))))


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_component_invariants(d):
    A = generic_family_matrix(d)
    comp = enumerate_vertices(A)
    pts = comp.points()
    for v in comp.vertices:
        assert sum(v.m) == d * (d + 1)
        assert v.witness.m == v.m
        others = [dot(v.certificate, m) for m in pts if m != v.m]
        assert all(dot(v.certificate, v.m) < o for o in others)
    # counter-clockwise and convex in (m1, m2)
    k = len(pts)
    for i in range(k):
        o, a, b = pts[i], pts[(i + 1) % k], pts[(i + 2) % k]
        assert (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]) > 0


def test_enumerate_is_deterministic():
    A = generic_family_matrix(4)
    assert enumerate_vertices(A) == enumerate_vertices(A)


def test_locate_cone_single_vertex():
    A, _ = degree_matrix(family_ideal(3), 3)
    comp = enumerate_vertices(A)
    loc = locate_cone(comp, A, (4, -1, 9))
    assert loc.vertex.m == (3, 6, 3) and loc.strict


def test_locate_cone_g0_omega0():
    A = g0_family_matrix(3)
    comp = enumerate_vertices(A)
    loc = locate_cone(comp, A, (-5, -2, 7))
    assert loc.vertex.m == (6, 6, 0) and loc.strict


def test_locate_cone_generic_seven():
    A = generic_family_matrix(7)
    comp = enumerate_vertices(A)
    loc = locate_cone(comp, A, (-9, -6, 15))
    # J(0) is all eight xy-monomials of degree 7
    assert loc.vertex.m == (28, 28, 0) and loc.strict
    # omega(2) lands on the same region as omega(1), not on a z^2 vertex
    loc2 = locate_cone(comp, A, (-5, -2, 7))
    assert loc2.vertex.m == (34, 21, 1) and loc2.strict


@given(st.tuples(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30)),
       st.integers(-50, 50))
@settings(max_examples=100, deadline=None)
def test_locate_cone_shift_invariance(omega, c):
    A = generic_family_matrix(4)
    comp = enumerate_vertices(A)
    shifted = tuple(w + c for w in omega)
    a, b = locate_cone(comp, A, omega), locate_cone(comp, A, shifted)
    assert a.vertex == b.vertex and a.strict == b.strict


def test_canonical_direction():
    assert canonical_direction((-5, -2, 7)) == (-4, -3)
    assert canonical_direction((2, 4, 0)) == (1, 2)
    with pytest.raises(InvalidDirectionError):
        canonical_direction((3, 3, 3))


def _component(points):
    return DegreeFanComponent(0, tuple(FanVertex(p, (1, 0, 0), None) for p in points), 0)


def test_refine_examples():
    comp = enumerate_vertices(generic_family_matrix(4))
    one = refine([comp])
    assert one.count == comp.count
    assert set(one.vertices) == comp.point_set()
    assert refine([comp, comp]).count == comp.count
    with pytest.raises(ValueError):
        refine([])


def test_refine_square_and_triangle():
    square = _component([(0, 0, 0), (1, 0, -1), (1, 1, -2), (0, 1, -1)])
    tri = _component([(0, 0, 0), (1, 0, -1), (0, 1, -1)])
    # the diagonal edge of the triangle adds two new vertices
    assert refine([square, tri]).count == 5
    point = _component([(2, 2, -4)])
    assert refine([tri, point]).count == 3


def test_refine_never_coarsens():
    comps = [enumerate_vertices(generic_family_matrix(d)) for d in (3, 4, 5)]
    assert refine(comps).count >= max(c.count for c in comps)
