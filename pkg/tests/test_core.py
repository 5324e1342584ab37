from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from polybalance import fixtures
from polybalance.core import (
    AngleClass,
    Plane,
    Vec3,
    angle_sign,
    intersect_line_plane,
    orient3d,
    project_point_to_line,
    project_point_to_plane,
    rat,
    rat_to_json,
)
from polybalance.errors import DegenerateInput, ParallelLine, SchemaError

coord = st.integers(-10**6, 10**6)
vec = st.builds(Vec3, coord, coord, coord)
fraction = st.fractions(max_denominator=10**6)


def test_angle_sign_examples():
    o = Vec3(0, 0, 0)
    assert angle_sign(o, Vec3(1, 0, 0), Vec3(0, 1, 0)) is AngleClass.RIGHT
    assert angle_sign(o, Vec3(1, 0, 0), Vec3(1, 1, 0)) is AngleClass.ACUTE
    assert angle_sign(o, Vec3(1, 0, 0), Vec3(-1, 1, 0)) is AngleClass.OBTUSE


def test_intersect_line_plane_examples():
    z1 = Plane(Vec3(0, 0, 1), 1)
    point, t = intersect_line_plane(Vec3(0, 0, 0), Vec3(0, 0, 2), z1)
    assert point == Vec3(0, 0, 1) and t == mpq(1, 2)
    with pytest.raises(ParallelLine):
        intersect_line_plane(Vec3(0, 0, 1), Vec3(1, 0, 1), z1)


def test_t0_first_cut_is_inside_segment():
    # on the path 0-3-1-2 the roles A, B, C, D are vertices 0, 3, 1, 2
    t = fixtures.t0().shape
    A, B, C, D = (t.vertices[i] for i in (0, 3, 1, 2))
    n_abd = (B - A).cross(D - A)
    cut = Plane.with_normal((B - A).cross(n_abd), A)
    point, t_e = intersect_line_plane(C, D, cut)
    assert 0 < t_e < 1
    # independent parametric solve: s = (c - n.C) / n.(D - C)
    n = cut.normal
    s = (cut.offset - n.dot(C)) / n.dot(D - C)
    assert s == t_e and point == C + (D - C) * s


def test_projection_examples():
    assert project_point_to_plane(Vec3(3, 4, 5), Plane(Vec3(0, 0, 1), 0)) == Vec3(3, 4, 0)
    foot, t = project_point_to_line(Vec3(1, 1, 0), Vec3(0, 0, 0), Vec3(2, 0, 0))
    assert foot == Vec3(1, 0, 0) and t == mpq(1, 2)


def test_t0_center_projects_inside_face_abc():
    wp = fixtures.t0()
    t = wp.shape
    face = t.faces[3]
    assert set(face) == {0, 1, 2}
    foot = project_point_to_plane(wp.center, t.planes[3])
    n = t.planes[3].normal
    a, b, c = (t.vertices[i] for i in face)
    # point-in-triangle by three orientation signs
    signs = [(q - p).cross(foot - p).dot(n) for p, q in ((a, b), (b, c), (c, a))]
    assert all(s > 0 for s in signs)


def test_rat_parsing():
    assert rat("3/6") == mpq(1, 2)
    assert rat(" -7 ") == -7
    assert rat(Fraction(2, 3)) == mpq(2, 3)
    for bad in (0.5, True, "1/0", "x", None):
        with pytest.raises(SchemaError):
            rat(bad)


def test_plane_through_collinear_points_is_refused():
    with pytest.raises(DegenerateInput):
        Plane.through(Vec3(0, 0, 0), Vec3(1, 1, 1), Vec3(2, 2, 2))


@given(fraction)
def test_rat_json_round_trip(x):
    q = mpq(x.numerator, x.denominator)
    assert rat(rat_to_json(q)) == q


@given(vec, vec)
def test_cross_is_orthogonal_and_antisymmetric(a, b):
    c = a.cross(b)
    assert c.dot(a) == 0 and c.dot(b) == 0
    assert b.cross(a) == -c


@given(vec, vec, vec, vec)
def test_orient3d_flips_under_swap(a, b, c, d):
    assert orient3d(a, b, c, d) == -orient3d(b, a, c, d)
    assert orient3d(a, b, c, d) == orient3d(b, c, a, d)


@given(vec, vec, vec)
def test_projection_lands_on_plane(o, n, p):
    if n.is_zero():
        return
    plane = Plane.with_normal(n, p)
    foot = project_point_to_plane(o, plane)
    assert plane.evaluate(foot) == 0
    assert (o - foot).cross(n).is_zero()


@given(vec, vec, vec, vec)
def test_line_plane_intersection_lies_on_both(a, b, n, p):
    if n.is_zero():
        return
    plane = Plane.with_normal(n, p)
    try:
        point, t = intersect_line_plane(a, b, plane)
    except ParallelLine:
        assert n.dot(b - a) == 0
        return
    assert plane.evaluate(point) == 0
    assert point == a + (b - a) * t
