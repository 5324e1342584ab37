import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polybalance import fixtures
from polybalance.core import Vec3
from polybalance.errors import CenterNotInterior, DegenerateInput, DegenerateTetrahedron, SchemaError, ValidationFailed
from polybalance.polyhedron import (
    FaceVector,
    Polyhedron,
    convex_hull,
    dumps,
    face_vector,
    is_legal,
    parse,
    serialize,
    tetrahedron,
    validate,
)
from polybalance.sampling import random_point

CUBE = [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)]


def test_regular_tetrahedron_is_valid():
    assert validate(fixtures.regular_tetrahedron().shape).ok


def test_reversed_face_is_an_orientation_violation():
    t = fixtures.regular_tetrahedron().shape
    faces = list(t.faces)
    faces[0] = tuple(reversed(faces[0]))
    report = validate(Polyhedron(t.vertices, tuple(faces)))
    assert not report.ok
    assert "orientation" in report.kinds()


def test_build_flips_inward_faces():
    t = fixtures.regular_tetrahedron().shape
    faces = [tuple(reversed(f)) if i % 2 else f for i, f in enumerate(t.faces)]
    rebuilt = Polyhedron.build(t.vertices, faces)
    assert rebuilt.reoriented == (1, 3)
    assert validate(rebuilt).ok


def test_t0_is_valid_and_face_3_is_abc():
    t = fixtures.t0().shape
    assert validate(t).ok
    assert set(t.faces[3]) == {0, 1, 2}


def test_tetrahedron_examples():
    t = tetrahedron((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert t.num_faces == 4 and validate(t).ok
    for i, f in enumerate(t.faces):
        assert i not in f
    with pytest.raises(DegenerateTetrahedron):
        tetrahedron((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))


def test_face_vector_examples():
    fv = face_vector(fixtures.t0().shape)
    assert fv.as_tuple() == (4, 6, 4) and is_legal(fv)
    assert is_legal(FaceVector(5, 8, 5))
    assert not is_legal(FaceVector(7, 10, 5))
    assert not is_legal(FaceVector(5, 9, 5))


def test_validate_reports_nonconvexity():
    # push the apex of a square pyramid below the base plane's far side
    verts = [(0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0), (1, 1, 1), (1, 1, -1)]
    faces = [(0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4), (0, 3, 2, 1)]
    report = validate(Polyhedron.build(verts, faces))
    assert "unused_vertex" in report.kinds()
    assert "convexity" in report.kinds()


def test_validate_reports_nonplanar_face():
    verts = [(0, 0, 0), (2, 0, 0), (2, 2, 1), (0, 2, 0), (1, 1, 3)]
    faces = [(0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4), (0, 3, 2, 1)]
    assert "nonplanar_face" in validate(Polyhedron.build(verts, faces)).kinds()


def test_json_round_trip_t0():
    text = dumps(fixtures.t0())
    assert dumps(parse(text)) == text
    assert serialize(parse(json.loads(text))) == json.loads(text)


def test_center_on_face_is_rejected():
    data = serialize(fixtures.regular_tetrahedron())
    data["center"] = [1, 1, 1]
    with pytest.raises(CenterNotInterior):
        parse(data)
    data["center"] = ["1/3", "1/3", "-1/3"]  # on the plane of a face
    with pytest.raises(CenterNotInterior):
        parse(data)


def test_seed_fixture_parses_with_its_center():
    wp = parse(dumps(fixtures.seed585()))
    assert wp.center == Vec3(10790, 643, 84)
    assert face_vector(wp.shape).as_tuple() == (5, 8, 5)


@pytest.mark.parametrize("bad", [
    "not json",
    "[]",
    '{"vertices": [], "faces": []}',
    '{"vertices": [[0, 0, 0.5]], "faces": [], "center": [0, 0, 0]}',
    '{"vertices": [[0, 0]], "faces": [], "center": [0, 0, 0]}',
    '{"vertices": [[0, 0, 0]], "faces": [["a"]], "center": [0, 0, 0]}',
])
def test_schema_errors(bad):
    with pytest.raises(SchemaError):
        parse(bad)


def test_invalid_shape_raises_validation_failed():
    data = serialize(fixtures.regular_tetrahedron())
    data["faces"] = data["faces"][:3]
    with pytest.raises(ValidationFailed) as info:
        parse(data)
    assert not info.value.report.ok


def test_cube_hull_merges_coplanar_triangles():
    hull = convex_hull(CUBE + [(1, 1, 1), (1, 0, 1)])
    assert face_vector(hull).as_tuple() == (6, 12, 8)
    assert all(len(f) == 4 for f in hull.faces)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(4, 30))
def test_random_hulls_are_valid_and_legal(seed, n):
    rng = random.Random(seed)
    pts = [random_point(rng, 1000) for _ in range(n)]
    try:
        hull = convex_hull(pts)
    except DegenerateInput:
        return  # all points coplanar
    assert validate(hull).ok
    assert is_legal(face_vector(hull))
    for p in pts:
        assert all(pl.evaluate(p) <= 0 for pl in hull.planes)
