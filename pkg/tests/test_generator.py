import pytest

from polybalance import fixtures, generator
from polybalance.core import Vec3
from polybalance.equilibria import classify
from polybalance.errors import (
    AllFacesTriangular,
    ExcludedTetrahedron,
    GeneralPositionViolated,
    IllegalFaceVector,
)
from polybalance.generator import (
    BendPlan,
    bend_face,
    generate_mono_monostatic,
    seed_585,
    select_bend_vertex,
    verify_mono_monostatic,
)
from polybalance.polyhedron import WeightedPolyhedron, convex_hull, face_vector, validate


def weighted_cube():
    cube = convex_hull([(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)])
    return WeightedPolyhedron(cube, Vec3("9/10", "11/10", "7/10"))


def test_seed_bend_vertex_is_on_the_quadrilateral():
    p = seed_585().shape
    plan = select_bend_vertex(p)
    assert len(p.faces[plan.face]) == 4
    assert plan.vertex in p.faces[plan.face]


def test_cube_bend_vertex_and_tetrahedron_refusal():
    plan = select_bend_vertex(weighted_cube().shape)
    assert plan.face in weighted_cube().shape.vertex_faces[plan.vertex]
    with pytest.raises(AllFacesTriangular):
        select_bend_vertex(fixtures.regular_tetrahedron().shape)


def test_bending_the_seed():
    bent = bend_face(seed_585(), select_bend_vertex(seed_585().shape))
    assert face_vector(bent.shape).as_tuple() == (6, 9, 5)
    assert classify(bent).counts() == (1, 0, 1)
    # every face is now a triangle, so (7, 10, 5) cannot be reached
    with pytest.raises(AllFacesTriangular):
        select_bend_vertex(bent.shape)


def test_bending_a_cube_is_local():
    wp = weighted_cube()
    plan = select_bend_vertex(wp.shape)
    bent = bend_face(wp, plan)
    assert face_vector(bent.shape).as_tuple() == (7, 13, 8)
    assert validate(bent.shape).ok and bent.center == wp.center
    before, after = classify(wp), classify(bent)
    split = {plan.face, 6}
    assert before.unstable_vertices == after.unstable_vertices
    assert before.stable_faces - split == after.stable_faces - split
    assert len(after.stable_faces & split) == (plan.face in before.stable_faces)
    moved = [i for i, (a, b) in enumerate(zip(wp.shape.vertices, bent.shape.vertices)) if a != b]
    assert moved == [plan.vertex]


def test_bend_refuses_a_center_over_the_diagonal():
    cube = weighted_cube().shape
    plan = select_bend_vertex(cube)
    # face x = 0 is split along y + z = 2; put the center above that line
    assert {cube.vertices[i] for i in plan.diagonal} == {Vec3(0, 2, 0), Vec3(0, 0, 2)}
    wp = WeightedPolyhedron(cube, Vec3("9/10", "13/10", "7/10"))
    with pytest.raises(GeneralPositionViolated):
        bend_face(wp, plan)


def test_explicit_bend_step():
    wp = seed_585()
    plan = select_bend_vertex(wp.shape)
    bent = bend_face(wp, BendPlan(plan.vertex, plan.face, plan.diagonal, "1/1000"))
    assert verify_mono_monostatic(bent)


def test_verify_mono_monostatic():
    assert verify_mono_monostatic(seed_585())
    assert not verify_mono_monostatic(fixtures.t0())
    assert not verify_mono_monostatic(fixtures.regular_tetrahedron())


def test_generate_seed_and_one_bend():
    trace = []
    assert generate_mono_monostatic(5, 5, trace) == seed_585()
    assert trace == [("seed", 5, 5)]
    trace = []
    wp = generate_mono_monostatic(6, 5, trace)
    assert face_vector(wp.shape).as_tuple() == (6, 9, 5)
    assert classify(wp).counts() == (1, 0, 1)
    assert [step[0] for step in trace] == ["seed", "bend"]


def test_generate_uses_duality_for_few_faces():
    trace = []
    wp = generate_mono_monostatic(5, 6, trace)
    assert face_vector(wp.shape).as_tuple() == (5, 9, 6)
    assert trace[-1] == ("dual", 5, 6)


def test_generate_rejections():
    with pytest.raises(ExcludedTetrahedron):
        generate_mono_monostatic(4, 4)
    with pytest.raises(IllegalFaceVector):
        generate_mono_monostatic(7, 5)
    with pytest.raises(IllegalFaceVector):
        generate_mono_monostatic(3, 4)


@pytest.mark.parametrize("f,v", [(5, 6), (6, 5), (6, 6), (8, 6), (6, 8), (9, 9), (10, 7), (7, 10)])
def test_generate_various(f, v):
    wp = generate_mono_monostatic(f, v)
    assert face_vector(wp.shape).as_tuple() == (f, f + v - 2, v)
    assert validate(wp.shape).ok
    assert classify(wp).counts() == (1, 0, 1)


def test_generation_is_deterministic():
    first = generate_mono_monostatic(9, 8)
    generator._generate.cache_clear()
    assert generate_mono_monostatic(9, 8) == first
