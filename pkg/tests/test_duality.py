import random

from hypothesis import given, settings
from hypothesis import strategies as st

from polybalance import fixtures
from polybalance.core import Vec3
from polybalance.duality import check_prop_polar, dual_edge, polar_dual, saddles_correspond
from polybalance.equilibria import classify
from polybalance.polyhedron import face_vector, validate
from polybalance.sampling import random_classified_polyhedron


def test_regular_tetrahedron_dual():
    dual, corr = polar_dual(fixtures.regular_tetrahedron())
    assert set(dual.shape.vertices) == {Vec3(-1, -1, -1), Vec3(-1, 1, 1), Vec3(1, -1, 1), Vec3(1, 1, -1)}
    # face i lies opposite vertex i, and its dual vertex is minus that vertex
    for i, v in enumerate(fixtures.REGULAR_TETRAHEDRON_VERTICES):
        assert dual.shape.vertices[corr.face_to_vertex[i]] == -Vec3.of(v)
    assert validate(dual.shape).ok
    assert check_prop_polar(fixtures.regular_tetrahedron())


def test_double_dual_is_the_translated_original():
    wp = fixtures.t0()
    back, _ = polar_dual(polar_dual(wp)[0])
    assert back.shape.vertices == wp.shape.translated(-wp.center).vertices
    assert face_vector(polar_dual(wp)[0].shape).as_tuple() == (4, 6, 4)


def test_dual_of_monostable_t0_is_monounstable():
    dual, _ = polar_dual(fixtures.t0())
    report = classify(dual)
    assert report.unstable_vertices == {3}
    assert report.S == 2
    assert check_prop_polar(fixtures.t0())


def test_seed_dual_is_mono_monostatic():
    wp = fixtures.seed585()
    dual, corr = polar_dual(wp)
    report, dreport = classify(wp), classify(dual)
    assert dreport.counts() == (1, 0, 1)
    assert {corr.vertex_to_face[v] for v in report.unstable_vertices} == dreport.stable_faces


def test_dual_edges_connect_adjacent_face_vertices():
    wp = fixtures.seed585()
    dual, _ = polar_dual(wp)
    dual_edges = {e.endpoints for e in dual.shape.edges}
    assert {dual_edge(wp.shape, e) for e in range(len(wp.shape.edges))} == dual_edges


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_polar_correspondence_on_random_polyhedra(seed):
    wp, _ = random_classified_polyhedron(random.Random(seed), max_points=12)
    assert check_prop_polar(wp)
    assert saddles_correspond(wp)
    dual, _ = polar_dual(wp)
    assert validate(dual.shape).ok
    back, _ = polar_dual(dual)
    assert back.shape.vertices == wp.shape.translated(-wp.center).vertices
