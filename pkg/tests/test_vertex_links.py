import random
from collections import Counter

import pytest

from polybalance import fixtures
from polybalance.core import AngleClass, Vec3
from polybalance.errors import DegenerateDirections, NotATetrahedron, NotIncident
from polybalance.polyhedron import tetrahedron
from polybalance.sampling import random_direction
from polybalance.vertex_links import (
    ADMISSIBLE_SIGNATURES,
    EdgeClass,
    VertexSignature,
    admissible_signature,
    classify_spherical_triangle,
    dihedral_sign,
    face_angle_sign,
    lemma_violations,
    vertex_link,
    vertex_signature,
)


def test_regular_tetrahedron_is_acute_everywhere():
    t = fixtures.regular_tetrahedron().shape
    for apex in range(4):
        u, w = [x for x in range(4) if x != apex][:2]
        assert face_angle_sign(t, apex, u, w) is AngleClass.ACUTE
    assert all(dihedral_sign(t, e) is AngleClass.ACUTE for e in t.edges)
    assert all(vertex_signature(t, v).pair() == (0, 0) for v in range(4))


def test_case_one_angle_at_b_is_obtuse():
    t = fixtures.cycle_case_I().shape
    assert face_angle_sign(t, 1, 0, 2) is AngleClass.OBTUSE


def test_cube_corner_is_right():
    t = tetrahedron((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert face_angle_sign(t, 0, 1, 2) is AngleClass.RIGHT
    sig = vertex_signature(t, 0)
    assert sig.right_face_angles == 3 and sig.right_dihedrals == 3


def test_face_angle_needs_incident_vertices():
    t = fixtures.seed585().shape
    with pytest.raises(NotIncident):
        face_angle_sign(t, 0, 3, 4)  # 3 is not adjacent to 0


def test_t0_obtuse_dihedrals():
    t = fixtures.t0().shape
    obtuse = {e.endpoints for e in t.edges if dihedral_sign(t, e) is AngleClass.OBTUSE}
    # A-D, D-B, B-C: the path A-D-B-C
    assert obtuse == {(0, 3), (1, 3), (1, 2)}
    for f in t.faces:
        around = {(min(a, b), max(a, b)) for a, b in zip(f, f[1:] + f[:1])}
        assert not around <= obtuse


def test_cycle_case_signatures():
    assert vertex_signature(fixtures.cycle_case_I().shape, 0).pair() == (0, 1)
    assert vertex_signature(fixtures.cycle_case_III().shape, 3).pair() == (2, 1)


def test_signatures_need_a_tetrahedron():
    with pytest.raises(NotATetrahedron):
        vertex_signature(fixtures.seed585().shape, 0)
    with pytest.raises(NotATetrahedron):
        vertex_link(fixtures.seed585().shape, 0)


def test_admissible_signature_cells():
    assert admissible_signature((0, 0))
    assert not admissible_signature((1, 0))
    assert admissible_signature(VertexSignature(3, 3))
    assert len(ADMISSIBLE_SIGNATURES) == 7


def test_orthonormal_triangle_is_all_quarter_and_right():
    tri = classify_spherical_triangle(Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1))
    assert tri.edge_classes == (EdgeClass.QUARTER,) * 3
    assert tri.angle_classes == (AngleClass.RIGHT,) * 3
    assert not tri.generic


def test_narrow_triangle_is_short_and_acute():
    tri = classify_spherical_triangle(Vec3(10, 1, 1), Vec3(10, -1, 1), Vec3(10, 0, -1))
    assert tri.short_edges == 3 and tri.acute_angles == 3
    assert lemma_violations(tri) == []


def test_degenerate_directions():
    with pytest.raises(DegenerateDirections):
        classify_spherical_triangle(Vec3(1, 0, 0), Vec3(2, 0, 0), Vec3(0, 0, 1))
    with pytest.raises(DegenerateDirections):
        classify_spherical_triangle(Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0))


def test_vertex_link_matches_signature():
    t = fixtures.cycle_case_III().shape
    for v in range(4):
        link = vertex_link(t, v)
        sig = vertex_signature(t, v)
        # face angles are link edges, dihedrals are link angles
        assert (link.long_edges, link.obtuse_angles) == sig.pair()


def test_random_spherical_triangles_stay_admissible():
    rng = random.Random(7)
    cells = Counter()
    for _ in range(5000):
        try:
            tri = classify_spherical_triangle(*(random_direction(rng) for _ in range(3)))
        except DegenerateDirections:
            continue
        if tri.generic:
            assert lemma_violations(tri) == []
            cells[(tri.long_edges, tri.obtuse_angles)] += 1
    assert set(cells) <= ADMISSIBLE_SIGNATURES


# one seeded witness per admissible (long edges, obtuse angles) cell
CELL_WITNESSES = {
    (0, 0): [(4, -5, 1), (3, -3, 3), (3, -2, 1)],
    (0, 1): [(1, 3, 0), (4, 0, 2), (-1, 5, 3)],
    (1, 1): [(1, -2, -4), (2, -5, 1), (1, 4, -5)],
    (2, 1): [(5, 3, -5), (1, 5, -2), (1, -5, 3)],
    (2, 2): [(-5, 2, 0), (4, 3, -2), (3, 1, 2)],
    (2, 3): [(-2, 2, 2), (3, -2, 0), (-2, 5, -2)],
    (3, 3): [(-1, -1, -3), (1, 4, -1), (-3, -5, 3)],
}


@pytest.mark.parametrize("cell", sorted(CELL_WITNESSES))
def test_admissible_cell_witnesses(cell):
    tri = classify_spherical_triangle(*(Vec3.of(d) for d in CELL_WITNESSES[cell]))
    assert tri.generic
    assert (tri.long_edges, tri.obtuse_angles) == cell
    assert lemma_violations(tri) == []
