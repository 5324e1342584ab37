import random

from polybalance.core import orient3d
from polybalance.sampling import (
    has_right_angle,
    random_classified_polyhedron,
    random_interior_point,
    random_tetrahedron,
)


def test_random_tetrahedra_are_proper():
    rng = random.Random(11)
    for _ in range(50):
        t = random_tetrahedron(rng)
        assert orient3d(*t.vertices) != 0
        assert not has_right_angle(t)
        assert t.contains_strictly(random_interior_point(rng, t))


def test_sampling_is_reproducible():
    a = random_classified_polyhedron(random.Random(5))
    b = random_classified_polyhedron(random.Random(5))
    assert a == b and a[1].reliable
