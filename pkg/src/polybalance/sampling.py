"""Seeded random instances for the property suites.

All samplers take a ``random.Random`` so a single seed reproduces a whole run.
"""
from __future__ import annotations

import random

from gmpy2 import mpq

from .core import AngleClass, Vec3, orient3d
from .equilibria import classify
from .errors import GeometryError
from .polyhedron import Polyhedron, WeightedPolyhedron, convex_hull, tetrahedron
from .vertex_links import dihedral_sign, face_angle_sign

HALF_SIDE = 10**5


def random_point(rng: random.Random, half: int = HALF_SIDE) -> Vec3:
    return Vec3(rng.randint(-half, half), rng.randint(-half, half), rng.randint(-half, half))


def has_right_angle(t: Polyhedron) -> bool:
    for e in t.edges:
        if dihedral_sign(t, e) is AngleClass.RIGHT:
            return True
    for v in range(t.num_vertices):
        for f in t.faces:
            if v in f:
                k = f.index(v)
                if face_angle_sign(t, v, f[k - 1], f[(k + 1) % len(f)]) is AngleClass.RIGHT:
                    return True
    return False


def random_tetrahedron(rng: random.Random, half: int = HALF_SIDE) -> Polyhedron:
    """Integer tetrahedron in the cube ``[-half, half]^3`` with no right angles."""
    while True:
        pts = [random_point(rng, half) for _ in range(4)]
        if orient3d(*pts) == 0:
            continue
        t = tetrahedron(*pts)
        if not has_right_angle(t):
            return t


def random_interior_point(rng: random.Random, p: Polyhedron, spread: int = 1000) -> Vec3:
    """A strict convex combination of all vertices with random positive weights."""
    weights = [rng.randint(1, spread) for _ in p.vertices]
    total = sum(weights)
    acc = Vec3(0, 0, 0)
    for w, v in zip(weights, p.vertices):
        acc = acc + v * w
    return acc * mpq(1, total)


def random_classified_polyhedron(rng: random.Random, min_points: int = 6, max_points: int = 20,
                                 half: int = HALF_SIDE):
    """Hull of random points with a random interior center, plus its
    classification; redrawn until every equilibrium test is strict."""
    while True:
        n = rng.randint(min_points, max_points)
        try:
            hull = convex_hull([random_point(rng, half) for _ in range(n)])
        except GeometryError:
            continue
        wp = WeightedPolyhedron(hull, random_interior_point(rng, hull))
        report = classify(wp)
        if report.reliable:
            return wp, report


def random_weighted_polyhedron(rng: random.Random, min_points: int = 6, max_points: int = 20,
                               half: int = HALF_SIDE) -> WeightedPolyhedron:
    return random_classified_polyhedron(rng, min_points, max_points, half)[0]


def random_direction(rng: random.Random, half: int = 1000) -> Vec3:
    while True:
        v = random_point(rng, half)
        if not v.is_zero():
            return v
