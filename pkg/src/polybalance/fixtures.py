"""Built-in weighted polyhedra, addressable from the CLI as ``fixtures:<name>``.

T0's second vertex is stored as (100000, 0, 0).  Read as (0, 0, 100000) the
stored center falls outside the solid and the tetrahedron has only two
obtuse dihedrals; with the coordinates of that one vertex permuted, the
center is interior and the body is monostable on face ABC.
"""
from __future__ import annotations

from .core import Vec3, centroid
from .polyhedron import Polyhedron, WeightedPolyhedron, tetrahedron

T0_VERTICES = ((0, 0, 0), (100000, 0, 0), (153600, 44400, 0), (112200, 7800, 6400))
T0_VERTICES_UNCORRECTED = ((0, 0, 0), (0, 0, 100000), (153600, 44400, 0), (112200, 7800, 6400))
T0_CENTER = (104200, 4300, 100)

NINE_CENTERS_VERTICES = ((0, 0, 0), (100000, 0, 0), (50000, 41429, 0), (13549, 13544, 11223))
# M_ij has i stable and j unstable equilibria
NINE_CENTERS = {
    "M22": (15884, 5116, 835),
    "M23": (46670, 11911, 3061),
    "M24": (28497, 5544, 2041),
    "M32": (11400, 7243, 2597),
    "M33": (33447, 17389, 3061),
    "M34": (23866, 8138, 3339),
    "M42": (21845, 14097, 7142),
    "M43": (42514, 9100, 6122),
    "M44": (24407, 10239, 1391),
}

SEED585_VERTICES = ((0, 0, 0), (10000, 0, 0), (10000, 2890, 0), (11216, 1008, 0), (11216, 968, 280))
SEED585_FACES = ((0, 1, 4), (0, 2, 3, 1), (0, 4, 2), (1, 3, 4), (4, 3, 2))
SEED585_CENTER = (10790, 643, 84)

# vertices listed in cycle order A, B, C, D so that A-B-C-D-A is the obtuse cycle
CYCLE_CASE_I_VERTICES = ((-10, 0, 0), (0, 2, 0), (1, 0, 1), (0, -2, 0))
CYCLE_CASE_III_VERTICES = ((-10, 0, 0), (2, 0, 0), (3, 2, 0), (0, 4, 1))

REGULAR_TETRAHEDRON_VERTICES = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))


def t0() -> WeightedPolyhedron:
    return WeightedPolyhedron(tetrahedron(*T0_VERTICES), Vec3.of(T0_CENTER))


def nine_centers(center: str = "M22") -> WeightedPolyhedron:
    if center not in NINE_CENTERS:
        raise KeyError(f"unknown center {center!r}; expected one of {sorted(NINE_CENTERS)}")
    return WeightedPolyhedron(tetrahedron(*NINE_CENTERS_VERTICES), Vec3.of(NINE_CENTERS[center]))


def seed585() -> WeightedPolyhedron:
    return WeightedPolyhedron(Polyhedron.build(SEED585_VERTICES, SEED585_FACES), Vec3.of(SEED585_CENTER))


def cycle_case_I() -> WeightedPolyhedron:
    t = tetrahedron(*CYCLE_CASE_I_VERTICES)
    return WeightedPolyhedron(t, centroid(t.vertices))


def cycle_case_III() -> WeightedPolyhedron:
    t = tetrahedron(*CYCLE_CASE_III_VERTICES)
    return WeightedPolyhedron(t, centroid(t.vertices))


def regular_tetrahedron() -> WeightedPolyhedron:
    return WeightedPolyhedron(tetrahedron(*REGULAR_TETRAHEDRON_VERTICES), Vec3(0, 0, 0))


CATALOG = {
    "t0": t0,
    "nine_centers": nine_centers,
    "seed585": seed585,
    "cycle_case_I": cycle_case_I,
    "cycle_case_III": cycle_case_III,
    "regular_tetrahedron": regular_tetrahedron,
}


def load(name: str, center: str | None = None) -> WeightedPolyhedron:
    if name not in CATALOG:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(CATALOG)}")
    if name == "nine_centers":
        return nine_centers(center or "M22")
    if center is not None:
        raise KeyError(f"fixture {name!r} has no alternative centers")
    return CATALOG[name]()
