"""Monostable and mono-unstable weightings of tetrahedra.

A tetrahedron can be weighted to rest on a single face exactly when three of
its edges with obtuse dihedrals form a path through all four vertices, and
to balance on a single vertex exactly when it has a 4-cycle of edges with
three consecutive obtuse face angles.  No tetrahedron has both.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from gmpy2 import mpq

from .core import AngleClass, Plane, Vec3, centroid, intersect_line_plane, orient3d
from .equilibria import _vertex_verdict, classify
from .errors import (
    DegenerateCut,
    NoObtusePath,
    NotATetrahedron,
    ParallelLine,
    SearchExhausted,
    TheoremViolation,
    VerificationFailed,
)
from .polyhedron import Polyhedron, WeightedPolyhedron
from .vertex_links import dihedral_sign, face_angle_sign

SEARCH_BUDGET = 64


@dataclass(frozen=True)
class ObtusePath:
    vertices: tuple[int, int, int, int]

    def edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[0], v[1]), (v[1], v[2]), (v[2], v[3])]

    def reversed(self) -> "ObtusePath":
        return ObtusePath(tuple(reversed(self.vertices)))


@dataclass(frozen=True)
class ObtuseCycle:
    vertices: tuple[int, int, int, int]


@dataclass(frozen=True)
class LoadingRegion:
    corners: tuple[Vec3, Vec3, Vec3, Vec3]
    target_face: int
    trace: dict = field(default_factory=dict, compare=False)

    @property
    def centroid(self) -> Vec3:
        return centroid(self.corners)

    @property
    def volume6(self):
        return abs(orient3d(*self.corners))


class Exclusivity(enum.Enum):
    PATH_ONLY = "path-only"
    CYCLE_ONLY = "cycle-only"
    NEITHER = "neither"


def _require_tetrahedron(t: Polyhedron) -> None:
    if not t.is_tetrahedron():
        raise NotATetrahedron("expected a tetrahedron")


def opposite_face(t: Polyhedron, v: int) -> int:
    for fid, f in enumerate(t.faces):
        if v not in f:
            return fid
    raise NotATetrahedron(f"no face avoids vertex {v}")


def _obtuse_edges(t: Polyhedron) -> set[tuple[int, int]]:
    return {e.endpoints for e in t.edges if dihedral_sign(t, e) is AngleClass.OBTUSE}


def find_obtuse_paths(t: Polyhedron) -> list[ObtusePath]:
    """Every vertex ordering whose three consecutive edges have obtuse dihedrals."""
    _require_tetrahedron(t)
    obtuse = _obtuse_edges(t)
    found = []
    for perm in itertools.permutations(range(4)):
        if all((min(a, b), max(a, b)) in obtuse for a, b in zip(perm, perm[1:])):
            found.append(ObtusePath(perm))
    return found


def find_obtuse_cycles(t: Polyhedron) -> list[ObtuseCycle]:
    """Every ordering A-B-C-D with face angles ABC, BCD and CDA obtuse."""
    _require_tetrahedron(t)
    angle = {}
    for apex in range(4):
        for u, w in itertools.combinations([x for x in range(4) if x != apex], 2):
            angle[(apex, frozenset((u, w)))] = face_angle_sign(t, apex, u, w)
    found = []
    for a, b, c, d in itertools.permutations(range(4)):
        if (angle[(b, frozenset((a, c)))] is AngleClass.OBTUSE
                and angle[(c, frozenset((b, d)))] is AngleClass.OBTUSE
                and angle[(d, frozenset((c, a)))] is AngleClass.OBTUSE):
            found.append(ObtuseCycle((a, b, c, d)))
    return found


def check_exclusivity(t: Polyhedron) -> Exclusivity:
    paths, cycles = find_obtuse_paths(t), find_obtuse_cycles(t)
    if paths and cycles:
        raise TheoremViolation("tetrahedron has both an obtuse path and an obtuse cycle")
    if paths:
        return Exclusivity.PATH_ONLY
    if cycles:
        return Exclusivity.CYCLE_ONLY
    return Exclusivity.NEITHER


def _cut(a: Vec3, b: Vec3, plane: Plane, name: str) -> tuple[Vec3, object]:
    try:
        point, t = intersect_line_plane(a, b, plane)
    except ParallelLine as exc:
        raise DegenerateCut(f"{name}: cutting plane parallel to the segment") from exc
    if not 0 < t < 1:
        raise DegenerateCut(f"{name}: cut parameter {t} outside the open segment")
    return point, t


def _region_from_path(t: Polyhedron, path: ObtusePath, toward_first: bool) -> LoadingRegion:
    """Run the cut chain on path A-B-C-D.

    ``toward_first`` selects the region for the face opposite A (BCEH);
    otherwise the face opposite B (CEFG).
    """
    ia, ib, ic, id_ = path.vertices
    A, B, C, D = (t.vertices[i] for i in path.vertices)
    n_A, n_B, n_C, n_D = (t.planes[opposite_face(t, i)].normal for i in path.vertices)
    E, tE = _cut(C, D, Plane.with_normal((B - A).cross(n_C), A), "E on CD")
    F, tF = _cut(A, E, Plane.with_normal((C - B).cross(n_D), B), "F on AE")
    trace = {"path": list(path.vertices), "E": E, "t_E": tE, "F": F, "t_F": tF}
    if toward_first:
        H, tH = _cut(B, F, Plane.with_normal((E - C).cross(n_B), C), "H on BF")
        trace.update(H=H, t_H=tH)
        corners, target = (B, C, E, H), opposite_face(t, ia)
    else:
        G, tG = _cut(B, F, Plane.with_normal((E - C).cross(n_A), C), "G on BF")
        trace.update(G=G, t_G=tG)
        corners, target = (C, E, F, G), opposite_face(t, ib)
    region = LoadingRegion(corners, target, trace)
    if region.volume6 == 0:
        raise DegenerateCut("loading region is flat")
    return region


def loading_region(t: Polyhedron, target_face: int) -> LoadingRegion:
    """Sub-tetrahedron of centers that make ``t`` monostable on ``target_face``.

    Faces reachable from the first two path vertices use the path as found;
    the other two use its reversal, which is again an obtuse path.
    """
    _require_tetrahedron(t)
    paths = find_obtuse_paths(t)
    if not paths:
        raise NoObtusePath("tetrahedron has no obtuse path")
    apex = next(v for v in range(4) if v not in t.faces[target_face])
    for path in paths:
        if path.vertices[0] == apex:
            return _region_from_path(t, path, toward_first=True)
        if path.vertices[1] == apex:
            return _region_from_path(t, path, toward_first=False)
    raise NoObtusePath(f"no obtuse path reaches face {target_face}")  # unreachable for a valid path set


def monostable_weighting(t: Polyhedron, target_face: int) -> WeightedPolyhedron:
    region = loading_region(t, target_face)
    wp = WeightedPolyhedron(t, region.centroid)
    report = classify(wp)
    if report.stable_faces != {target_face} or not report.reliable:
        raise VerificationFailed(
            f"centroid of the loading region gives stable faces {sorted(report.stable_faces)}")
    return wp


def monounstable_weighting(t: Polyhedron, cycle: ObtuseCycle, budget: int = SEARCH_BUDGET,
                           trace: list | None = None) -> WeightedPolyhedron:
    """Center near edge BC, close to C, that leaves A as the only unstable vertex.

    Tries ``P_k = C + (B - C)/2^k`` and ``O = P_k + (I - P_k)/2^j`` (I the vertex
    centroid) with k outer and j inner, both up to ``budget``.
    """
    _require_tetrahedron(t)
    ia, ib, ic, _ = cycle.vertices
    B, C = t.vertices[ib], t.vertices[ic]
    inner = centroid(t.vertices)
    for k in range(1, budget + 1):
        p = C + (B - C) * mpq(1, 2**k)
        for j in range(1, budget + 1):
            o = p + (inner - p) * mpq(1, 2**j)
            if trace is not None:
                trace.append({"k": k, "j": j, "P": p, "O": o})
            if all((_vertex_verdict(t, v, o) == "yes") == (v == ia) for v in range(4)):
                wp = WeightedPolyhedron(t, o)
                report = classify(wp)
                if report.reliable and report.unstable_vertices == {ia}:
                    return wp
    raise SearchExhausted(f"no mono-unstable center found with k, j <= {budget}")
