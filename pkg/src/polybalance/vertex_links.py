"""Sign geometry of vertex links.

Around a vertex A the directions B-A, C-A, D-A span a spherical triangle:
face angles at A are its edges and dihedral angles along AB, AC, AD are its
corner angles.  Everything is classified from signs of dot products of
unnormalized vectors; no angle is ever computed in radians.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import AngleClass, Vec3, angle_sign
from .errors import DegenerateDirections, NotATetrahedron, NotIncident
from .polyhedron import Edge, Polyhedron


class EdgeClass(enum.Enum):
    SHORT = "short"
    QUARTER = "quarter"
    LONG = "long"

    @classmethod
    def from_cosine_sign(cls, s) -> "EdgeClass":
        if s > 0:
            return cls.SHORT
        if s < 0:
            return cls.LONG
        return cls.QUARTER


# (obtuse face angles, obtuse dihedrals) pairs that can occur at a trihedral vertex
ADMISSIBLE_SIGNATURES = frozenset({(0, 0), (0, 1), (1, 1), (2, 1), (2, 2), (2, 3), (3, 3)})


@dataclass(frozen=True)
class VertexSignature:
    m: int
    n: int
    right_face_angles: int = 0
    right_dihedrals: int = 0

    def pair(self) -> tuple[int, int]:
        return (self.m, self.n)

    def __str__(self) -> str:
        return f"[{self.m},{self.n}]"


@dataclass(frozen=True)
class SphericalTriangleClass:
    """``edge_classes[i]`` is the arc opposite corner ``i``; ``angle_classes[i]`` the angle at it."""

    edge_classes: tuple[EdgeClass, EdgeClass, EdgeClass]
    angle_classes: tuple[AngleClass, AngleClass, AngleClass]

    @property
    def long_edges(self) -> int:
        return sum(e is EdgeClass.LONG for e in self.edge_classes)

    @property
    def short_edges(self) -> int:
        return sum(e is EdgeClass.SHORT for e in self.edge_classes)

    @property
    def obtuse_angles(self) -> int:
        return sum(a is AngleClass.OBTUSE for a in self.angle_classes)

    @property
    def acute_angles(self) -> int:
        return sum(a is AngleClass.ACUTE for a in self.angle_classes)

    @property
    def generic(self) -> bool:
        return EdgeClass.QUARTER not in self.edge_classes and AngleClass.RIGHT not in self.angle_classes


def face_angle_sign(p: Polyhedron, apex: int, u: int, w: int) -> AngleClass:
    """Face angle u-apex-w, where u and w flank ``apex`` on one face."""
    for f in p.faces:
        if apex not in f:
            continue
        k = f.index(apex)
        flank = {f[k - 1], f[(k + 1) % len(f)]}
        if flank == {u, w}:
            return angle_sign(p.vertices[apex], p.vertices[u], p.vertices[w])
    raise NotIncident(f"vertices {u} and {w} do not flank {apex} on a common face")


def dihedral_sign(p: Polyhedron, edge: Edge | int) -> AngleClass:
    """Interior dihedral along an edge.

    The interior angle is obtuse exactly when the two outward normals make an
    acute angle with each other.
    """
    if isinstance(edge, int):
        edge = p.edges[edge]
    f, g = edge.adjacent_faces
    d = p.planes[f].normal.dot(p.planes[g].normal)
    return AngleClass.from_cosine_sign(-d)


def vertex_signature(p: Polyhedron, v: int) -> VertexSignature:
    if not p.is_tetrahedron():
        raise NotATetrahedron("signatures are defined for tetrahedron vertices")
    others = [x for x in range(4) if x != v]
    m = rf = 0
    for i in range(3):
        for j in range(i + 1, 3):
            cls = face_angle_sign(p, v, others[i], others[j])
            m += cls is AngleClass.OBTUSE
            rf += cls is AngleClass.RIGHT
    n = rd = 0
    for x in others:
        cls = dihedral_sign(p, p.edge_id(v, x))
        n += cls is AngleClass.OBTUSE
        rd += cls is AngleClass.RIGHT
    return VertexSignature(m, n, rf, rd)


def admissible_signature(s: VertexSignature | tuple[int, int]) -> bool:
    pair = s.pair() if isinstance(s, VertexSignature) else tuple(s)
    return pair in ADMISSIBLE_SIGNATURES


def classify_spherical_triangle(a: Vec3, b: Vec3, c: Vec3) -> SphericalTriangleClass:
    dirs = (a, b, c)
    for i in range(3):
        if dirs[i].cross(dirs[(i + 1) % 3]).is_zero():
            raise DegenerateDirections("two directions are parallel or zero")
    if a.cross(b).dot(c) == 0:
        raise DegenerateDirections("the three directions lie on one great circle")
    edges = tuple(EdgeClass.from_cosine_sign(dirs[(i + 1) % 3].dot(dirs[(i + 2) % 3])) for i in range(3))
    angles = []
    for i in range(3):
        x, y, z = dirs[i], dirs[(i + 1) % 3], dirs[(i + 2) % 3]
        # normals of the two great circles meeting at x, both taken from x outward
        angles.append(AngleClass.from_cosine_sign(x.cross(y).dot(x.cross(z))))
    return SphericalTriangleClass(edges, tuple(angles))


def vertex_link(p: Polyhedron, v: int) -> SphericalTriangleClass:
    """Spherical triangle cut out by a small sphere around a tetrahedron vertex."""
    if not p.is_tetrahedron():
        raise NotATetrahedron("vertex links are triangles only for tetrahedra")
    apex = p.vertices[v]
    dirs = [p.vertices[x] - apex for x in range(4) if x != v]
    return classify_spherical_triangle(*dirs)


def lemma_violations(t: SphericalTriangleClass) -> list[str]:
    """Which folklore facts about spherical triangles ``t`` contradicts.

    Only generic triangles (no quarter arcs, no right angles) are judged.
    """
    if not t.generic:
        return []
    bad = []
    E, A = t.edge_classes, t.angle_classes
    if t.acute_angles == 3 and t.long_edges:
        bad.append("all-acute triangle has a long edge")
    if t.acute_angles == 1:
        i = A.index(AngleClass.ACUTE)
        if t.short_edges != 1 or E[i] is not EdgeClass.SHORT:
            bad.append("single acute angle without a unique short edge opposite it")
    if t.long_edges == 3 and t.obtuse_angles != 3:
        bad.append("three long edges without three obtuse angles")
    if t.long_edges == 1:
        i = E.index(EdgeClass.LONG)
        if t.obtuse_angles != 1 or A[i] is not AngleClass.OBTUSE:
            bad.append("single long edge without a unique obtuse angle opposite it")
    if t.short_edges == 3 and t.obtuse_angles > 1:
        bad.append("all-short triangle with two or more obtuse angles")
    if (t.long_edges, t.obtuse_angles) not in ADMISSIBLE_SIGNATURES:
        bad.append(f"combination ({t.long_edges} long, {t.obtuse_angles} obtuse) is not admissible")
    return bad
