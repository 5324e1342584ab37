"""Convex polyhedra, weighted polyhedra, validation, face vectors and JSON I/O."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .core import Plane, Vec3, centroid, orient3d, rat, sign
from .errors import (
    CenterNotInterior,
    DegenerateInput,
    DegenerateTetrahedron,
    SchemaError,
    ValidationFailed,
)


@dataclass(frozen=True)
class Edge:
    """An undirected edge ``i < j``; ``adjacent_faces`` holds the face
    traversing ``i -> j`` first and the face traversing ``j -> i`` second."""

    endpoints: tuple[int, int]
    adjacent_faces: tuple[int, int]


@dataclass(frozen=True)
class Polyhedron:
    vertices: tuple[Vec3, ...]
    faces: tuple[tuple[int, ...], ...]
    # face ids whose cycle was reversed on construction
    reoriented: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def build(cls, vertices: Iterable, faces: Iterable[Sequence[int]]) -> "Polyhedron":
        """Build from raw data, flipping any face whose cycle points inward.

        The vertex centroid is the inside reference, so the input must at
        least be a non-flat vertex set for the flip to mean anything.
        """
        verts = tuple(v if isinstance(v, Vec3) else Vec3.of(v) for v in vertices)
        raw = [tuple(int(i) for i in f) for f in faces]
        for f in raw:
            if len(f) < 3 or any(i < 0 or i >= len(verts) for i in f):
                raise SchemaError(f"bad face {list(f)}")
        inside = centroid(verts)
        out, flipped = [], []
        for fid, f in enumerate(raw):
            n = newell_normal([verts[i] for i in f])
            if not n.is_zero() and n.dot(inside - verts[f[0]]) > 0:
                f = (f[0],) + tuple(reversed(f[1:]))
                flipped.append(fid)
            out.append(f)
        return cls(verts, tuple(out), tuple(flipped))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        owner: dict[tuple[int, int], int] = {}
        for fid, f in enumerate(self.faces):
            k = len(f)
            for s in range(k):
                owner.setdefault((f[s], f[(s + 1) % k]), fid)
        pairs = sorted({(min(a, b), max(a, b)) for a, b in owner})
        return tuple(Edge((i, j), (owner.get((i, j), -1), owner.get((j, i), -1))) for i, j in pairs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e.endpoints: k for k, e in enumerate(self.edges)}

    def edge_id(self, a: int, b: int) -> int:
        return self.edge_index[(min(a, b), max(a, b))]

    @cached_property
    def planes(self) -> tuple[Plane, ...]:
        """Supporting plane of each face with the normal pointing outward."""
        result = []
        for f in self.faces:
            pts = [self.vertices[i] for i in f]
            result.append(Plane.with_normal(newell_normal(pts), pts[0]))
        return tuple(result)

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in self.vertices]
        for fid, f in enumerate(self.faces):
            for i in f:
                inc[i].append(fid)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset, ...]:
        adj: list[set] = [set() for _ in self.vertices]
        for e in self.edges:
            i, j = e.endpoints
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(s) for s in adj)

    def face_edges(self, fid: int) -> list[tuple[int, int]]:
        """Directed boundary edges of a face, in cycle order."""
        f = self.faces[fid]
        return [(f[s], f[(s + 1) % len(f)]) for s in range(len(f))]

    def contains_strictly(self, x: Vec3) -> bool:
        return all(pl.evaluate(x) < 0 for pl in self.planes)

    def is_tetrahedron(self) -> bool:
        return self.num_vertices == 4 and self.num_faces == 4

    def translated(self, offset: Vec3) -> "Polyhedron":
        return Polyhedron(tuple(v + offset for v in self.vertices), self.faces)


def newell_normal(points: Sequence[Vec3]) -> Vec3:
    """Area vector of a planar polygon (twice the area times the unit normal)."""
    total = Vec3(0, 0, 0)
    k = len(points)
    for s in range(k):
        total = total + points[s].cross(points[(s + 1) % k])
    return total


@dataclass(frozen=True)
class WeightedPolyhedron:
    """A convex polyhedron together with its center of mass."""

    shape: Polyhedron
    center: Vec3

    def __post_init__(self):
        if not self.shape.contains_strictly(self.center):
            raise CenterNotInterior(f"center {self.center!r} is not strictly interior")


@dataclass(frozen=True)
class FaceVector:
    f: int
    e: int
    v: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.f, self.e, self.v)


def face_vector(p: Polyhedron) -> FaceVector:
    return FaceVector(p.num_faces, len(p.edges), p.num_vertices)


def is_legal(fv: FaceVector) -> bool:
    """Whether ``fv`` is the face vector of some convex polyhedron (Steinitz)."""
    f, e, v = fv.as_tuple()
    return f > 0 and v > 0 and e == f + v - 2 and 2 * f >= v + 4 and 2 * v >= f + 4


# --- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    element: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind} at {self.element}" + (f": {self.detail}" if self.detail else "")


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, element: str, detail: str = "") -> None:
        self.violations.append(Violation(kind, element, detail))

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def validate(p: Polyhedron) -> ValidationReport:
    """Check every structural invariant of a convex polyhedron.

    Never raises on malformed input; each problem becomes a ``Violation``
    naming the offending face, edge or vertex.
    """
    report = ValidationReport()
    nv, nf = len(p.vertices), len(p.faces)
    if nv < 4:
        report.add("too_few_vertices", "polyhedron", f"{nv} < 4")
    if nf < 4:
        report.add("too_few_faces", "polyhedron", f"{nf} < 4")
    structural_ok = True
    for fid, f in enumerate(p.faces):
        if len(f) < 3 or len(set(f)) != len(f):
            report.add("bad_face", f"face {fid}", "fewer than 3 distinct vertices")
            structural_ok = False
        elif any(not (0 <= i < nv) for i in f):
            report.add("bad_index", f"face {fid}", "vertex index out of range")
            structural_ok = False
    if not structural_ok or not report.ok:
        return report

    used = set(i for f in p.faces for i in f)
    for i in range(nv):
        if i not in used:
            report.add("unused_vertex", f"vertex {i}")

    for fid, f in enumerate(p.faces):
        pts = [p.vertices[i] for i in f]
        n = newell_normal(pts)
        if n.is_zero():
            report.add("degenerate_face", f"face {fid}", "zero area")
            continue
        c = n.dot(pts[0])
        for i in f:
            if n.dot(p.vertices[i]) != c:
                report.add("nonplanar_face", f"face {fid}", f"vertex {i} off the face plane")
                break

    directed: dict[tuple[int, int], int] = {}
    for fid in range(nf):
        for a, b in p.face_edges(fid):
            if (a, b) in directed:
                report.add("orientation", f"edge {min(a, b)}-{max(a, b)}",
                           f"faces {directed[(a, b)]} and {fid} traverse it in the same direction")
            directed[(a, b)] = fid
    undirected: dict[tuple[int, int], int] = {}
    for a, b in directed:
        k = (min(a, b), max(a, b))
        undirected[k] = undirected.get(k, 0) + 1
    for (a, b), count in sorted(undirected.items()):
        if count != 2:
            report.add("edge_manifold", f"edge {a}-{b}", f"shared by {count} faces")

    if any(v.kind in ("degenerate_face",) for v in report.violations):
        return report
    for fid, f in enumerate(p.faces):
        pts = [p.vertices[i] for i in f]
        plane = Plane.with_normal(newell_normal(pts), pts[0])
        incident = set(f)
        signs = [plane.side(p.vertices[i]) for i in range(nv) if i not in incident]
        if signs and all(s > 0 for s in signs):
            report.add("orientation", f"face {fid}", "cycle is clockwise seen from outside")
        elif any(s >= 0 for s in signs):
            report.add("convexity", f"face {fid}", "some vertex is not strictly below the face plane")

    e = len(undirected)
    if nf - e + nv != 2:
        report.add("euler", "polyhedron", f"f - e + v = {nf - e + nv}")
    return report


def checked(p: Polyhedron) -> Polyhedron:
    report = validate(p)
    if not report.ok:
        raise ValidationFailed(report)
    return p


def tetrahedron(a, b, c, d) -> Polyhedron:
    """Tetrahedron ABCD whose face ``i`` is the one opposite vertex ``i``."""
    pts = tuple(v if isinstance(v, Vec3) else Vec3.of(v) for v in (a, b, c, d))
    if orient3d(*pts) == 0:
        raise DegenerateTetrahedron("the four points are coplanar")
    faces = []
    for opposite in range(4):
        i, j, k = (x for x in range(4) if x != opposite)
        if orient3d(pts[i], pts[j], pts[k], pts[opposite]) > 0:
            j, k = k, j
        faces.append((i, j, k))
    return Polyhedron(pts, tuple(faces))


# --- convex hull --------------------------------------------------------------


def _plane_key(n: Vec3, c) -> tuple:
    scale = next(abs(x) for x in n if x != 0)
    return (n.x / scale, n.y / scale, n.z / scale, c / scale)


def _polygon_cycle(points: list[Vec3], idx: list[int], normal: Vec3) -> list[int]:
    """Strictly convex CCW (about ``normal``) cycle of coplanar points; collinear ones dropped."""
    ax = max(range(3), key=lambda k: abs(tuple(normal)[k]))
    keep = [k for k in range(3) if k != ax]

    def uv(i):
        t = tuple(points[i])
        return (t[keep[0]], t[keep[1]])

    pts = sorted(set(idx), key=uv)

    def cross(o, a, b):
        (ox, oy), (ax_, ay), (bx, by) = uv(o), uv(a), uv(b)
        return (ax_ - ox) * (by - oy) - (ay - oy) * (bx - ox)

    lower: list[int] = []
    for i in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    cycle = lower[:-1] + upper[:-1]
    if newell_normal([points[i] for i in cycle]).dot(normal) < 0:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def _all_triples(pts: list[Vec3]):
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                yield (i, j, k)


def convex_hull(points: Iterable) -> Polyhedron:
    """Exact convex hull of a 3-D point set.

    scipy's Qhull proposes candidate facets in floating point; every
    candidate is re-derived and checked as a supporting plane in exact
    arithmetic, coplanar facets are merged, and the result is validated.
    Small inputs, and inputs where Qhull fails, fall back to enumerating
    all triples.
    """
    pts = [p if isinstance(p, Vec3) else Vec3.of(p) for p in points]
    if len(pts) < 4:
        raise DegenerateInput("need at least four points")
    candidates: Iterable[tuple[int, int, int]]
    if len(pts) <= 8:
        candidates = _all_triples(pts)
    else:
        try:
            import numpy as np
            from scipy.spatial import ConvexHull

            arr = np.array([[float(x) for x in p] for p in pts])
            candidates = [tuple(int(i) for i in s) for s in ConvexHull(arr).simplices]
        except Exception:
            candidates = _all_triples(pts)

    planes: dict[tuple, tuple[Vec3, object]] = {}
    for i, j, k in candidates:
        n = (pts[j] - pts[i]).cross(pts[k] - pts[i])
        if n.is_zero():
            continue
        c = n.dot(pts[i])
        s = {sign(n.dot(p) - c) for p in pts} - {0}
        if s == {1}:
            n, c = -n, -c
        elif s != {-1}:
            continue
        planes.setdefault(_plane_key(n, c), (n, c))
    if not planes:
        raise DegenerateInput("points are coplanar")

    faces = []
    for n, c in planes.values():
        on = [i for i, p in enumerate(pts) if n.dot(p) == c]
        faces.append(_polygon_cycle(pts, on, n))
    used = sorted({i for f in faces for i in f})
    remap = {old: new for new, old in enumerate(used)}
    hull = Polyhedron(tuple(pts[i] for i in used),
                      tuple(tuple(remap[i] for i in f) for f in sorted(faces)))
    return checked(hull)


# --- JSON -------------------------------------------------------------------


def _vec_from_json(obj, what: str) -> Vec3:
    if not isinstance(obj, list) or len(obj) != 3:
        raise SchemaError(f"{what} must be a list of three rationals")
    for x in obj:
        if not isinstance(x, (int, str)) or isinstance(x, bool):
            raise SchemaError(f"{what}: {x!r} is not an integer or 'p/q' string")
    return Vec3(*(rat(x) for x in obj))


def parse(data) -> WeightedPolyhedron:
    """Read the ``{"vertices", "faces", "center"}`` schema (dict or JSON text).

    Face cycles may be given in either orientation; they are flipped outward
    before validation.
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    for key in ("vertices", "faces", "center"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
    if not isinstance(data["vertices"], list) or not isinstance(data["faces"], list):
        raise SchemaError("vertices and faces must be lists")
    verts = [_vec_from_json(v, f"vertex {i}") for i, v in enumerate(data["vertices"])]
    faces = []
    for i, f in enumerate(data["faces"]):
        if not isinstance(f, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in f):
            raise SchemaError(f"face {i} must be a list of vertex indices")
        faces.append(f)
    center = _vec_from_json(data["center"], "center")
    if len(verts) < 4:
        raise ValidationFailed(ValidationReport([Violation("too_few_vertices", "polyhedron")]))
    shape = checked(Polyhedron.build(verts, faces))
    return WeightedPolyhedron(shape, center)


def serialize(wp: WeightedPolyhedron) -> dict:
    return {
        "vertices": [v.to_json() for v in wp.shape.vertices],
        "faces": [list(f) for f in wp.shape.faces],
        "center": wp.center.to_json(),
    }


def dumps(wp: WeightedPolyhedron, pretty: bool = False) -> str:
    return json.dumps(serialize(wp), indent=2 if pretty else None)
