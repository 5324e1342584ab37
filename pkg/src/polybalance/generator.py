"""Mono-monostatic weighted polyhedra for every legal face vector but (4, 6, 4).

Starting from a weighted square pyramid with one stable face and one
unstable vertex, two moves reach every other legal face vector:

* face bending pushes a vertex of a non-triangular face slightly inward,
  splitting that face into a smaller face plus a triangle (one more face,
  same vertices, same equilibria);
* polar duality about the center swaps faces and vertices and keeps the
  single stable/unstable pair.

Every step is checked with the exact classifier instead of relying on a
"small enough" argument.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from gmpy2 import mpq

from . import fixtures
from .core import Vec3
from .duality import polar_dual
from .equilibria import EquilibriumReport, classify
from .errors import (
    AllFacesTriangular,
    BendFailed,
    ConstructionFailed,
    ExcludedTetrahedron,
    GeneralPositionViolated,
    GeometryError,
    IllegalFaceVector,
)
from .polyhedron import FaceVector, Polyhedron, WeightedPolyhedron, face_vector, is_legal, validate

BEND_BUDGET = 64


@dataclass(frozen=True)
class BendPlan:
    vertex: int
    face: int
    diagonal: tuple[int, int]
    delta: object = None  # starting step; chosen by bend_face when None


def _nontriangular(p: Polyhedron) -> list[int]:
    return [fid for fid, f in enumerate(p.faces) if len(f) > 3]


def _plan(p: Polyhedron, v: int, fid: int) -> BendPlan:
    f = p.faces[fid]
    k = f.index(v)
    return BendPlan(v, fid, (f[k - 1], f[(k + 1) % len(f)]))


def bend_plans(p: Polyhedron) -> Iterator[BendPlan]:
    """All admissible (vertex, face) choices, lowest vertex then lowest face first."""
    nontri = set(_nontriangular(p))
    if not nontri:
        raise AllFacesTriangular("every face is a triangle")
    for v in range(p.num_vertices):
        mine = [fid for fid in p.vertex_faces[v] if fid in nontri]
        if 1 <= len(mine) <= 3:
            for fid in sorted(mine):
                yield _plan(p, v, fid)


def select_bend_vertex(p: Polyhedron) -> BendPlan:
    for plan in bend_plans(p):
        return plan
    # a vertex on 1-3 non-triangular faces always exists by an Euler count
    raise AllFacesTriangular("no vertex lies on one to three non-triangular faces")


def _bend_direction(p: Polyhedron, plan: BendPlan) -> Vec3:
    """Direction inside every other non-triangular face at V, pointing into the solid."""
    n_f = p.planes[plan.face].normal
    others = [p.planes[g].normal for g in p.vertex_faces[plan.vertex]
              if g != plan.face and len(p.faces[g]) > 3]
    if not others:
        d = -n_f
    elif len(others) == 1:
        m = others[0]
        d = -n_f + m * (n_f.dot(m) / m.norm2())
    else:
        d = others[0].cross(others[1])
        if len(others) == 3 and d.dot(others[2]) != 0:
            raise BendFailed("the other non-triangular faces meet only at the vertex")
        if d.dot(n_f) > 0:
            d = -d
    if d.is_zero() or d.dot(n_f) >= 0:
        raise BendFailed("no admissible direction leaves the face")
    return d


def _bent_shape(p: Polyhedron, plan: BendPlan, moved: Vec3) -> Polyhedron:
    verts = list(p.vertices)
    verts[plan.vertex] = moved
    faces = list(p.faces)
    faces[plan.face] = tuple(i for i in p.faces[plan.face] if i != plan.vertex)
    a, b = plan.diagonal
    faces.append((a, plan.vertex, b))
    return Polyhedron(tuple(verts), tuple(faces))


def _bend_preserves(before: EquilibriumReport, after: EquilibriumReport, plan: BendPlan,
                    new_face: int) -> bool:
    if not after.reliable:
        return False
    if before.unstable_vertices != after.unstable_vertices:
        return False
    off = lambda s: {f for f in s if f not in (plan.face, new_face)}  # noqa: E731
    if off(before.stable_faces) != off(after.stable_faces):
        return False
    on_split = {plan.face, new_face} & after.stable_faces
    if len(on_split) > 1:
        return False
    return (plan.face in before.stable_faces) == bool(on_split)


def bend_face(wp: WeightedPolyhedron, plan: BendPlan, budget: int = BEND_BUDGET) -> WeightedPolyhedron:
    """Split ``plan.face`` by moving ``plan.vertex`` off it; the center stays put.

    The split face keeps its id and the new triangle is appended as the last
    face.  The step starts at 1/8 of the parameter where the moving vertex
    would first reach another face plane and is halved until the bent solid
    is convex, still contains the center, and has the same equilibria with
    the split face's equilibrium (if any) on exactly one of its two parts.
    """
    p, o = wp.shape, wp.center
    n_f = p.planes[plan.face].normal
    a, b = (p.vertices[i] for i in plan.diagonal)
    if (b - a).cross(o - a).dot(n_f) == 0:
        raise GeneralPositionViolated(
            "the foot of the center lies on the splitting diagonal; perturb the center and retry")
    d = _bend_direction(p, plan)
    v = p.vertices[plan.vertex]
    if plan.delta is not None:
        step = mpq(plan.delta)
    else:
        hits = []
        for g, pl in enumerate(p.planes):
            if plan.vertex in p.faces[g]:
                continue
            rate = pl.normal.dot(d)
            if rate > 0:
                hits.append(-pl.evaluate(v) / rate)
        step = min(hits) / 8
    before = classify(wp)
    new_face = p.num_faces
    for _ in range(budget):
        shape = _bent_shape(p, plan, v + d * step)
        step = step / 2
        if not validate(shape).ok or not shape.contains_strictly(o):
            continue
        candidate = WeightedPolyhedron(shape, o)
        if _bend_preserves(before, classify(candidate), plan, new_face):
            return candidate
    raise BendFailed(f"no step passed the checks after {budget} halvings")


def seed_585() -> WeightedPolyhedron:
    return fixtures.seed585()


def verify_mono_monostatic(wp: WeightedPolyhedron) -> bool:
    report = classify(wp)
    return report.reliable and report.S == 1 and report.U == 1


def _min_faces(v: int) -> int:
    return (v + 1) // 2 + 2


def _check_target(f: int, v: int) -> None:
    if (f, v) == (4, 4):
        raise ExcludedTetrahedron("no weighted tetrahedron is mono-monostatic")
    if not is_legal(FaceVector(f, f + v - 2, v)):
        raise IllegalFaceVector(f"({f}, {f + v - 2}, {v}) is not a legal face vector")


@lru_cache(maxsize=None)
def _generate(f: int, v: int) -> tuple[WeightedPolyhedron, tuple]:
    if (f, v) == (5, 5):
        return seed_585(), (("seed", 5, 5),)
    if f > _min_faces(v):
        base, trace = _generate(f - 1, v)
        failures = []
        for plan in bend_plans(base.shape):
            try:
                bent = bend_face(base, plan)
            except (BendFailed, GeneralPositionViolated) as exc:
                failures.append(f"vertex {plan.vertex}/face {plan.face}: {exc}")
                continue
            return bent, trace + (("bend", f, v, plan.vertex, plan.face),)
        raise ConstructionFailed(f"no bend of ({f - 1}, {v}) succeeded: " + "; ".join(failures))
    base, trace = _generate(v, f)
    dual, _ = polar_dual(base)
    return dual, trace + (("dual", f, v),)


def generate_mono_monostatic(f: int, v: int, trace: list | None = None) -> WeightedPolyhedron:
    """Weighted polyhedron with ``f`` faces, ``v`` vertices, one stable face and one unstable vertex."""
    _check_target(f, v)
    try:
        wp, steps = _generate(f, v)
    except GeometryError as exc:
        if isinstance(exc, ConstructionFailed):
            raise
        raise ConstructionFailed(str(exc)) from exc
    if trace is not None:
        trace.extend(steps)
    fv = face_vector(wp.shape)
    if fv.as_tuple() != (f, f + v - 2, v) or not validate(wp.shape).ok:
        raise ConstructionFailed(f"built face vector {fv.as_tuple()} for target ({f}, {v})")
    report = classify(wp)
    if not (report.reliable and report.S == 1 and report.U == 1 and report.H == 0):
        raise ConstructionFailed(f"built (S, H, U) = {report.counts()} for target ({f}, {v})")
    return wp
