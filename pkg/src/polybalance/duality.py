"""Polar duals of weighted polyhedra about their center of mass."""
from __future__ import annotations

from dataclasses import dataclass

from .core import ORIGIN
from .equilibria import classify
from .errors import DegenerateClassification
from .polyhedron import Polyhedron, WeightedPolyhedron, newell_normal


@dataclass(frozen=True)
class DualCorrespondence:
    face_to_vertex: dict
    vertex_to_face: dict


def _faces_around(p: Polyhedron, v: int) -> list[int]:
    """Faces containing ``v`` in rotational order."""
    owner = {}
    for fid in p.vertex_faces[v]:
        for a, b in p.face_edges(fid):
            owner[(a, b)] = fid
    succ = {}
    for fid in p.vertex_faces[v]:
        f = p.faces[fid]
        succ[fid] = f[(f.index(v) + 1) % len(f)]
    start = min(p.vertex_faces[v])
    order, fid = [], start
    while True:
        order.append(fid)
        fid = owner[(succ[fid], v)]
        if fid == start:
            return order


def _rotate_min_first(cycle: list[int]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:] + cycle[:k])


def polar_dual(wp: WeightedPolyhedron) -> tuple[WeightedPolyhedron, DualCorrespondence]:
    """Polar dual with the center moved to the origin.

    Face ``f`` with plane ``n . x = c`` (after translation) becomes dual vertex
    ``f`` at ``n / c``; vertex ``v`` becomes dual face ``v``.  The result stays
    in the center-based frame, with center (0, 0, 0).
    """
    p = wp.shape.translated(-wp.center)
    dual_vertices = []
    for pl in p.planes:
        dual_vertices.append(pl.normal / pl.offset)
    dual_faces = []
    for v in range(p.num_vertices):
        cycle = _faces_around(p, v)
        if newell_normal([dual_vertices[f] for f in cycle]).dot(p.vertices[v]) < 0:
            cycle = [cycle[0]] + cycle[:0:-1]
        dual_faces.append(_rotate_min_first(cycle))
    dual = Polyhedron(tuple(dual_vertices), tuple(dual_faces))
    corr = DualCorrespondence(
        face_to_vertex={f: f for f in range(p.num_faces)},
        vertex_to_face={v: v for v in range(p.num_vertices)},
    )
    return WeightedPolyhedron(dual, ORIGIN), corr


def dual_edge(p: Polyhedron, eid: int) -> tuple[int, int]:
    """Endpoints, in the dual, of the edge crossing edge ``eid`` of ``p``."""
    f, g = p.edges[eid].adjacent_faces
    return (min(f, g), max(f, g))


def check_prop_polar(wp: WeightedPolyhedron) -> bool:
    """Stable faces of ``wp`` are unstable vertices of its dual and vice versa."""
    report = classify(wp)
    if not report.reliable:
        raise DegenerateClassification("classification of the primal has ties")
    dual, corr = polar_dual(wp)
    dreport = classify(dual)
    if not dreport.reliable:
        raise DegenerateClassification("classification of the dual has ties")
    faces_ok = {corr.face_to_vertex[f] for f in report.stable_faces} == set(dreport.unstable_vertices)
    verts_ok = {corr.vertex_to_face[v] for v in report.unstable_vertices} == set(dreport.stable_faces)
    return faces_ok and verts_ok


def saddles_correspond(wp: WeightedPolyhedron) -> bool:
    """Observed property: saddle edges of ``wp`` map to saddle edges of the dual."""
    dual, _ = polar_dual(wp)
    primal = {dual_edge(wp.shape, e) for e in classify(wp).saddle_edges}
    return primal == {dual.shape.edges[e].endpoints for e in classify(dual).saddle_edges}

