"""Stable, saddle and unstable equilibria of a weighted convex polyhedron.

An equilibrium on a face, edge or vertex exists when the plane through the
perpendicular foot Q, normal to OQ, supports the polyhedron.  All tests are
strict; a zero sign that decides the outcome is recorded as a degeneracy and
the element is left out of the strict sets.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .polyhedron import Polyhedron, WeightedPolyhedron


@dataclass(frozen=True)
class EquilibriumReport:
    stable_faces: frozenset
    saddle_edges: frozenset
    unstable_vertices: frozenset
    degenerate: tuple = field(default=())

    @property
    def S(self) -> int:
        return len(self.stable_faces)

    @property
    def H(self) -> int:
        return len(self.saddle_edges)

    @property
    def U(self) -> int:
        return len(self.unstable_vertices)

    @property
    def reliable(self) -> bool:
        return not self.degenerate

    def counts(self) -> tuple[int, int, int]:
        return (self.S, self.H, self.U)

    def to_json(self, shape: Polyhedron) -> dict:
        return {
            "S": sorted(self.stable_faces),
            "H": [list(shape.edges[e].endpoints) for e in sorted(self.saddle_edges)],
            "U": sorted(self.unstable_vertices),
            "maxwell": maxwell_check(self),
            "degenerate": [[elem, reason] for elem, reason in self.degenerate],
        }


def _strict_verdict(values) -> str:
    """'yes' if every value is positive, 'no' if one is negative, else 'tie'."""
    tie = False
    for v in values:
        if v < 0:
            return "no"
        if v == 0:
            tie = True
    return "tie" if tie else "yes"


def _face_verdict(p: Polyhedron, fid: int, o) -> str:
    # Q - O is parallel to the face normal, so the in-face orientation of the
    # foot equals that of O itself; no division needed.
    n = p.planes[fid].normal
    verts = p.vertices
    return _strict_verdict(
        (verts[b] - verts[a]).cross(o - verts[a]).dot(n) for a, b in p.face_edges(fid)
    )


def _vertex_verdict(p: Polyhedron, vid: int, o) -> str:
    a = p.vertices[vid]
    oa = o - a
    return _strict_verdict((x - a).dot(oa) for k, x in enumerate(p.vertices) if k != vid)


def _edge_verdict(p: Polyhedron, eid: int, o) -> tuple[str, str]:
    i, j = p.edges[eid].endpoints
    a, b = p.vertices[i], p.vertices[j]
    u = b - a
    num, den = (o - a).dot(u), u.norm2()
    if num < 0 or num > den:
        return "no", ""
    q = a + u * (num / den)
    oq = o - q
    support = _strict_verdict((x - q).dot(oq) for k, x in enumerate(p.vertices) if k not in (i, j))
    if support == "no":
        return "no", ""
    if num == 0 or num == den:
        return "tie", "foot at an endpoint"
    if support == "tie":
        return "tie", "supporting plane touches another vertex"
    return "yes", ""


def _stable(wp: WeightedPolyhedron):
    found, ties = set(), []
    for fid in range(wp.shape.num_faces):
        v = _face_verdict(wp.shape, fid, wp.center)
        if v == "yes":
            found.add(fid)
        elif v == "tie":
            ties.append((f"face {fid}", "foot on the face boundary"))
    return found, ties


def _unstable(wp: WeightedPolyhedron):
    found, ties = set(), []
    for vid in range(wp.shape.num_vertices):
        v = _vertex_verdict(wp.shape, vid, wp.center)
        if v == "yes":
            found.add(vid)
        elif v == "tie":
            ties.append((f"vertex {vid}", "right angle at the vertex"))
    return found, ties


def _saddle(wp: WeightedPolyhedron):
    found, ties = set(), []
    for eid, e in enumerate(wp.shape.edges):
        v, why = _edge_verdict(wp.shape, eid, wp.center)
        if v == "yes":
            found.add(eid)
        elif v == "tie":
            ties.append((f"edge {e.endpoints[0]}-{e.endpoints[1]}", why))
    return found, ties


def stable_faces(wp: WeightedPolyhedron) -> set[int]:
    return _stable(wp)[0]


def unstable_vertices(wp: WeightedPolyhedron) -> set[int]:
    return _unstable(wp)[0]


def saddle_edges(wp: WeightedPolyhedron) -> set[int]:
    return _saddle(wp)[0]


def classify(wp: WeightedPolyhedron) -> EquilibriumReport:
    s, s_ties = _stable(wp)
    h, h_ties = _saddle(wp)
    u, u_ties = _unstable(wp)
    return EquilibriumReport(frozenset(s), frozenset(h), frozenset(u), tuple(s_ties + h_ties + u_ties))


def maxwell_check(report: EquilibriumReport) -> bool:
    return report.S - report.H + report.U == 2
