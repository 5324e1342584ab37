"""Quasi-static rolling of a weighted polyhedron from a face to rest.

Each landing is inelastic: the body keeps no motion from one face to the
next, so the route is decided by where the foot of the center falls relative
to the current face.  Tipping onto a vertex gives the body three degrees of
freedom and is reported as an error instead of being simulated.
"""
from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import CycleDetected, DegenerateTip, VertexExitEncountered
from .polyhedron import WeightedPolyhedron


@dataclass(frozen=True)
class ExitResult:
    kind: str  # "stable", "edge" or "vertex"
    element: int | None = None

    @classmethod
    def stable(cls) -> "ExitResult":
        return cls("stable")


@dataclass(frozen=True)
class TipStep:
    from_face: int
    exit_edge: int
    to_face: int


@dataclass(frozen=True)
class TipPath:
    start_face: int
    steps: tuple[TipStep, ...]
    terminal_face: int

    def faces(self) -> list[int]:
        return [self.start_face] + [s.to_face for s in self.steps]


def exit_edge(wp: WeightedPolyhedron, face: int) -> ExitResult:
    """Where the body leaves ``face`` when resting on it.

    The foot of the center is tested against every edge line of the face.
    Beyond exactly one line means tipping across that edge; beyond two lines
    that meet at a vertex means tipping onto the vertex.  Any other pattern
    (only possible for non-triangular faces) exits across the edge whose line
    the foot is farthest beyond.
    """
    p, o = wp.shape, wp.center
    n = p.planes[face].normal
    directed = p.face_edges(face)
    beyond = []
    for k, (a, b) in enumerate(directed):
        va, vb = p.vertices[a], p.vertices[b]
        s = (vb - va).cross(o - va).dot(n)
        if s == 0:
            raise DegenerateTip(f"foot of the center lies on the line of edge {a}-{b}")
        if s < 0:
            beyond.append((k, s))
    if not beyond:
        return ExitResult.stable()
    count = len(directed)
    if len(beyond) == 1:
        a, b = directed[beyond[0][0]]
        return ExitResult("edge", p.edge_id(a, b))
    if len(beyond) == 2:
        k1, k2 = beyond[0][0], beyond[1][0]
        if (k1 + 1) % count == k2:
            return ExitResult("vertex", directed[k1][1])
        if (k2 + 1) % count == k1:
            return ExitResult("vertex", directed[k2][1])
    # distance beyond each line is |s| / (|b - a| |n|); |n| is shared
    scored = []
    for k, s in beyond:
        a, b = directed[k]
        scored.append((mpq(s * s) / (p.vertices[b] - p.vertices[a]).norm2(), k))
    scored.sort(reverse=True)
    if scored[0][0] == scored[1][0]:
        raise DegenerateTip("two edge lines are equally far behind the foot")
    a, b = directed[scored[0][1]]
    return ExitResult("edge", p.edge_id(a, b))


def tip_path(wp: WeightedPolyhedron, start_face: int) -> TipPath:
    p = wp.shape
    current, steps, seen = start_face, [], {start_face}
    while True:
        result = exit_edge(wp, current)
        if result.kind == "stable":
            return TipPath(start_face, tuple(steps), current)
        if result.kind == "vertex":
            raise VertexExitEncountered(f"face {current} tips onto vertex {result.element}")
        f, g = p.edges[result.element].adjacent_faces
        nxt = g if f == current else f
        steps.append(TipStep(current, result.element, nxt))
        if nxt in seen:
            raise CycleDetected(f"rolling revisits face {nxt}")
        seen.add(nxt)
        current = nxt


def resting_height2(wp: WeightedPolyhedron, face: int):
    """Squared height of the center above the ground while resting on ``face``."""
    plane = wp.shape.planes[face]
    d = plane.evaluate(wp.center)
    return d * d / plane.normal.norm2()
