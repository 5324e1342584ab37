"""Exact static equilibria of weighted convex polyhedra.

Classify stable faces, saddle edges and unstable vertices with rational
arithmetic, build monostable and mono-unstable weightings of tetrahedra,
follow quasi-static tipping, take polar duals, and generate mono-monostatic
polyhedra for every legal face vector except (4, 6, 4).
"""
from .core import Plane, Vec3, rat
from .duality import polar_dual
from .equilibria import EquilibriumReport, classify, maxwell_check
from .errors import GeometryError
from .generator import generate_mono_monostatic
from .monostatic import find_obtuse_cycles, find_obtuse_paths, monostable_weighting, monounstable_weighting
from .polyhedron import Polyhedron, WeightedPolyhedron, convex_hull, face_vector, parse, serialize, validate
from .tipping import tip_path

__all__ = [
    "EquilibriumReport", "GeometryError", "Plane", "Polyhedron", "Vec3", "WeightedPolyhedron",
    "classify", "convex_hull", "face_vector", "find_obtuse_cycles", "find_obtuse_paths",
    "generate_mono_monostatic", "maxwell_check", "monostable_weighting", "monounstable_weighting",
    "parse", "polar_dual", "rat", "serialize", "tip_path", "validate",
]
