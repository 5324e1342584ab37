"""Exact rational scalars, 3-vectors, planes and sign predicates.

Every predicate in the package reduces to the sign of a dot product or a
determinant evaluated over ``gmpy2.mpq`` rationals, so results are
bit-exact.  Nothing here normalizes a vector.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

from gmpy2 import mpq

from .errors import DegenerateInput, ParallelLine, SchemaError

Rat = type(mpq())
RatLike = Union[int, str, "Rat"]

ZERO = mpq(0)
ONE = mpq(1)


def rat(value) -> Rat:
    """Coerce an int, an mpq, a Fraction, or a ``"p/q"`` string to an exact rational.

    Floats are refused: they would silently import rounding error.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(f"expected an exact rational, got {value!r}")
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                p, q = text.split("/")
                q = int(q)
                if q == 0:
                    raise SchemaError(f"zero denominator in {value!r}")
                return mpq(int(p), q)
            return mpq(int(text))
        except ValueError as exc:
            raise SchemaError(f"malformed rational {value!r}") from exc
    try:
        return mpq(value)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"expected an exact rational, got {value!r}") from exc


def rat_to_json(x: Rat) -> int | str:
    """Canonical JSON form: a bare integer, or ``"p/q"`` with ``q > 1``."""
    if x.denominator == 1:
        return int(x.numerator)
    return f"{int(x.numerator)}/{int(x.denominator)}"


def sign(x) -> int:
    return (x > 0) - (x < 0)


class Vec3:
    """An exact rational 3-vector."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x, y, z):
        self.x = x if type(x) is Rat else rat(x)
        self.y = y if type(y) is Rat else rat(y)
        self.z = z if type(z) is Rat else rat(z)

    @classmethod
    def of(cls, seq: Iterable) -> "Vec3":
        x, y, z = seq
        return cls(x, y, z)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, s) -> "Vec3":
        s = mpq(s)
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __truediv__(self, s) -> "Vec3":
        s = mpq(s)
        if s == 0:
            raise ZeroDivisionError("vector divided by zero")
        return Vec3(self.x / s, self.y / s, self.z / s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vec3):
            return NotImplemented
        return self.x == other.x and self.y == other.y and self.z == other.z

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.z))

    def __repr__(self) -> str:
        return f"Vec3({rat_to_json(self.x)!r}, {rat_to_json(self.y)!r}, {rat_to_json(self.z)!r})"

    def dot(self, other: "Vec3") -> Rat:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm2(self) -> Rat:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def to_json(self) -> list:
        return [rat_to_json(self.x), rat_to_json(self.y), rat_to_json(self.z)]


ORIGIN = Vec3(0, 0, 0)


def centroid(points: Iterable[Vec3]) -> Vec3:
    pts = list(points)
    total = Vec3(0, 0, 0)
    for p in pts:
        total = total + p
    return total / len(pts)


def orient3d(a: Vec3, b: Vec3, c: Vec3, d: Vec3) -> Rat:
    """Six times the signed volume of tetrahedron abcd."""
    return (b - a).cross(c - a).dot(d - a)


@dataclass(frozen=True)
class Plane:
    """The set of points x with ``normal . x == offset``."""

    normal: Vec3
    offset: Rat

    def __post_init__(self):
        if self.normal.is_zero():
            raise DegenerateInput("plane normal is zero")

    @classmethod
    def through(cls, a: Vec3, b: Vec3, c: Vec3) -> "Plane":
        n = (b - a).cross(c - a)
        return cls(n, n.dot(a))

    @classmethod
    def with_normal(cls, normal: Vec3, point: Vec3) -> "Plane":
        return cls(normal, normal.dot(point))

    def evaluate(self, x: Vec3) -> Rat:
        """Signed (unnormalized) offset of ``x``; zero exactly on the plane."""
        return self.normal.dot(x) - self.offset

    def side(self, x: Vec3) -> int:
        return sign(self.evaluate(x))


class AngleClass(enum.Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"

    @classmethod
    def from_cosine_sign(cls, s) -> "AngleClass":
        if s > 0:
            return cls.ACUTE
        if s < 0:
            return cls.OBTUSE
        return cls.RIGHT


def angle_sign(apex: Vec3, p: Vec3, q: Vec3) -> AngleClass:
    """Classify the angle p-apex-q by the sign of ``(p - apex) . (q - apex)``."""
    if p == apex or q == apex:
        raise DegenerateInput("angle arm has zero length")
    return AngleClass.from_cosine_sign((p - apex).dot(q - apex))


def intersect_line_plane(a: Vec3, b: Vec3, plane: Plane) -> tuple[Vec3, Rat]:
    """Point where line ab meets ``plane``, with its parameter along ``b - a``.

    ``t`` is returned so callers can require ``0 < t < 1`` for segment cuts.
    """
    direction = b - a
    denom = plane.normal.dot(direction)
    if denom == 0:
        raise ParallelLine("line is parallel to the plane")
    t = (plane.offset - plane.normal.dot(a)) / denom
    return a + direction * t, t


def project_point_to_plane(o: Vec3, plane: Plane) -> Vec3:
    n = plane.normal
    return o - n * (plane.evaluate(o) / n.norm2())


def project_point_to_line(o: Vec3, a: Vec3, b: Vec3) -> tuple[Vec3, Rat]:
    u = b - a
    if u.is_zero():
        raise DegenerateInput("line through coincident points")
    t = (o - a).dot(u) / u.norm2()
    return a + u * t, t
