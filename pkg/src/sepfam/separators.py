"""Separator classes, exact membership, traces and family verification.

All regions are closed: boundary points are members.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .geometry import Point, convex_hull, cross, to_rational

__all__ = [
    "ConvexPolygon",
    "Disc",
    "Halfplane",
    "SeparatingFamily",
    "Separator",
    "contains",
    "is_separating",
    "separates",
    "signature_table",
    "trace",
    "traces",
    "unseparated_pair",
]


@dataclass(frozen=True)
class Halfplane:
    """The closed halfplane ``a*x + b*y <= c``."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.a == 0 and self.b == 0:
            raise ValueError("halfplane normal (a, b) must be non-zero")

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y <= self.c


@dataclass(frozen=True)
class Disc:
    """The closed disc ``|p - center|^2 <= radius_sq``."""

    center: Point
    radius_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", Point.of(*self.center))
        object.__setattr__(self, "radius_sq", to_rational(self.radius_sq))
        if self.radius_sq <= 0:
            raise ValueError("disc radius_sq must be positive")

    def contains(self, p: Point) -> bool:
        dx = p.x - self.center.x
        dy = p.y - self.center.y
        return dx * dx + dy * dy <= self.radius_sq


@dataclass(frozen=True)
class ConvexPolygon:
    """A closed convex polygon given by counterclockwise vertices.

    One vertex is a point and two vertices a segment. Collinear consecutive
    vertices are tolerated, reflex turns are not.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(Point.of(*v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValueError("polygon needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValueError("polygon vertices must be pairwise distinct")
        k = len(verts)
        if k >= 3:
            turns = [cross(verts[i], verts[(i + 1) % k], verts[(i + 2) % k]) for i in range(k)]
            if any(t < 0 for t in turns):
                raise ValueError("polygon vertices must be counterclockwise without reflex turns")
            if all(t == 0 for t in turns):
                raise ValueError("polygon with three or more collinear vertices; use two endpoints")

    @classmethod
    def hull_of(cls, points: Sequence[Point], indices: Iterable[int]) -> "ConvexPolygon":
        return cls(tuple(points[i] for i in convex_hull(points, indices)))

    def contains(self, p: Point) -> bool:
        v = self.vertices
        k = len(v)
        if k == 1:
            return p == v[0]
        if k == 2:
            a, b = v
            if cross(a, b, p) != 0:
                return False
            return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)
        return all(cross(v[i], v[(i + 1) % k], p) >= 0 for i in range(k))


Separator = Union[Halfplane, Disc, ConvexPolygon]


@dataclass(frozen=True)
class SeparatingFamily:
    """An ordered list of separators plus free-text provenance."""

    separators: tuple[Separator, ...] = ()
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "separators", tuple(self.separators))

    def __len__(self) -> int:
        return len(self.separators)

    def __iter__(self):
        return iter(self.separators)

    def __getitem__(self, i):
        return self.separators[i]


def contains(s: Separator, p: Point) -> bool:
    return s.contains(p)


def separates(s: Separator, p: Point, q: Point) -> bool:
    if p == q:
        raise ValueError("separates() needs two distinct points")
    return s.contains(p) != s.contains(q)


def trace(s: Separator, points: Sequence[Point]) -> int:
    """Bitmask with bit ``i`` set iff ``points[i]`` lies in ``s``."""
    mask = 0
    for i, p in enumerate(points):
        if s.contains(p):
            mask |= 1 << i
    return mask


def traces(family: Iterable[Separator], points: Sequence[Point]) -> list[int]:
    return [trace(s, points) for s in family]


def signature_table(family: Iterable[Separator], points: Sequence[Point]) -> list[tuple[int, ...]]:
    """Row ``i`` holds point ``i``'s membership bit in each separator, in family order."""
    masks = traces(family, points)
    return [tuple((m >> i) & 1 for m in masks) for i in range(len(points))]


def unseparated_pair(family: Iterable[Separator], points: Sequence[Point]) -> tuple[int, int] | None:
    """The lexicographically first pair no member separates, or None."""
    rows = signature_table(family, points)
    first: dict[tuple[int, ...], int] = {}
    best = None
    for j, row in enumerate(rows):
        i = first.setdefault(row, j)
        if i != j and (best is None or (i, j) < best):
            best = (i, j)
    return best


def is_separating(family: Iterable[Separator], points: Sequence[Point]) -> tuple[bool, tuple[int, int] | None]:
    pair = unseparated_pair(family, points)
    return pair is None, pair
