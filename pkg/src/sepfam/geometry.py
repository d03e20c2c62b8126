"""Exact rational planar primitives.

Every coordinate is a :class:`fractions.Fraction`; no predicate in this module
touches floating point.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from itertools import count
from numbers import Rational
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

__all__ = [
    "Direction",
    "GeneralPositionError",
    "Orientation",
    "Point",
    "PointSet",
    "clearance",
    "convex_hull",
    "generic_direction",
    "in_convex_position",
    "is_general_position",
    "orientation",
    "to_rational",
]


class GeneralPositionError(ValueError):
    """Raised when an operation needs general position and gets a collinear triple."""

    def __init__(self, triple: tuple[int, int, int], message: str | None = None):
        self.triple = triple
        super().__init__(message or f"points {triple} are collinear; general position required")


def to_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction without loss.

    Accepts ints, Fractions, other ``numbers.Rational`` instances, strings
    understood by ``Fraction`` and finite floats (converted exactly).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(float(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational coordinate")


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(to_rational(x), to_rational(y))

    def __sub__(self, other):  # type: ignore[override]
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other.x, self.y + other.y)


class Direction(NamedTuple):
    dx: Fraction
    dy: Fraction

    def dot(self, p: Point) -> Fraction:
        return self.dx * p.x + self.dy * p.y


class PointSet(Sequence[Point]):
    """An ordered set of pairwise distinct points; indices are identities."""

    __slots__ = ("_points",)

    def __init__(self, points: Iterable = ()):
        pts = tuple(p if _is_exact_point(p) else Point.of(*p) for p in points)
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise ValueError(f"duplicate point {p} at indices {seen[p]} and {i}")
            seen[p] = i
        self._points = pts

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return PointSet(self._points[index])
        return self._points[index]

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        inner = ", ".join(f"({p.x}, {p.y})" for p in self._points)
        return f"PointSet([{inner}])"

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(self._points[i] for i in indices)


def _is_exact_point(p) -> bool:
    return isinstance(p, Point) and type(p.x) is Fraction and type(p.y) is Fraction


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross(p: Point, q: Point, r: Point) -> Fraction:
    """(q - p) x (r - p)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    c = cross(p, q, r)
    if c > 0:
        return Orientation.COUNTERCLOCKWISE
    if c < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def _slope_key(p: Point, q: Point):
    dx = q.x - p.x
    if dx == 0:
        return None
    return (q.y - p.y) / dx


def is_general_position(points: Sequence[Point]) -> tuple[bool, tuple[int, int, int] | None]:
    """Return ``(True, None)`` or ``(False, (i, j, l))`` for a collinear triple.

    The witness is the first triple found scanning anchors ``i`` in index
    order, so collinear prefixes report ``(0, 1, 2)``.
    """
    n = len(points)
    for i in range(n - 2):
        p = points[i]
        seen: dict = {}
        for j in range(i + 1, n):
            key = _slope_key(p, points[j])
            if key in seen:
                return False, (i, seen[key], j)
            seen[key] = j
    return True, None


def require_general_position(points: Sequence[Point]) -> None:
    ok, triple = is_general_position(points)
    if not ok:
        raise GeneralPositionError(triple)


def convex_hull(points: Sequence[Point], indices: Iterable[int] | None = None) -> list[int]:
    """Counterclockwise hull vertex indices, starting at the lowest-leftmost point.

    Points in the relative interior of hull edges are dropped. Collinear input
    yields the two extreme indices; a single point yields itself.
    """
    idx = list(range(len(points))) if indices is None else list(indices)
    if not idx:
        raise ValueError("convex hull of an empty set")
    idx.sort(key=lambda i: (points[i].x, points[i].y, i))
    if len(idx) <= 2:
        return idx

    def chain(order: list[int]) -> list[int]:
        out: list[int] = []
        for i in order:
            while len(out) >= 2 and cross(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(idx)
    upper = chain(idx[::-1])
    return lower[:-1] + upper[:-1]


def in_convex_position(points: Sequence[Point], indices: Iterable[int] | None = None) -> bool:
    idx = list(range(len(points))) if indices is None else list(indices)
    if len(idx) <= 2:
        return True
    return len(convex_hull(points, idx)) == len(idx)


def _candidate_slopes() -> Iterator[Fraction]:
    for j in count(1):
        yield Fraction(j, j + 1)
        yield Fraction(-j, j + 2)


def generic_direction(points: Sequence[Point]) -> Direction:
    """A direction neither parallel nor perpendicular to any line through two points.

    Projections onto the result are pairwise distinct. Deterministic: the first
    admissible slope from a fixed candidate sequence is returned as ``(1, s)``.
    """
    n = len(points)
    if n < 2:
        raise ValueError("generic_direction needs at least two points")
    slopes = set()
    for i in range(n):
        p = points[i]
        for j in range(i + 1, n):
            slopes.add(_slope_key(p, points[j]))
    for s in _candidate_slopes():
        if s in slopes or (-1 / s) in slopes:
            continue
        return Direction(Fraction(1), s)
    raise AssertionError("unreachable")


def _integer_grid(points: Sequence[Point]) -> tuple[int, list[int], list[int]]:
    scale = 1
    for p in points:
        scale = math.lcm(scale, p.x.denominator, p.y.denominator)
    xs = [int(p.x * scale) for p in points]
    ys = [int(p.y * scale) for p in points]
    return scale, xs, ys


def clearance(points: Sequence[Point]) -> Fraction:
    """A positive displacement bound that preserves every orientation sign.

    The result is a quarter of the smaller of (a) the least L-infinity distance
    between two points and (b) the least lower bound ``|cross| / L1(q - p)`` on
    the distance from a point to a line through two others (incident triples
    skipped). Moving a single point by at most this much in L-infinity cannot
    flip a non-zero orientation.
    """
    n = len(points)
    if n < 2:
        raise ValueError("clearance needs at least two points")
    scale, xs, ys = _integer_grid(points)
    maxabs = max(max(map(abs, xs)), max(map(abs, ys)), 1)
    dtype = np.int64 if maxabs < 2**29 else object
    X = np.array(xs, dtype=dtype)
    Y = np.array(ys, dtype=dtype)
    big = 8 * maxabs * maxabs + 1

    best_pair: int | None = None
    best_line: tuple[int, int] | None = None  # (|cross|, l1) as an exact ratio
    for i in range(n - 1):
        dx = X[i + 1:] - X[i]
        dy = Y[i + 1:] - Y[i]
        linf = np.maximum(np.abs(dx), np.abs(dy))
        m = int(linf.min())
        if best_pair is None or m < best_pair:
            best_pair = m
        if n < 3:
            continue
        rx = X - X[i]
        ry = Y - Y[i]
        cr = np.abs(np.outer(dx, ry) - np.outer(dy, rx))
        cr = np.where(cr == 0, big, cr)
        mins = cr.min(axis=1)
        l1 = np.abs(dx) + np.abs(dy)
        for c, d in zip(mins.tolist(), l1.tolist()):
            if c == big:
                continue
            if best_line is None or c * best_line[1] < best_line[0] * d:
                best_line = (int(c), int(d))
    bound = Fraction(best_pair)
    if best_line is not None:
        bound = min(bound, Fraction(best_line[0], best_line[1]))
    return bound / (4 * scale)
