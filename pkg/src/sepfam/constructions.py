"""Point configurations: collinear, concyclic, Erdos-Szekeres and twin sets."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .geometry import (
    Direction,
    Point,
    PointSet,
    clearance,
    generic_direction,
    is_general_position,
    require_general_position,
)

__all__ = [
    "ES_MAX_K",
    "TwinSet",
    "capped_convex_parent",
    "circle_points",
    "collinear_points",
    "erdos_szekeres_set",
    "random_general_position",
    "twin_set",
]

ES_MAX_K = 8


def collinear_points(n: int) -> PointSet:
    if n < 1:
        raise ValueError("n must be positive")
    return PointSet(Point(Fraction(i), Fraction(0)) for i in range(n))


def circle_points(n: int) -> PointSet:
    """``n`` points on the unit circle, counterclockwise, from parameters t = i/(n+1).

    Uses t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)), so every point is exact.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pts = []
    for i in range(1, n + 1):
        t = Fraction(i, n + 1)
        d = 1 + t * t
        pts.append(Point((1 - t * t) / d, 2 * t / d))
    return PointSet(pts)


def _slope(p: Point, q: Point) -> Fraction:
    return (q.y - p.y) / (q.x - p.x)


def _normalized(part: list[Point]) -> list[Point]:
    mx = min(p.x for p in part)
    my = min(p.y for p in part)
    return [Point(p.x - mx, p.y - my) for p in part]


def _chain(parts: list[list[Point]]) -> list[Point]:
    """Place ``parts`` left to right along a steep convex arc.

    Afterwards every slope between two parts exceeds every slope inside a part,
    and for parts i < m < j each slope from i to m is below each slope from m
    to j. Both properties are checked exactly; the scale doubles until they hold.
    """
    parts = [_normalized(p) for p in parts]
    w = max(max(p.x for p in part) for part in parts)
    h = max(max(p.y for p in part) for part in parts)
    intra = [_slope(p, q) for part in parts for a, p in enumerate(part) for q in part[a + 1:]]
    top = max(intra, default=Fraction(0))
    sigma = max((abs(s) for s in intra), default=Fraction(0))
    k = len(parts)
    gap = (math.ceil(w) + 1) * 8 * k
    lift = (math.ceil(h) + 1) * (math.ceil(sigma) + 1) * gap * 8 * k
    while True:
        placed = [
            [Point(p.x + j * gap, p.y + lift * j * j) for p in part]
            for j, part in enumerate(parts)
        ]
        if _chain_ok(placed, top):
            return [p for part in placed for p in part]
        gap *= 2
        lift *= 4


def _chain_ok(placed: list[list[Point]], top: Fraction) -> bool:
    k = len(placed)
    lo: dict[tuple[int, int], Fraction] = {}
    hi: dict[tuple[int, int], Fraction] = {}
    for i in range(k):
        for j in range(i + 1, k):
            slopes = [_slope(p, q) for p in placed[i] for q in placed[j]]
            lo[i, j] = min(slopes)
            hi[i, j] = max(slopes)
            if lo[i, j] <= top:
                return False
    for i in range(k):
        for m in range(i + 1, k):
            for j in range(m + 1, k):
                if hi[i, m] >= lo[m, j]:
                    return False
    return True


@lru_cache(maxsize=None)
def _cup_cap_free(cup: int, cap: int) -> tuple[Point, ...]:
    # No `cup`-point cup and no `cap`-point cap; C(cup + cap - 4, cup - 2) points.
    if cup == 2 or cap == 2:
        return (Point(Fraction(0), Fraction(0)),)
    left = list(_cup_cap_free(cup - 1, cap))
    right = list(_cup_cap_free(cup, cap - 1))
    return tuple(_chain([left, right]))


def erdos_szekeres_set(k: int) -> PointSet:
    """``2**(k-2)`` points in general position with no ``k`` in convex position.

    Blocks with no (i+2)-cup and no (k-i)-cap, i = 0..k-2, are chained left to
    right; any convex polygon then has at most k-1 vertices.
    """
    if not 3 <= k <= ES_MAX_K:
        raise ValueError(f"k must lie in [3, {ES_MAX_K}], got {k}")
    blocks = [list(_cup_cap_free(i + 2, k - i)) for i in range(k - 1)]
    pts = PointSet(_chain(blocks))
    assert len(pts) == 2 ** (k - 2)
    require_general_position(pts)
    return pts


def capped_convex_parent(m: int) -> PointSet:
    """The first ``m`` points of the smallest Erdos-Szekeres set with at least ``m`` points."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if m > 2 ** (ES_MAX_K - 2):
        raise ValueError(f"m must be at most {2 ** (ES_MAX_K - 2)}")
    k = 3
    while 2 ** (k - 2) < m:
        k += 1
    return erdos_szekeres_set(k)[:m]


@dataclass(frozen=True)
class TwinSet:
    points: PointSet
    pairs: tuple[tuple[int, int], ...]
    parents: PointSet
    epsilon: Fraction
    direction: Direction

    def parent_of(self, index: int) -> int:
        return index // 2


def twin_set(parent: PointSet) -> TwinSet:
    """Replace each parent by two twins at parent +/- offset along a generic direction.

    The offset has L-infinity norm ``clearance(parent) / 2``. Twins of parent i
    get indices 2i and 2i+1.
    """
    if len(parent) < 2:
        raise ValueError("twin_set needs at least two parents")
    require_general_position(parent)
    direction = generic_direction(parent)
    eps = clearance(parent)
    scale = (eps / 2) / max(abs(direction.dx), abs(direction.dy))
    off = Point(direction.dx * scale, direction.dy * scale)
    pts = []
    for p in parent:
        pts.append(p + off)
        pts.append(p - off)
    twins = PointSet(pts)
    ok, triple = is_general_position(twins)
    if not ok:
        raise AssertionError(f"twin set lost general position at {triple}")
    pairs = tuple((2 * i, 2 * i + 1) for i in range(len(parent)))
    return TwinSet(twins, pairs, parent, eps, direction)


def random_general_position(n: int, seed: int = 0, bounding: int = 1000) -> PointSet:
    """``n`` seeded random rational points in general position.

    Coordinates are ``a / q`` with ``|a / q| <= bounding`` and ``q`` in 1..8.
    Candidates that duplicate a point or fall on a line through two chosen
    points are rejected and redrawn.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    pts: list[Point] = []
    while len(pts) < n:
        q = rng.randint(1, 8)
        c = Point(Fraction(rng.randint(-bounding * q, bounding * q), q),
                  Fraction(rng.randint(-bounding * q, bounding * q), q))
        if _extends_general_position(pts, c):
            pts.append(c)
    return PointSet(pts)


def _extends_general_position(pts: list[Point], c: Point) -> bool:
    seen = set()
    for p in pts:
        dx = p.x - c.x
        dy = p.y - c.y
        if dx == 0 and dy == 0:
            return False
        key = None if dx == 0 else dy / dx
        if key in seen:
            return False
        seen.add(key)
    return True
