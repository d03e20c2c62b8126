"""Independent reference checks used across the test modules.

Nothing here calls into the library's geometry beyond the Point type, so a
bug in a predicate cannot hide behind the same predicate in its own oracle.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import settings

from sepfam.geometry import Point

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")


def det(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def sign(v):
    return (v > 0) - (v < 0)


def on_segment(a, b, p):
    if det(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_meet(a, b, c, d):
    d1, d2 = sign(det(a, b, c)), sign(det(a, b, d))
    d3, d4 = sign(det(c, d, a)), sign(det(c, d, b))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return on_segment(a, b, c) or on_segment(a, b, d) or on_segment(c, d, a) or on_segment(c, d, b)


def in_triangle(a, b, c, p):
    s = [sign(det(a, b, p)), sign(det(b, c, p)), sign(det(c, a, p))]
    return not (min(s) < 0 < max(s))


def simplex_meets(A, B):
    """Closed hulls of two point tuples with |A| + |B| <= 4 intersect."""
    if len(A) > len(B):
        A, B = B, A
    if len(A) == 1:
        p = A[0]
        if len(B) == 1:
            return p == B[0]
        if len(B) == 2:
            return on_segment(B[0], B[1], p)
        if det(*B) == 0:
            return any(on_segment(u, v, p) for u, v in itertools.combinations(B, 2))
        return in_triangle(*B, p)
    return segments_meet(A[0], A[1], B[0], B[1])


def hulls_disjoint(A, B):
    """Kirchberger in the plane: two finite sets are strictly separable by a
    line iff every choice of at most 4 points from their union is."""
    for a in range(1, 4):
        for b in range(1, 5 - a):
            for sa in itertools.combinations(A, a):
                for sb in itertools.combinations(B, b):
                    if simplex_meets(sa, sb):
                        return False
    return True


def brute_halfplane_masks(points):
    """Every subset whose hull is disjoint from the hull of its complement."""
    n = len(points)
    pts = [tuple(p) for p in points]
    out = set()
    for m in range(1 << n):
        A = [pts[i] for i in range(n) if m >> i & 1]
        B = [pts[i] for i in range(n) if not m >> i & 1]
        if not A or not B or hulls_disjoint(A, B):
            out.add(m)
    return out


def in_hull(A, p):
    """Closed-hull membership by Caratheodory: p lies in a triangle, segment or point of A."""
    if p in A:
        return True
    for a, b in itertools.combinations(A, 2):
        if on_segment(a, b, p):
            return True
    for a, b, c in itertools.combinations(A, 3):
        if det(a, b, c) != 0 and in_triangle(a, b, c, p):
            return True
    return False


def brute_convex_masks(points):
    n = len(points)
    pts = [tuple(p) for p in points]
    out = set()
    for m in range(1 << n):
        A = [pts[i] for i in range(n) if m >> i & 1]
        if all(m >> i & 1 or not in_hull(A, pts[i]) for i in range(n)):
            out.add(m)
    return out


def convex_position_brute(pts):
    """No point of the set lies in the closed hull of the others."""
    pts = [tuple(p) for p in pts]
    return all(not in_hull(pts[:i] + pts[i + 1:], pts[i]) for i in range(len(pts)))


def pair_split(masks, n):
    """Which index pairs each mask splits, as a bitset over pairs."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for m in masks:
        s = 0
        for b, (i, j) in enumerate(pairs):
            if (m >> i & 1) != (m >> j & 1):
                s |= 1 << b
        out.append(s)
    return out, (1 << len(pairs)) - 1


def popcount(m):
    return bin(m).count("1")


def pts(*coords):
    return [Point(Fraction(x), Fraction(y)) for x, y in coords]


@pytest.fixture
def square_and_center():
    return pts((0, 0), (2, 0), (2, 2), (0, 2), (1, 1))
