"""Exact minimum separating families on small point sets.

Two stages: enumerate every distinct trace a separator class can cut out of
the point set, then find the fewest traces that split every pair. The search
works on the partition of the points induced by the traces chosen so far.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .builders import _disc_like_halfplane
from .geometry import Point, convex_hull, cross
from .separators import (
    ConvexPolygon,
    Disc,
    Halfplane,
    SeparatingFamily,
    Separator,
    is_separating,
    trace,
)

__all__ = [
    "CAPS",
    "CapExceededError",
    "InfeasibleError",
    "OracleResult",
    "TraceSet",
    "brute_force_min_size",
    "convex_traces",
    "disc_traces",
    "halfplane_traces",
    "min_separating_size",
    "s_value",
]

CAPS = {"halfplane": 20, "disc": 16, "convex": 14}


class CapExceededError(ValueError):
    """The point set is too large for exact trace enumeration."""


class InfeasibleError(Exception):
    """No subfamily separates the points: s(X, A) is infinite."""

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"no available set separates points {pair[0]} and {pair[1]}")


@dataclass
class TraceSet:
    """Distinct traces of one separator class, each with a lazily built witness."""

    kind: str
    masks: tuple[int, ...]
    points: Sequence[Point] = field(repr=False)
    _recipes: list[Callable[[], Separator]] = field(repr=False)
    _cache: dict[int, Separator] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.masks)

    def witness(self, index: int) -> Separator:
        sep = self._cache.get(index)
        if sep is None:
            sep = self._recipes[index]()
            if trace(sep, self.points) != self.masks[index]:
                raise AssertionError(f"witness for mask {self.masks[index]:b} has the wrong trace")
            self._cache[index] = sep
        return sep

    @property
    def witnesses(self) -> list[Separator]:
        return [self.witness(i) for i in range(len(self.masks))]


class _Collector:
    def __init__(self):
        self.masks: list[int] = []
        self.recipes: list[Callable[[], Separator]] = []
        self.seen: set[int] = set()

    def add(self, mask: int, recipe: Callable[[], Separator]) -> None:
        if mask not in self.seen:
            self.seen.add(mask)
            self.masks.append(mask)
            self.recipes.append(recipe)

    def result(self, kind, points) -> TraceSet:
        return TraceSet(kind, tuple(self.masks), points, self.recipes)


def _check_cap(kind: str, points) -> None:
    if len(points) > CAPS[kind]:
        raise CapExceededError(f"{kind} traces are capped at {CAPS[kind]} points, got {len(points)}")


def _bits(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _shrink_until(points, want: int, make: Callable[[Fraction], Separator | None]) -> Separator:
    t = Fraction(1)
    for _ in range(4096):
        sep = make(t)
        if sep is not None and trace(sep, points) == want:
            return sep
        t /= 2
    raise RuntimeError("perturbation did not converge")


def _far_corner(points) -> Point:
    return Point(max(p.x for p in points) + 1, max(p.y for p in points) + 1)


# -- halfplanes -------------------------------------------------------------

def _halfplane_recipe(points, want, p: Point, nrm, u, side: int, tau: Fraction, sense: int):
    # side * nrm.(x - p) + t * sense * (u.x - tau) <= 0
    def make(t):
        a = side * nrm[0] + t * sense * u[0]
        b = side * nrm[1] + t * sense * u[1]
        c = side * (nrm[0] * p.x + nrm[1] * p.y) + t * sense * tau
        return Halfplane(a, b, c)

    return lambda: _shrink_until(points, want, make)


def halfplane_traces(points: Sequence[Point]) -> TraceSet:
    """Every distinct closed-halfplane trace.

    A separable split can always be realised by a line through two points,
    rotated slightly about a point of that line and/or shifted; points on the
    line then split into a prefix and a suffix along it.
    """
    _check_cap("halfplane", points)
    n = len(points)
    col = _Collector()
    if n == 0:
        return col.result("halfplane", points)
    lo = min(p.x for p in points)
    hi = max(p.x for p in points)
    col.add(0, lambda: Halfplane(1, 0, lo - 1))
    col.add((1 << n) - 1, lambda: Halfplane(1, 0, hi + 1))
    for i in range(n):
        p = points[i]
        for j in range(i + 1, n):
            q = points[j]
            u = (q.x - p.x, q.y - p.y)
            nrm = (-u[1], u[0])
            left = right = 0
            on: list[tuple[Fraction, int]] = []
            for l, r in enumerate(points):
                g = nrm[0] * (r.x - p.x) + nrm[1] * (r.y - p.y)
                if g < 0:
                    left |= 1 << l
                elif g > 0:
                    right |= 1 << l
                else:
                    on.append((u[0] * r.x + u[1] * r.y, l))
            on.sort()
            pos = [s for s, _ in on]
            cuts = [pos[0] - 1] + [(a + b) / 2 for a, b in zip(pos, pos[1:])] + [pos[-1] + 1]
            for side, base in ((1, left), (-1, right)):
                for cut, tau in enumerate(cuts):
                    prefix = _bits(l for _, l in on[:cut])
                    suffix = _bits(l for _, l in on[cut:])
                    for sense, extra in ((1, prefix), (-1, suffix)):
                        mask = base | extra
                        if mask not in col.seen:
                            col.add(mask, _halfplane_recipe(points, mask, p, nrm, u, side, tau, sense))
    return col.result("halfplane", points)


# -- discs ------------------------------------------------------------------

def _circumcircle(a: Point, b: Point, c: Point) -> tuple[Point, Fraction]:
    d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    aa = a.x * a.x + a.y * a.y
    bb = b.x * b.x + b.y * b.y
    cc = c.x * c.x + c.y * c.y
    ox = (aa * (b.y - c.y) + bb * (c.y - a.y) + cc * (a.y - b.y)) / d
    oy = (aa * (c.x - b.x) + bb * (a.x - c.x) + cc * (b.x - a.x)) / d
    o = Point(ox, oy)
    return o, (a.x - ox) ** 2 + (a.y - oy) ** 2


def _angular_order(center: Point, pts: list[tuple[int, Point]]) -> list[int]:
    def half(p: Point) -> int:
        dx, dy = p.x - center.x, p.y - center.y
        return 0 if dy > 0 or (dy == 0 and dx > 0) else 1

    def cmp(a, b):
        ha, hb = half(a[1]), half(b[1])
        if ha != hb:
            return ha - hb
        c = cross(center, a[1], b[1])
        return -1 if c > 0 else (1 if c < 0 else 0)

    return [i for i, _ in sorted(pts, key=functools.cmp_to_key(cmp))]


def _disc_recipe(points, want, center: Point, r2: Fraction, f):
    # |x - center|^2 <= r2 + t * f(x), with f affine: f(x) = fc - fa . x
    fa, fc = f

    def make(t):
        o = Point(center.x - t * fa[0] / 2, center.y - t * fa[1] / 2)
        rr = r2 - (center.x ** 2 + center.y ** 2) + t * fc + o.x ** 2 + o.y ** 2
        return Disc(o, rr) if rr > 0 else None

    return lambda: _shrink_until(points, want, make)


def _arc_functional(points, ring: list[int], start: int, length: int):
    """An affine f, positive exactly on the arc ring[start : start + length] (cyclic)."""
    k = len(ring)
    if length == 0:
        return ((Fraction(0), Fraction(0)), Fraction(-1))
    if length == k:
        return ((Fraction(0), Fraction(0)), Fraction(1))
    first, last = ring[start], ring[(start + length - 1) % k]
    before, after = ring[(start - 1) % k], ring[(start + length) % k]
    m1 = Point((points[before].x + points[first].x) / 2, (points[before].y + points[first].y) / 2)
    m2 = Point((points[last].x + points[after].x) / 2, (points[last].y + points[after].y) / 2)
    a = (m1.y - m2.y, m2.x - m1.x)
    c = a[0] * m1.x + a[1] * m1.y
    p = points[first]
    if a[0] * p.x + a[1] * p.y > c:
        a, c = (-a[0], -a[1]), -c
    return (a, c)


def _interval_disc(points, lo: int, hi: int, order: list[int]) -> Disc:
    # Disc covering the run order[lo..hi] of collinear points, and nothing else.
    a, b = points[order[lo]], points[order[hi]]
    if lo != hi:
        mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
        return Disc(mid, (a.x - mid.x) ** 2 + (a.y - mid.y) ** 2)
    gaps = [
        (a.x - points[order[t]].x) ** 2 + (a.y - points[order[t]].y) ** 2
        for t in (lo - 1, lo + 1)
        if 0 <= t < len(order)
    ]
    return Disc(a, min(gaps, default=Fraction(1)) / 8)


def _collinear_order(points) -> list[int] | None:
    hull = convex_hull(points)
    if len(hull) > 2:
        return None
    a = points[hull[0]]
    b = points[hull[-1]]
    return sorted(range(len(points)), key=lambda i: (b.x - a.x) * points[i].x + (b.y - a.y) * points[i].y)


def _circle_traces(points, col: _Collector) -> None:
    n = len(points)
    done = set()
    for a, b, c in itertools.combinations(range(n), 3):
        if cross(points[a], points[b], points[c]) == 0:
            continue
        center, r2 = _circumcircle(points[a], points[b], points[c])
        if (center, r2) in done:
            continue
        done.add((center, r2))
        inside = 0
        ring = []
        for l, p in enumerate(points):
            d = (p.x - center.x) ** 2 + (p.y - center.y) ** 2
            if d < r2:
                inside |= 1 << l
            elif d == r2:
                ring.append((l, p))
        ring_order = _angular_order(center, ring)
        k = len(ring_order)
        arcs = [(0, 0), (0, k)] + [(s, L) for s in range(k) for L in range(1, k)]
        for s, L in arcs:
            mask = inside | _bits(ring_order[(s + t) % k] for t in range(L))
            if mask not in col.seen:
                f = _arc_functional(points, ring_order, s, L)
                col.add(mask, _disc_recipe(points, mask, center, r2, f))


def disc_traces(points: Sequence[Point]) -> TraceSet:
    """Every distinct closed-disc trace.

    Lifting to the paraboloid turns discs into lower halfspaces; an extreme
    realising plane passes through three lifted points, i.e. a circle through
    three points, and the points on that circle split along an arc. Collinear
    sets only admit contiguous runs. Halfplane traces are unioned in as a
    guard (huge discs realise them).
    """
    _check_cap("disc", points)
    n = len(points)
    col = _Collector()
    if n == 0:
        return col.result("disc", points)
    corner = _far_corner(points)
    col.add(0, lambda: Disc(corner, Fraction(1, 4)))
    order = _collinear_order(points) if n >= 2 else [0]
    if order is not None:
        for lo in range(n):
            for hi in range(lo, n):
                mask = _bits(order[lo:hi + 1])
                col.add(mask, functools.partial(_interval_disc, points, lo, hi, order))
        return col.result("disc", points)
    _circle_traces(points, col)
    hp = halfplane_traces(points)
    for i, mask in enumerate(hp.masks):
        if mask not in col.seen:
            col.add(mask, lambda i=i: _disc_like_halfplane(points, hp.witness(i), range(n)))
    return col.result("disc", points)


# -- convex sets ------------------------------------------------------------

def _in_triangle(a: Point, b: Point, c: Point, p: Point) -> bool:
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    return (d1 >= 0 and d2 >= 0 and d3 >= 0) or (d1 <= 0 and d2 <= 0 and d3 <= 0)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    return cross(a, b, p) == 0 and min(a.x, b.x) <= p.x <= max(a.x, b.x) \
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def _convex_polygon_recipe(points, mask: int):
    def make():
        if mask == 0:
            return ConvexPolygon((_far_corner(points),))
        return ConvexPolygon.hull_of(points, [i for i in range(len(points)) if (mask >> i) & 1])

    return make


def convex_traces(points: Sequence[Point]) -> TraceSet:
    """Every subset A with hull(A) n X = A, each witnessed by hull(A).

    A subset fails exactly when some outside point lies on a segment or in a
    triangle spanned by members, so all 2^n subsets are filtered against those
    blockers at once.
    """
    _check_cap("convex", points)
    n = len(points)
    subsets = np.arange(1 << n, dtype=np.int64)
    bad = np.zeros(1 << n, dtype=bool)
    for x in range(n):
        px = points[x]
        xb = 1 << x
        lacks_x = (subsets & xb) == 0
        others = [i for i in range(n) if i != x]
        for a, b in itertools.combinations(others, 2):
            if _on_segment(points[a], points[b], px):
                t = (1 << a) | (1 << b)
                bad |= lacks_x & ((subsets & t) == t)
        for a, b, c in itertools.combinations(others, 3):
            pa, pb, pc = points[a], points[b], points[c]
            if cross(pa, pb, pc) != 0 and _in_triangle(pa, pb, pc, px):
                t = (1 << a) | (1 << b) | (1 << c)
                bad |= lacks_x & ((subsets & t) == t)
    col = _Collector()
    for mask in np.flatnonzero(~bad).tolist():
        col.add(int(mask), _convex_polygon_recipe(points, int(mask)))
    return col.result("convex", points)


ENUMERATORS = {
    "halfplane": halfplane_traces,
    "disc": disc_traces,
    "convex": convex_traces,
}


# -- minimum separating subfamily -------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    size: int
    family: SeparatingFamily
    explored: int
    masks: tuple[int, ...] = ()


def _ceil_log2(k: int) -> int:
    return (k - 1).bit_length() if k > 1 else 0


class _Search:
    """Iterative-deepening branch and bound over induced partitions."""

    def __init__(self, n: int, cands: list[int]):
        self.n = n
        self.cands = cands
        self.cover: dict[tuple[int, int], int] = {}
        for i in range(n):
            for j in range(i + 1, n):
                c = 0
                for t, m in enumerate(cands):
                    if ((m >> i) ^ (m >> j)) & 1:
                        c |= 1 << t
                self.cover[i, j] = c
        self.count = {p: c.bit_count() for p, c in self.cover.items()}
        self.pair_order = sorted(self.cover, key=lambda p: (self.count[p], p))
        self.failed: dict[tuple[int, ...], int] = {}
        self.explored = 0

    def infeasible_pair(self):
        for p in sorted(self.cover):
            if self.cover[p] == 0:
                return p
        return None

    def _uncovered(self, classes: tuple[int, ...]) -> list[tuple[int, int]]:
        owner = {}
        for k, c in enumerate(classes):
            m = c
            while m:
                low = m & -m
                owner[low.bit_length() - 1] = k
                m ^= low
        return [p for p in self.pair_order if p[0] in owner and owner[p[0]] == owner.get(p[1])]

    def lower_bound(self, classes: tuple[int, ...], uncovered=None) -> int:
        if not classes:
            return 0
        lb = max(_ceil_log2(c.bit_count()) for c in classes)
        if uncovered is None:
            uncovered = self._uncovered(classes)
        for b in (1, 2, 3):
            levels = [0] * b
            taken = 0
            for p in uncovered:
                c = self.cover[p]
                if c & levels[-1]:
                    continue
                for lv in range(b - 1, 0, -1):
                    levels[lv] |= levels[lv - 1] & c
                levels[0] |= c
                taken += 1
            lb = max(lb, -(-taken // b))
        return lb

    @staticmethod
    def _refine(classes: tuple[int, ...], m: int) -> tuple[int, ...]:
        out = []
        for c in classes:
            a = c & m
            b = c ^ a
            if a & (a - 1):
                out.append(a)
            if b & (b - 1):
                out.append(b)
        return tuple(sorted(out))

    @staticmethod
    def _refines(fine: tuple[int, ...], coarse: tuple[int, ...]) -> bool:
        return all(any(f & c == f for c in coarse) for f in fine)

    def dfs(self, classes: tuple[int, ...], budget: int) -> list[int] | None:
        self.explored += 1
        if not classes:
            return []
        if budget == 0 or self.failed.get(classes, -1) >= budget:
            return None
        uncovered = self._uncovered(classes)
        if self.lower_bound(classes, uncovered) > budget:
            self.failed[classes] = budget
            return None
        pivot = min(uncovered, key=lambda p: (self.count[p], p))
        children: dict[tuple[int, ...], int] = {}
        c = self.cover[pivot]
        while c:
            low = c & -c
            t = low.bit_length() - 1
            c ^= low
            key = self._refine(classes, self.cands[t])
            children.setdefault(key, t)
        keys = list(children)
        if len(keys) <= 400:
            keys = [
                k for k in keys
                if not any(o != k and self._refines(o, k) for o in children)
            ]
        scored = []
        for k in keys:
            lb = self.lower_bound(k)
            if lb <= budget - 1:
                pairs = sum(x.bit_count() * (x.bit_count() - 1) for x in k)
                scored.append((lb, pairs, children[k], k))
        scored.sort()
        for _, _, t, k in scored:
            rest = self.dfs(k, budget - 1)
            if rest is not None:
                return [t] + rest
        self.failed[classes] = budget
        return None

    def solve(self) -> list[int]:
        root = ((1 << self.n) - 1,) if self.n >= 2 else ()
        budget = self.lower_bound(root)
        while True:
            found = self.dfs(root, budget)
            if found is not None:
                return found
            budget += 1


def _canonical(traces: TraceSet, n: int) -> tuple[list[int], list[int]]:
    full = (1 << n) - 1
    seen: dict[int, int] = {}
    for idx, m in enumerate(traces.masks):
        c = full ^ m if m & 1 else m
        if c and c not in seen:
            seen[c] = idx
    return list(seen), list(seen.values())


def min_separating_size(traces: TraceSet, points: Sequence[Point] | None = None) -> OracleResult:
    """Fewest traces from ``traces`` that split every pair of points.

    Masks are canonicalised to the complement-free form without point 0.
    Raises :class:`InfeasibleError` when some pair is split by no trace.
    """
    points = traces.points if points is None else points
    n = len(points)
    cands, origin = _canonical(traces, n)
    search = _Search(n, cands)
    bad = search.infeasible_pair()
    if bad is not None:
        raise InfeasibleError(bad)
    chosen = search.solve()
    family = SeparatingFamily(
        [traces.witness(origin[t]) for t in chosen],
        f"oracle({traces.kind}, n={n})",
    )
    size = len(chosen)
    if n >= 2:
        assert _ceil_log2(n) <= size <= n - 1, (size, n)
    ok, pair = is_separating(family, points)
    assert ok, pair
    return OracleResult(size, family, search.explored, tuple(traces.masks[origin[t]] for t in chosen))


def s_value(points: Sequence[Point], kind: str) -> OracleResult:
    try:
        enumerate_traces = ENUMERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown separator class {kind!r}; choose from {sorted(ENUMERATORS)}") from None
    return min_separating_size(enumerate_traces(points), points)


def brute_force_min_size(masks: Sequence[int], n: int) -> int | None:
    """Smallest number of masks separating all n points, by plain enumeration.

    Independent of the branch-and-bound path: every combination of each size
    is tried, smallest size first. Returns None if no combination works.
    """
    if n <= 1:
        return 0
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    split = []
    for m in set(masks):
        s = 0
        for b, (i, j) in enumerate(pairs):
            if ((m >> i) & 1) != ((m >> j) & 1):
                s |= 1 << b
        if s:
            split.append(s)
    everything = (1 << len(pairs)) - 1
    for size in range(1, n):
        for combo in itertools.combinations(split, size):
            acc = 0
            for s in combo:
                acc |= s
            if acc == everything:
                return size
    return None
