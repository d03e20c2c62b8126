"""Constructive separating families.

Each builder returns a :class:`SeparatingFamily`; none of them trust their own
output, the callers that matter (CLI, estimators) re-verify.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import (
    Point,
    clearance,
    convex_hull,
    cross,
    generic_direction,
    in_convex_position,
    require_general_position,
)
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
    "BUILDERS",
    "ConvexStepRecord",
    "SplitState",
    "binary_family",
    "build",
    "convex_separate",
    "convex_separate_steps",
    "disc_separate",
    "halfplane_separate",
    "largest_convex_subset",
    "prefix_halfplanes",
    "prune_to_minimal",
]


def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _projection_order(points: Sequence[Point], indices: Sequence[int] | None = None):
    d = generic_direction(points)
    idx = range(len(points)) if indices is None else indices
    proj = {i: d.dot(points[i]) for i in idx}
    return d, sorted(idx, key=proj.__getitem__), proj


def prefix_halfplanes(points: Sequence[Point]) -> SeparatingFamily:
    """n-1 nested halfplanes; the i-th holds exactly the first i points along a generic direction."""
    n = len(points)
    if n < 1:
        raise ValueError("prefix_halfplanes needs at least one point")
    if n == 1:
        return SeparatingFamily((), "prefix_halfplanes(n=1)")
    d, order, proj = _projection_order(points)
    fam = [
        Halfplane(d.dx, d.dy, (proj[order[i]] + proj[order[i + 1]]) / 2)
        for i in range(n - 1)
    ]
    return SeparatingFamily(fam, f"prefix_halfplanes(n={n})")


@dataclass
class SplitState:
    """Bookkeeping of the halving procedure: the two sides of the median line."""

    Q: list[int]
    R: list[int]
    boundary: Halfplane
    step: int = 0


def _crossing_edge(points, state: SplitState) -> tuple[int, int, bool]:
    """A hull edge of Q u R with one end on each side, as (q_end, r_end, q_first).

    ``q_first`` tells whether the edge runs q -> r in counterclockwise order.
    Lower minimum index wins between the two candidates.
    """
    qs = set(state.Q)
    hull = convex_hull(points, state.Q + state.R)
    if len(hull) == 2:
        edges = [(hull[0], hull[1])]
    else:
        edges = [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]
    crossing = [(u, v) for u, v in edges if (u in qs) != (v in qs)]
    u, v = min(crossing, key=lambda e: (min(e), max(e)))
    if u in qs:
        return u, v, True
    return v, u, False


def _edge_halfplane(p: Point, q: Point) -> Halfplane:
    # Closed halfplane right of the directed line p -> q, boundary through both.
    a = p.y - q.y
    b = q.x - p.x
    return Halfplane(a, b, a * p.x + b * p.y)


def _split(points, order, proj, d) -> SplitState:
    half = len(order) // 2
    c0 = (proj[order[half - 1]] + proj[order[half]]) / 2
    return SplitState(list(order[:half]), list(order[half:]), Halfplane(d.dx, d.dy, c0))


def halfplane_separate(points: Sequence[Point]) -> SeparatingFamily:
    """ceil(n/2) halfplanes for a point set in general position.

    A median line splits the points into Q and R. Each step peels the
    endpoints q, r of a hull edge crossing that line with the halfplane beyond
    the edge's own supporting line. Odd n first cuts off the point of least
    projection with one extra halfplane.
    """
    n = len(points)
    if n < 1:
        raise ValueError("halfplane_separate needs at least one point")
    require_general_position(points)
    if n == 1:
        return SeparatingFamily((), "halfplane_separate(n=1)")
    d, order, proj = _projection_order(points)
    fam: list[Separator] = []
    if n % 2:
        fam.append(Halfplane(d.dx, d.dy, (proj[order[0]] + proj[order[1]]) / 2))
        order = order[1:]
    state = _split(points, order, proj, d)
    fam.append(state.boundary)
    while len(state.Q) > 1:
        state.step += 1
        q, r, q_first = _crossing_edge(points, state)
        u, v = (q, r) if q_first else (r, q)
        fam.append(_edge_halfplane(points[u], points[v]))
        state.Q.remove(q)
        state.R.remove(r)
    return SeparatingFamily(fam, f"halfplane_separate(n={n})")


def _grow_until(make, want: int, points, universe: Sequence[int]):
    """Double the scale handed to ``make`` until its trace on ``universe`` is ``want``."""
    sub = [points[i] for i in universe]
    scale = Fraction(1)
    for _ in range(4096):
        disc = make(scale)
        got = trace(disc, sub)
        if got == want:
            return disc
        scale *= 2
    raise RuntimeError("disc realization did not converge")


def _disc_like_halfplane(points, h: Halfplane, universe: Sequence[int]) -> Disc:
    """A disc inside ``h`` with ``h``'s trace on ``universe`` (no point on h's boundary)."""
    sub = [points[i] for i in universe]
    want = trace(h, sub)
    gx = sum(p.x for p in sub) / len(sub)
    gy = sum(p.y for p in sub) / len(sub)
    nn = h.a * h.a + h.b * h.b
    lam = (h.c - h.a * gx - h.b * gy) / nn
    foot = Point(gx + lam * h.a, gy + lam * h.b)

    def make(s):
        return Disc(Point(foot.x - s * h.a, foot.y - s * h.b), s * s * nn)

    return _grow_until(make, want, points, universe)


def _disc_on_chord(points, q: int, r: int, normal: tuple[Fraction, Fraction], universe) -> Disc:
    """A disc whose trace on ``universe`` is exactly {q, r}.

    The centre sits on the side ``normal`` points to, so the disc meets the
    line qr in exactly the segment qr; pushing it away flattens the bulge on
    the other side below every remaining point.
    """
    p, s_ = points[q], points[r]
    mid = Point((p.x + s_.x) / 2, (p.y + s_.y) / 2)
    nx, ny = normal
    want = 0
    for t, i in enumerate(universe):
        if i in (q, r):
            want |= 1 << t

    def make(s):
        c = Point(mid.x + s * nx, mid.y + s * ny)
        dx, dy = p.x - c.x, p.y - c.y
        return Disc(c, dx * dx + dy * dy)

    return _grow_until(make, want, points, universe)


def _adjacent_crossing_pair(points, state: SplitState):
    """Consecutive points along a crossing hull edge, one from each side.

    Needed when other points lie on that edge (collinear input); in general
    position it is just the edge's endpoints.
    """
    q_end, r_end, q_first = _crossing_edge(points, state)
    a, b = points[q_end], points[r_end]
    on_edge = []
    for i in state.Q + state.R:
        p = points[i]
        if cross(a, b, p) == 0 and min(a.x, b.x) <= p.x <= max(a.x, b.x) \
                and min(a.y, b.y) <= p.y <= max(a.y, b.y):
            on_edge.append(i)
    ux, uy = b.x - a.x, b.y - a.y
    on_edge.sort(key=lambda i: ux * (points[i].x - a.x) + uy * (points[i].y - a.y))
    qs = set(state.Q)
    for s, t in zip(on_edge, on_edge[1:]):
        if s in qs and t not in qs:
            q, r = s, t
            break
    else:  # pragma: no cover - projections are monotone along the edge
        raise AssertionError("no Q/R transition along crossing edge")
    # outward normal of the counterclockwise edge
    u, v = (a, b) if q_first else (b, a)
    return q, r, (v.y - u.y, u.x - v.x)


def disc_separate(points: Sequence[Point]) -> SeparatingFamily:
    """ceil(n/2) discs for any point set, collinear input included."""
    n = len(points)
    if n < 1:
        raise ValueError("disc_separate needs at least one point")
    if n == 1:
        return SeparatingFamily((), "disc_separate(n=1)")
    d, order, proj = _projection_order(points)
    everyone = list(range(n))
    fam: list[Separator] = []
    if n % 2:
        h = Halfplane(d.dx, d.dy, (proj[order[0]] + proj[order[1]]) / 2)
        fam.append(_disc_like_halfplane(points, h, everyone))
        order = order[1:]
    state = _split(points, order, proj, d)
    fam.append(_disc_like_halfplane(points, state.boundary, everyone))
    while len(state.Q) > 1:
        state.step += 1
        q, r, normal = _adjacent_crossing_pair(points, state)
        fam.append(_disc_on_chord(points, q, r, normal, state.Q + state.R))
        state.Q.remove(q)
        state.R.remove(r)
    return SeparatingFamily(fam, f"disc_separate(n={n})")


def _ceil_log2(k: int) -> int:
    return (k - 1).bit_length() if k > 0 else 0


def binary_family(points: Sequence[Point], Q: Sequence[int]) -> list[ConvexPolygon]:
    """ceil(log2 |Q|) hulls; the j-th holds the members of Q whose position has bit j set."""
    Q = list(Q)
    if not in_convex_position(points, Q):
        raise ValueError("binary_family needs points in convex position")
    out = []
    for j in range(_ceil_log2(len(Q))):
        members = [q for t, q in enumerate(Q) if (t >> j) & 1]
        out.append(ConvexPolygon.hull_of(points, members))
    return out


def largest_convex_subset(points: Sequence[Point], indices: Sequence[int] | None = None) -> list[int]:
    """A maximum subset in convex position, counterclockwise from its lowest point.

    For every candidate lowest vertex the other points above it are sorted by
    angle and the longest closed convex chain is found by dynamic programming
    over its last edge. Earlier anchors win ties.
    """
    idx = list(range(len(points))) if indices is None else list(indices)
    if len(idx) <= 2:
        return sorted(idx)
    best: list[int] = []
    for b in sorted(idx):
        chain = _best_chain_from(points, b, idx)
        if len(chain) > len(best):
            best = chain
    if len(best) < 2:
        best = convex_hull(points, idx)[:2]
    return best


def _best_chain_from(points, b: int, idx: list[int]) -> list[int]:
    pb = points[b]
    above = [i for i in idx if (points[i].y, points[i].x) > (pb.y, pb.x)]
    if len(above) < 2:
        return [b] + above

    def cmp(i, j):
        c = cross(pb, points[i], points[j])
        if c != 0:
            return -1 if c > 0 else 1
        di = abs(points[i].x - pb.x) + abs(points[i].y - pb.y)
        dj = abs(points[j].x - pb.x) + abs(points[j].y - pb.y)
        return (di > dj) - (di < dj) or (i > j) - (i < j)

    order = sorted(above, key=functools.cmp_to_key(cmp))
    m = len(order)
    P = [points[i] for i in order]
    # length[i][j]: vertices of the best chain b, ..., order[i], order[j]
    length = [[0] * m for _ in range(m)]
    parent = [[-1] * m for _ in range(m)]
    for j in range(m):
        for i in range(j):
            if cross(pb, P[i], P[j]) <= 0:
                continue
            best_len, best_l = 3, -1
            for l in range(i):
                if length[l][i] and length[l][i] + 1 > best_len and cross(P[l], P[i], P[j]) > 0:
                    best_len, best_l = length[l][i] + 1, l
            length[i][j] = best_len
            parent[i][j] = best_l
    best_len, end = 2, None
    for j in range(m):
        for i in range(j):
            if length[i][j] > best_len and cross(P[i], P[j], pb) > 0:
                best_len, end = length[i][j], (i, j)
    if end is None:
        return [b, order[0]]
    i, j = end
    chain = [j, i]
    while parent[i][j] >= 0:
        i, j = parent[i][j], i
        chain.append(i)
    return [b] + [order[t] for t in reversed(chain)]


@dataclass
class ConvexStepRecord:
    Qi: list[int]
    hull: ConvexPolygon
    inner: ConvexPolygon | None
    bits: list[ConvexPolygon]
    removed: list[int]


def _convex_block(points, P: list[int], k: int) -> list[int]:
    # Any k <= 3 points in general position are in convex position.
    if k <= 3:
        return sorted(P)[:k]
    chain = largest_convex_subset(points, P)
    if len(chain) < k:
        raise RuntimeError(
            f"only {len(chain)} points in convex position among {len(P)}; needed {k}"
        )
    return chain[:k]


def convex_separate_steps(points: Sequence[Point]) -> tuple[SeparatingFamily, list[ConvexStepRecord]]:
    """Convex-set separation with the per-step records kept for inspection."""
    n = len(points)
    if n < 1:
        raise ValueError("convex_separate needs at least one point")
    require_general_position(points)
    if n <= 16:
        fam = disc_separate(points)
        return SeparatingFamily(fam.separators, f"convex_separate(n={n}; discs)"), []
    k = (n.bit_length() - 1) // 4  # floor(log2(n) / 4)
    P = list(range(n))
    fam: list[Separator] = []
    records = []
    while len(P) * len(P) > n:
        Q = _convex_block(points, P, k)
        qs = set(Q)
        hull = ConvexPolygon.hull_of(points, Q)
        inside = [p for p in P if p not in qs and hull.contains(points[p])]
        inner = ConvexPolygon.hull_of(points, inside) if inside else None
        bits = binary_family(points, Q)
        fam.append(hull)
        if inner is not None:
            fam.append(inner)
        fam.extend(bits)
        records.append(ConvexStepRecord(Q, hull, inner, bits, Q))
        P = [p for p in P if p not in qs]
    eps = clearance(points)
    fam.extend(Disc(points[p], eps * eps) for p in P)
    return SeparatingFamily(fam, f"convex_separate(n={n}, k={k})"), records


def convex_separate(points: Sequence[Point]) -> SeparatingFamily:
    """Separate a general-position set with few convex sets.

    Small inputs (n <= 16) fall back to discs. Otherwise blocks of
    floor(log2(n)/4) points in convex position are peeled while more than
    sqrt(n) points remain; each block contributes its hull, the hull of the
    remaining points it captures, and a binary code. Survivors get tiny discs.
    """
    return convex_separate_steps(points)[0]


def prune_to_minimal(family: SeparatingFamily, points: Sequence[Point]) -> SeparatingFamily:
    """Drop members front to back while the rest still separates."""
    ok, pair = is_separating(family, points)
    if not ok:
        raise ValueError(f"family does not separate points {pair}")
    seps = list(family)
    masks = [trace(s, points) for s in seps]
    n = len(points)
    sigs = [0] * n
    for t, m in enumerate(masks):
        for i in range(n):
            if (m >> i) & 1:
                sigs[i] |= 1 << t
    keep = (1 << len(seps)) - 1
    for t in range(len(seps)):
        trial = keep & ~(1 << t)
        if len({s & trial for s in sigs}) == n:
            keep = trial
    kept = [s for t, s in enumerate(seps) if (keep >> t) & 1]
    return SeparatingFamily(kept, f"prune_to_minimal({family.provenance})")


BUILDERS = {
    "prefix": prefix_halfplanes,
    "halfplane": halfplane_separate,
    "disc": disc_separate,
    "convex": convex_separate,
}


def build(method: str, points: Sequence[Point]) -> SeparatingFamily:
    try:
        builder = BUILDERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(BUILDERS)}") from None
    return builder(points)
