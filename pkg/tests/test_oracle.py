import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sepfam.constructions import (
    capped_convex_parent,
    circle_points,
    collinear_points,
    random_general_position,
    twin_set,
)
from sepfam.geometry import Point, PointSet
from sepfam.oracle import (
    CapExceededError,
    InfeasibleError,
    TraceSet,
    _circle_traces,
    _Collector,
    brute_force_min_size,
    convex_traces,
    disc_traces,
    halfplane_traces,
    min_separating_size,
    s_value,
)
from sepfam.separators import ConvexPolygon, Disc, Halfplane, is_separating, trace

from conftest import brute_convex_masks, brute_halfplane_masks, pair_split

grid = st.builds(Point, st.integers(-3, 3), st.integers(-3, 3))
grid_sets = st.lists(grid, min_size=2, max_size=8, unique=True).map(PointSet)


def bits(*idx):
    return sum(1 << i for i in idx)


def arcs(k):
    out = {0, (1 << k) - 1}
    for s in range(k):
        for length in range(1, k):
            out.add(bits(*((s + t) % k for t in range(length))))
    return out


def mixed_sets():
    yield collinear_points(2)
    yield collinear_points(5)
    yield circle_points(6)
    yield PointSet([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
    yield PointSet([(0, 0), (1, 0), (2, 0), (0, 1), (1, 2), (3, 3)])
    yield PointSet([(0, 0), (1, 1), (2, 2), (3, 0), (0, 3), (1, 2), (2, 1)])
    for seed in range(4):
        yield random_general_position(7, seed=seed, bounding=15)


# -- trace enumeration --------------------------------------------------------

def test_halfplane_trace_examples():
    assert set(halfplane_traces(PointSet([(0, 0), (1, 0)])).masks) == {0, 1, 2, 3}
    assert set(halfplane_traces(collinear_points(3)).masks) == {0, bits(0), bits(2), bits(0, 1), bits(1, 2), bits(0, 1, 2)}
    assert set(halfplane_traces(circle_points(4)).masks) == arcs(4)


def test_disc_trace_examples():
    assert set(disc_traces(PointSet([(0, 0), (1, 0)])).masks) == {0, 1, 2, 3}
    assert bits(1) in disc_traces(collinear_points(3)).masks
    assert bits(0, 2) not in disc_traces(collinear_points(3)).masks
    assert set(disc_traces(circle_points(5)).masks) == arcs(5)


def test_convex_trace_examples(square_and_center):
    assert len(convex_traces(circle_points(5))) == 32
    assert bits(0, 1, 2, 3) not in convex_traces(square_and_center).masks
    runs = {0} | {bits(*range(a, b)) for a in range(4) for b in range(a + 1, 5)}
    assert set(convex_traces(collinear_points(4)).masks) == runs


@pytest.mark.parametrize("X", list(mixed_sets()), ids=lambda X: f"n{len(X)}")
def test_halfplane_traces_exact_against_kirchberger(X):
    ts = halfplane_traces(X)
    assert len(set(ts.masks)) == len(ts.masks)
    assert set(ts.masks) == brute_halfplane_masks(X)


@given(grid_sets)
def test_halfplane_traces_exact_random(X):
    assert set(halfplane_traces(X).masks) == brute_halfplane_masks(X)


@pytest.mark.parametrize("X", list(mixed_sets()), ids=lambda X: f"n{len(X)}")
def test_convex_traces_exact_against_caratheodory(X):
    assert set(convex_traces(X).masks) == brute_convex_masks(X)


@given(grid_sets)
def test_convex_traces_exact_random(X):
    assert set(convex_traces(X).masks) == brute_convex_masks(X)


@pytest.mark.parametrize("X", list(mixed_sets()), ids=lambda X: f"n{len(X)}")
def test_witnesses_realise_their_masks(X):
    for enumerate_traces in (halfplane_traces, disc_traces, convex_traces):
        ts = enumerate_traces(X)
        for w, m in zip(ts.witnesses, ts.masks):
            assert trace(w, X) == m


def _random_discs(X, rng, count):
    xs = [p.x for p in X]
    ys = [p.y for p in X]
    lo, hi = min(xs + ys) - 3, max(xs + ys) + 3
    for _ in range(count):
        c = Point(lo + (hi - lo) * Fraction(rng.randint(0, 400), 400), lo + (hi - lo) * Fraction(rng.randint(0, 400), 400))
        p = X[rng.randrange(len(X))]
        r2 = (p.x - c.x) ** 2 + (p.y - c.y) ** 2
        yield Disc(c, r2 * Fraction(rng.choice([1, 1, 1, 999, 1001]), 1000) or Fraction(1, 10))
    for a, b, c in itertools.combinations(X, 3):
        d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
        if d == 0:
            continue
        ux = ((a.x ** 2 + a.y ** 2) * (b.y - c.y) + (b.x ** 2 + b.y ** 2) * (c.y - a.y) + (c.x ** 2 + c.y ** 2) * (a.y - b.y)) / d
        uy = ((a.x ** 2 + a.y ** 2) * (c.x - b.x) + (b.x ** 2 + b.y ** 2) * (a.x - c.x) + (c.x ** 2 + c.y ** 2) * (b.x - a.x)) / d
        center = Point(ux, uy)
        yield Disc(center, (a.x - ux) ** 2 + (a.y - uy) ** 2)


def _random_halfplanes(X, rng, count):
    for _ in range(count):
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        if a == b == 0:
            a = 1
        p = X[rng.randrange(len(X))]
        yield Halfplane(a, b, a * p.x + b * p.y + Fraction(rng.choice([0, 0, 1, -1]), 997))
    for p, q in itertools.combinations(X, 2):
        a, b = p.y - q.y, q.x - p.x
        yield Halfplane(a, b, a * p.x + b * p.y)
        yield Halfplane(-a, -b, -(a * p.x + b * p.y))


@pytest.mark.parametrize("seed", range(8))
def test_disc_trace_auditor(seed):
    rng = random.Random(seed)
    X = random_general_position(rng.randint(3, 10), seed=seed, bounding=8) if seed % 2 else next(
        itertools.islice(mixed_sets(), seed // 2 + 2, None))
    masks = set(disc_traces(X).masks)
    for d in itertools.chain(_random_discs(X, rng, 400), _random_halfplanes(X, rng, 100)):
        assert trace(d, X) in masks


def test_disc_auditor_on_cocircular_grid():
    # many cocircular quadruples on the integer grid
    X = PointSet([(x, y) for x in range(3) for y in range(3)] + [(3, 1)])
    masks = set(disc_traces(X).masks)
    for d in _random_discs(X, random.Random(3), 600):
        assert trace(d, X) in masks


@pytest.mark.parametrize("seed", range(6))
def test_convex_trace_auditor(seed):
    rng = random.Random(seed)
    X = random_general_position(9, seed=seed, bounding=10)
    masks = set(convex_traces(X).masks)
    for _ in range(300):
        verts = [Point(Fraction(rng.randint(-120, 120), 10), Fraction(rng.randint(-120, 120), 10)) for _ in range(rng.randint(1, 6))]
        verts = list(dict.fromkeys(verts))
        assert trace(ConvexPolygon.hull_of(verts, range(len(verts))), X) in masks


@pytest.mark.parametrize("seed", range(6))
def test_inclusion_chain_of_trace_classes(seed):
    X = random_general_position(8, seed=seed, bounding=12)
    h = set(halfplane_traces(X).masks)
    d = set(disc_traces(X).masks)
    c = set(convex_traces(X).masks)
    assert h <= d <= c


@pytest.mark.parametrize("seed", range(10))
def test_circles_alone_cover_halfplane_traces(seed):
    X = random_general_position(3 + seed % 8, seed=seed, bounding=20)
    col = _Collector()
    _circle_traces(X, col)
    assert set(halfplane_traces(X).masks) - {0} <= col.seen | {(1 << len(X)) - 1}


def test_caps():
    with pytest.raises(CapExceededError):
        halfplane_traces(random_general_position(21))
    with pytest.raises(CapExceededError):
        disc_traces(random_general_position(17))
    with pytest.raises(CapExceededError):
        convex_traces(random_general_position(15))
    with pytest.raises(ValueError):
        s_value(circle_points(3), "ellipse")


# -- minimum separating family ------------------------------------------------

def test_min_size_examples():
    assert min_separating_size(halfplane_traces(collinear_points(5))).size == 4
    assert min_separating_size(disc_traces(collinear_points(6))).size == 3
    assert min_separating_size(convex_traces(circle_points(8))).size == 3


def test_s_value_examples():
    assert s_value(circle_points(5), "halfplane").size == 3
    assert s_value(collinear_points(6), "convex").size == 3
    T = twin_set(capped_convex_parent(4))
    assert s_value(T.points, "convex").size >= math.ceil(8 / (2 * math.log2(8)))


def _custom(points, masks):
    recipes = [lambda m=m: ConvexPolygon.hull_of(points, [i for i in range(len(points)) if m >> i & 1])
               for m in masks]
    return TraceSet("convex", tuple(masks), points, recipes)


def test_infeasible_is_reported():
    C = circle_points(4)
    with pytest.raises(InfeasibleError) as err:
        min_separating_size(_custom(C, [bits(0, 1), bits(0)]))
    assert err.value.pair == (2, 3)


@given(st.integers(2, 7), st.lists(st.integers(1, 126), min_size=1, max_size=40, unique=True))
def test_solver_matches_exhaustive(n, raw):
    C = circle_points(n)
    full = (1 << n) - 1
    masks = sorted({m & full for m in raw} - {0, full}) or [1]
    ts = _custom(C, masks)
    expected = brute_force_min_size(masks, n)
    if expected is None:
        with pytest.raises(InfeasibleError):
            min_separating_size(ts)
        return
    res = min_separating_size(ts)
    assert res.size == expected
    assert is_separating(res.family, C)[0]
    split, everything = pair_split(res.masks, n)
    acc = 0
    for s in split:
        acc |= s
    assert acc == everything


@given(st.integers(3, 7), st.lists(st.integers(1, 126), min_size=2, max_size=30, unique=True), st.data())
def test_adding_masks_never_hurts(n, raw, data):
    C = circle_points(n)
    full = (1 << n) - 1
    masks = sorted({m & full for m in raw} - {0, full})
    if not masks:
        return
    extra = data.draw(st.lists(st.integers(1, full - 1), max_size=10))
    before = brute_force_min_size(masks, n)
    if before is None:
        return
    after = min_separating_size(_custom(C, sorted(set(masks) | set(extra)))).size
    assert after <= before


@pytest.mark.parametrize("n", range(2, 8))
@pytest.mark.parametrize("kind", ["halfplane", "disc", "convex"])
def test_geometric_solves_match_exhaustive(n, kind):
    enumerate_traces = {"halfplane": halfplane_traces, "disc": disc_traces, "convex": convex_traces}[kind]
    for X in (collinear_points(n), circle_points(n), random_general_position(n, seed=n, bounding=9)):
        ts = enumerate_traces(X)
        res = min_separating_size(ts)
        assert res.size == brute_force_min_size(ts.masks, n)
        assert math.ceil(math.log2(n)) <= res.size <= n - 1
        assert len(res.family) == res.size


def test_complement_canonicalisation_keeps_geometry():
    X = random_general_position(6, seed=2)
    res = s_value(X, "halfplane")
    for sep, m in zip(res.family, res.masks):
        assert trace(sep, X) == m


def test_trivial_sizes():
    one = PointSet([(0, 0)])
    assert s_value(one, "disc").size == 0
    assert brute_force_min_size([], 1) == 0
    assert brute_force_min_size([1], 2) == 1
    assert brute_force_min_size([3], 2) is None


def test_oracle_is_deterministic():
    X = random_general_position(9, seed=4)
    for kind in ("halfplane", "disc", "convex"):
        a, b = s_value(X, kind), s_value(X, kind)
        assert a.size == b.size and a.masks == b.masks and list(a.family) == list(b.family)
