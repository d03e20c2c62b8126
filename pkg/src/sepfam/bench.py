"""Benchmark suites behind ``sepfam bench``: expected vs. actual, row by row."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .builders import convex_separate, largest_convex_subset
from .constructions import (
    capped_convex_parent,
    circle_points,
    collinear_points,
    erdos_szekeres_set,
    random_general_position,
    twin_set,
)
from .geometry import is_general_position
from .oracle import ENUMERATORS, brute_force_min_size, min_separating_size, s_value
from .separators import is_separating

__all__ = ["Row", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Row:
    label: str
    expected: str
    actual: str
    ok: bool


def _half(n: int) -> int:
    return -(-n // 2)


def _halfplane_and_disc_bounds() -> Iterator[Row]:
    for n in range(2, 17):
        got = s_value(collinear_points(n), "halfplane").size
        yield Row(f"halfplane collinear n={n}", str(n - 1), str(got), got == n - 1)
    for n in range(2, 17):
        got = s_value(circle_points(n), "halfplane").size
        yield Row(f"halfplane circle n={n}", str(_half(n)), str(got), got == _half(n))
    for shape, gen in (("collinear", collinear_points), ("circle", circle_points)):
        for n in range(2, 15):
            got = s_value(gen(n), "disc").size
            yield Row(f"disc {shape} n={n}", str(_half(n)), str(got), got == _half(n))


def _convex_bounds() -> Iterator[Row]:
    for n in range(2, 13):
        got = s_value(collinear_points(n), "convex").size
        yield Row(f"convex collinear n={n}", str(_half(n)), str(got), got == _half(n))
    for m in (3, 4, 5, 6):
        n = 2 * m
        got = s_value(twin_set(capped_convex_parent(m)).points, "convex").size
        bound = n / (2 * math.log2(n))
        yield Row(f"convex twins n={n}", f">= {bound:.3f}", str(got), got >= bound)
    for n in (20, 50, 100, 200):
        X = random_general_position(n, seed=n)
        fam = convex_separate(X)
        bound = 20 * n * math.log2(math.log2(n)) / math.log2(n)
        ok = is_separating(fam, X)[0] and len(fam) <= bound
        yield Row(f"convex_separate n={n}", f"separating, <= {bound:.1f}", str(len(fam)), ok)


def constructions() -> Iterator[Row]:
    for k in (4, 5, 6):
        E = erdos_szekeres_set(k)
        yield Row(f"es k={k} size", str(2 ** (k - 2)), str(len(E)), len(E) == 2 ** (k - 2))
        best = len(largest_convex_subset(E))
        yield Row(f"es k={k} largest convex", str(k - 1), str(best), best == k - 1)
        gp = is_general_position(E)[0]
        yield Row(f"es k={k} general position", "True", str(gp), gp)


def oracle_cross() -> Iterator[Row]:
    cases = []
    for n in range(2, 8):
        cases.append((f"collinear n={n}", collinear_points(n)))
        cases.append((f"circle n={n}", circle_points(n)))
    for seed in range(6):
        cases.append((f"random n=7 seed={seed}", random_general_position(7, seed=seed, bounding=20)))
    for label, X in cases:
        for kind, enumerate_traces in ENUMERATORS.items():
            ts = enumerate_traces(X)
            bb = min_separating_size(ts).size
            bf = brute_force_min_size(ts.masks, len(X))
            yield Row(f"{kind} {label}", str(bf), str(bb), bb == bf)


SUITES: dict[str, Callable[[], Iterator[Row]]] = {
    "theorem1": _halfplane_and_disc_bounds,
    "theorem2": _convex_bounds,
    "constructions": constructions,
    "oracle-cross": oracle_cross,
}


def run_suite(name: str) -> Iterator[Row]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return suite()
