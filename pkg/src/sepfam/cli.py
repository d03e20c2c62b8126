"""``sepfam`` command line.

Exit codes: 0 success, 1 semantic failure, 2 I/O or parse error,
3 precondition violated, 4 oracle size cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .builders import BUILDERS, build, prune_to_minimal
from .constructions import (
    capped_convex_parent,
    circle_points,
    collinear_points,
    erdos_szekeres_set,
    random_general_position,
    twin_set,
)
from .fileio import FormatError, dump_family, dump_points, read_family, read_points
from .geometry import GeneralPositionError, is_general_position
from .oracle import ENUMERATORS, CapExceededError, InfeasibleError, s_value
from .separators import is_separating
from .svg import render_svg

EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_PRECONDITION, EXIT_CAP = 0, 1, 2, 3, 4

SHAPES = ("collinear", "circle", "es", "parent", "twins", "random")


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _need(value, name, shape):
    if value is None:
        raise CommandError(EXIT_PRECONDITION, f"--{name} is required for shape {shape}")
    return value


def _generate(args):
    shape = args.shape
    if shape == "collinear":
        return collinear_points(_need(args.n, "n", shape))
    if shape == "circle":
        return circle_points(_need(args.n, "n", shape))
    if shape == "es":
        return erdos_szekeres_set(_need(args.k, "k", shape))
    if shape == "parent":
        return capped_convex_parent(_need(args.n, "n", shape))
    if shape == "twins":
        n = _need(args.n, "n", shape)
        if n % 2:
            raise CommandError(EXIT_PRECONDITION, "twin sets have an even number of points")
        return twin_set(capped_convex_parent(n // 2)).points
    return random_general_position(_need(args.n, "n", shape), seed=args.seed, bounding=args.bound)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise CommandError(EXIT_IO, f"cannot write {out}: {exc}") from exc


def cmd_generate(args) -> int:
    try:
        points = _generate(args)
    except ValueError as exc:
        raise CommandError(EXIT_PRECONDITION, str(exc)) from exc
    _emit(dump_points(points), args.out)
    gp = is_general_position(points)[0]
    print(f"n={len(points)} general_position={gp}", file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def cmd_build(args) -> int:
    points = read_points(args.points)
    try:
        family = build(args.method, points)
    except GeneralPositionError as exc:
        i, j, k = exc.triple
        raise CommandError(
            EXIT_PRECONDITION,
            f"method {args.method} needs general position; points {i}, {j}, {k} are collinear",
        ) from exc
    if args.prune:
        family = prune_to_minimal(family, points)
    ok, pair = is_separating(family, points)
    if not ok:
        raise CommandError(EXIT_FAIL, f"builder output does not separate points {pair}; nothing written")
    _emit(dump_family(family), args.out)
    print(f"method={args.method} size={len(family)} points={len(points)} SEPARATING",
          file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


def _fmt_point(p) -> str:
    return f"({p.x}, {p.y})"


def cmd_verify(args) -> int:
    points = read_points(args.points)
    family = read_family(args.family)
    ok, pair = is_separating(family, points)
    if ok:
        print(f"SEPARATING ({len(family)} sets, {len(points)} points)")
        return EXIT_OK
    i, j = pair
    print(f"NOT SEPARATING: points {i} {_fmt_point(points[i])} and {j} {_fmt_point(points[j])} "
          f"are in exactly the same sets")
    return EXIT_FAIL


def cmd_oracle(args) -> int:
    points = read_points(args.points)
    try:
        result = s_value(points, args.separator)
    except CapExceededError as exc:
        raise CommandError(EXIT_CAP, str(exc)) from exc
    except InfeasibleError as exc:
        print("s = inf")
        print(str(exc))
        return EXIT_FAIL
    family = result.family
    if args.prune:
        family = prune_to_minimal(family, points)
    if args.out is not None:
        _emit(dump_family(family), args.out)
    print(f"s = {result.size}")
    print(f"class = {args.separator}; points = {len(points)}; nodes explored = {result.explored}")
    if args.out is None:
        sys.stdout.write(dump_family(family))
    return EXIT_OK


def cmd_plot(args) -> int:
    points = read_points(args.points)
    family = read_family(args.family) if args.family else None
    _emit(render_svg(points, family), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    failures = 0
    rows = 0
    print(f"{'case':<36} {'expected':>24} {'actual':>10}  status")
    for row in bench.run_suite(args.suite):
        rows += 1
        failures += not row.ok
        print(f"{row.label:<36} {row.expected:>24} {row.actual:>10}  {'ok' if row.ok else 'MISMATCH'}")
    print(f"{rows - failures}/{rows} rows passed")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sepfam", description="Separating families of planar point sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a point configuration")
    g.add_argument("--shape", choices=SHAPES, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--bound", type=int, default=1000, help="coordinate bound for --shape random")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("build", help="construct a separating family")
    b.add_argument("--method", choices=sorted(BUILDERS), required=True)
    b.add_argument("points")
    b.add_argument("--prune", action="store_true")
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check that a family separates a point set")
    v.add_argument("points")
    v.add_argument("family")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact minimum separating family size")
    o.add_argument("points")
    o.add_argument("--class", dest="separator", choices=sorted(ENUMERATORS), required=True)
    o.add_argument("--prune", action="store_true")
    o.add_argument("--out")
    o.set_defaults(func=cmd_oracle)

    p = sub.add_parser("plot", help="render points and an optional family to SVG")
    p.add_argument("points")
    p.add_argument("--family")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot)

    s = sub.add_parser("bench", help="run an acceptance suite")
    s.add_argument("suite", choices=sorted(bench.SUITES))
    s.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
