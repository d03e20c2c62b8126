"""Plain-text point files (``sfp 1``) and family files (``sff 1``).

Every number is written as ``NUM/DEN`` so files stay exact.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .geometry import Point, PointSet
from .separators import ConvexPolygon, Disc, Halfplane, SeparatingFamily, Separator

__all__ = [
    "FormatError",
    "dump_family",
    "dump_points",
    "format_rational",
    "load_family",
    "load_points",
    "parse_rational",
    "read_family",
    "read_points",
    "write_family",
    "write_points",
]

POINT_HEADER = "sfp 1"
FAMILY_HEADER = "sff 1"
PROVENANCE = "# provenance: "
_RATIONAL = re.compile(r"^([+-]?\d+)/(\d+)$")


class FormatError(ValueError):
    pass


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(token: str) -> Fraction:
    m = _RATIONAL.match(token)
    if not m:
        raise FormatError(f"expected NUM/DEN, got {token!r}")
    den = int(m.group(2))
    if den == 0:
        raise FormatError(f"zero denominator in {token!r}")
    return Fraction(int(m.group(1)), den)


def _body(text: str, header: str) -> Iterable[tuple[int, str]]:
    # yields (line number, raw line); blank lines are skipped
    lines = [(no, line) for no, line in enumerate(text.split("\n"), 1) if line.strip()]
    if not lines or lines[0][1].strip() != header:
        raise FormatError(f"missing header {header!r}")
    return lines[1:]


def dump_points(points: Iterable[Point]) -> str:
    out = [POINT_HEADER]
    out += [f"{format_rational(p.x)} {format_rational(p.y)}" for p in points]
    return "\n".join(out) + "\n"


def load_points(text: str) -> PointSet:
    pts = []
    for no, line in _body(text, POINT_HEADER):
        line = line.strip()
        if line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {no}: expected two coordinates")
        pts.append(Point(parse_rational(fields[0]), parse_rational(fields[1])))
    try:
        return PointSet(pts)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _format_separator(s: Separator) -> str:
    if isinstance(s, Halfplane):
        nums = [s.a, s.b, s.c]
        tag = "H"
    elif isinstance(s, Disc):
        nums = [s.center.x, s.center.y, s.radius_sq]
        tag = "D"
    elif isinstance(s, ConvexPolygon):
        nums = [c for v in s.vertices for c in v]
        tag = "P"
    else:
        raise TypeError(f"not a separator: {s!r}")
    return " ".join([tag] + [format_rational(q) for q in nums])


def dump_family(family: SeparatingFamily) -> str:
    out = [FAMILY_HEADER]
    out += [_format_separator(s) for s in family]
    if family.provenance:
        out += [PROVENANCE + line for line in family.provenance.split("\n")]
    return "\n".join(out) + "\n"


def _parse_separator(no: int, line: str) -> Separator:
    tag, *tokens = line.split()
    nums = [parse_rational(t) for t in tokens]
    try:
        if tag == "H":
            if len(nums) != 3:
                raise FormatError(f"line {no}: halfplane needs 3 numbers")
            return Halfplane(*nums)
        if tag == "D":
            if len(nums) != 3:
                raise FormatError(f"line {no}: disc needs 3 numbers")
            return Disc(Point(nums[0], nums[1]), nums[2])
        if tag == "P":
            if not nums or len(nums) % 2:
                raise FormatError(f"line {no}: polygon needs coordinate pairs")
            return ConvexPolygon(tuple(Point(nums[i], nums[i + 1]) for i in range(0, len(nums), 2)))
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(f"line {no}: {exc}") from exc
    raise FormatError(f"line {no}: unknown separator tag {tag!r}")


def load_family(text: str) -> SeparatingFamily:
    seps = []
    provenance = []
    for no, raw in _body(text, FAMILY_HEADER):
        if raw.startswith(PROVENANCE):
            provenance.append(raw[len(PROVENANCE):])
            continue
        line = raw.strip()
        if line.startswith("#"):
            continue
        seps.append(_parse_separator(no, line))
    return SeparatingFamily(seps, "\n".join(provenance))


def read_points(path) -> PointSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return load_points(text)


def read_family(path) -> SeparatingFamily:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return load_family(text)


def write_points(path, points) -> None:
    Path(path).write_text(dump_points(points))


def write_family(path, family: SeparatingFamily) -> None:
    Path(path).write_text(dump_family(family))
