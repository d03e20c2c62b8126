from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepfam.fileio import (
    FormatError,
    dump_family,
    dump_points,
    format_rational,
    load_family,
    load_points,
    parse_rational,
    read_family,
    read_points,
    write_family,
    write_points,
)
from sepfam.geometry import Point, PointSet
from sepfam.separators import ConvexPolygon, Disc, Halfplane, SeparatingFamily

rational = st.fractions(max_denominator=10**12).filter(lambda q: abs(q.numerator) < 10**40)
point = st.builds(Point, rational, rational)
point_sets = st.lists(point, max_size=30, unique=True).map(PointSet)
provenance = st.text(st.characters(blacklist_categories=("Cs",)), max_size=40)


@st.composite
def separator(draw):
    kind = draw(st.sampled_from("HDP"))
    if kind == "H":
        a, b = draw(rational), draw(rational)
        return Halfplane(a or Fraction(1), b, draw(rational))
    if kind == "D":
        r2 = abs(draw(rational)) or Fraction(1, 3)
        return Disc(draw(point), r2)
    verts = draw(st.lists(point, min_size=1, max_size=7, unique=True))
    return ConvexPolygon.hull_of(verts, range(len(verts)))


families = st.builds(SeparatingFamily, st.lists(separator(), max_size=12), provenance)


def test_rational_format():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(5)) == "5/1"
    assert parse_rational("+6/8") == Fraction(3, 4)
    for bad in ("1.5", "3", "1/0", "1/-2", " 1/2", "a/b"):
        with pytest.raises(FormatError):
            parse_rational(bad)


@settings(max_examples=500)
@given(point_sets)
def test_point_round_trip(X):
    text = dump_points(X)
    assert text.startswith("sfp 1\n")
    assert load_points(text) == X
    assert dump_points(load_points(text)) == text


@settings(max_examples=500)
@given(families)
def test_family_round_trip(F):
    text = dump_family(F)
    back = load_family(text)
    assert back == F
    assert dump_family(back) == text


def test_point_file_errors():
    with pytest.raises(FormatError, match="header"):
        load_points("0/1 0/1\n")
    with pytest.raises(FormatError, match="duplicate"):
        load_points("sfp 1\n0/1 0/1\n0/2 0/5\n")
    with pytest.raises(FormatError, match="line 2"):
        load_points("sfp 1\n0/1\n")
    assert len(load_points("sfp 1\n# comment\n\n1/2 3/4\n")) == 1


def test_family_file_errors():
    with pytest.raises(FormatError):
        load_family("sff 1\nH 1/1 2/1\n")
    with pytest.raises(FormatError):
        load_family("sff 1\nD 0/1 0/1 0/1\n")
    with pytest.raises(FormatError):
        load_family("sff 1\nP 0/1 0/1 1/1 1/1 1/1 0/1\n")  # clockwise
    with pytest.raises(FormatError):
        load_family("sff 1\nE 1/1 1/1 1/1\n")
    with pytest.raises(FormatError):
        load_family("sfp 1\n")
    F = load_family("sff 1\n# provenance: a\n# provenance: b\nH 1/1 0/1 0/1\n# unrelated\n")
    assert F.provenance == "a\nb" and len(F) == 1


def test_file_helpers(tmp_path):
    X = PointSet([(Fraction(1, 3), -2), (5, Fraction(7, 9))])
    F = SeparatingFamily([Halfplane(1, 0, 1)], "hand made")
    write_points(tmp_path / "x.sfp", X)
    write_family(tmp_path / "x.sff", F)
    assert read_points(tmp_path / "x.sfp") == X
    assert read_family(tmp_path / "x.sff") == F
    with pytest.raises(FormatError, match="cannot read"):
        read_points(tmp_path / "missing.sfp")
