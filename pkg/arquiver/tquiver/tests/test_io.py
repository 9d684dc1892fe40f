"""
This module contains package tests for translation quiver files and DOT export.
"""

import pytest

from arquiver.exceptions import ParseError
from arquiver.tquiver import build_stable_tube, format_tquiver, parse_tquiver, read_tquiver, to_dot, write_tquiver


def test_fixture_contents(b8_component):
    assert b8_component.name == "b8_component"
    assert len(b8_component) == 21
    assert b8_component.successors("S7") == ["P8", "P8"]
    assert b8_component.vertex("P7").dims == {"5": 1, "6": 1, "7": 1}
    assert b8_component.vertex("right").label is None
    assert b8_component.translate("S6") == "Q"


def test_round_trip(tmp_path, b8_component):
    assert parse_tquiver(format_tquiver(b8_component)) == b8_component
    target = tmp_path / "tube.tq"
    tube = build_stable_tube(3, 4, mouth=[{"1": 1}, {"2": 1}, {"3": 1}])
    write_tquiver(target, tube)
    assert read_tquiver(target) == tube


def test_format():
    text = format_tquiver(build_stable_tube(1, 2, mouth=[{"1": 1}]))
    assert text.splitlines() == [
        "# tube(r=1, L=2)",
        "tvertex T(0,1) dim: 1=1",
        "tvertex T(0,2) boundary dim: 1=2",
        "tarrow T(0,1) -> T(0,2)",
        "tarrow T(0,2) -> T(0,1)",
        "tau T(0,1) -> T(0,1)",
        "tau T(0,2) -> T(0,2)",
    ]


@pytest.mark.parametrize(
    "text,message",
    [
        ("tvertex\n", "line 1: tvertex without id"),
        ("tvertex a weird\n", "unknown flag 'weird'"),
        ("tvertex a dim: 1\n", "bad label entry"),
        ("tvertex a dim: 1=x\n", "bad label entry"),
        ("tvertex a\ntarrow a b\n", "line 2: bad tarrow line"),
        ("tvertex a\ntau a -> a\ntau a -> a\n", "line 3: translate of a given twice"),
        ("tvertex a\nmesh a\n", "unknown keyword 'mesh'"),
        ("tvertex a\ntarrow a -> b\n", "leaves the vertex set"),
        ("# nothing\n", "no vertices declared"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_tquiver(text)


def test_dot_is_deterministic():
    first = to_dot(build_stable_tube(2, 3))
    assert first == to_dot(build_stable_tube(2, 3))
    assert first.startswith('digraph "tube(r=2, L=3)" {')
    assert '{ rank=same; "T(0,1)" "T(1,1)" }' in first
    assert '"T(0,1)" -> "T(1,1)" [style=dashed, constraint=false];' in first
    assert '"T(0,3)" [label="T(0,3)", style=dotted];' in first


def test_dot_shapes(b8_component):
    dot = to_dot(b8_component)
    assert '"P8" [label="P8", shape=box, tooltip="7=2 8=1"];' in dot
    assert '"I5" [label="I5", shape=diamond, tooltip="5=1 6=1 7=1"];' in dot
    assert "rank=same" not in dot
