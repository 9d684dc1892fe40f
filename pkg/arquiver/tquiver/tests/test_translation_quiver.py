"""
This module contains package tests for translation quivers, tubes and their structure.
"""

import pytest

from arquiver.exceptions import InvalidTranslationQuiver
from arquiver.tquiver import (
    TranslationQuiver,
    TVertex,
    add_labels,
    almost_cyclic_check,
    boundary_reaching_path,
    build_stable_tube,
    build_za_window,
    classify_tube,
    coherence_check,
    is_sectional,
    label_additivity_check,
    make_label,
    mesh_check,
    mouth,
    sectional_paths,
)


@pytest.fixture
def d5t_tube(d5t_modules):
    return build_stable_tube(3, 5, mouth=[d5t_modules[name].dims for name in ("S6", "S7", "E")])


@pytest.mark.parametrize("r", range(1, 7))
@pytest.mark.parametrize("window", range(1, 9))
def test_stable_tube_counts(r, window):
    tube = build_stable_tube(r, window)
    assert len(tube) == r * window
    assert len(tube.arrows) == 2 * r * (window - 1)
    assert classify_tube(tube) == "stable"
    assert mesh_check(tube)
    for x in tube.vertices:
        y = x
        for _ in range(r):
            y = tube.translate(y)
        assert y == x
        assert tube.vertex(y).coord[1] == tube.vertex(x).coord[1]


def test_rank_one_tube_of_height_one():
    tube = build_stable_tube(1, 1)
    (x,) = tube.vertices
    assert tube.translate(x) == x
    assert tube.arrows == ()


def test_tube_rejects_bad_parameters():
    with pytest.raises(ValueError, match="at least 1"):
        build_stable_tube(0, 3)
    with pytest.raises(ValueError, match="Expected 2 mouth labels"):
        build_stable_tube(2, 3, mouth=[{"1": 1}])


def test_tube_mouth():
    tube = build_stable_tube(3, 4)
    assert mouth(tube) == ["T(0,1)", "T(1,1)", "T(2,1)"]
    assert tube.translate("T(0,1)") == "T(2,1)"
    assert tube.translate("T(1,1)") == "T(0,1)"


def test_tube_labels(d5t_tube):
    assert d5t_tube.label("T(0,1)") == (("6", 1),)
    assert d5t_tube.label("T(0,2)") == (("6", 1), ("7", 1))
    assert dict(d5t_tube.label("T(2,3)")) == {"4": 1, "5": 1, "6": 2, "7": 2, "8": 1, "9": 1}
    assert label_additivity_check(d5t_tube)


def test_za_window():
    za = build_za_window(5, 4)
    assert len(za) == 20
    assert mouth(za) == ["ZA(1,1)", "ZA(2,1)", "ZA(3,1)"]
    assert mesh_check(za).witnesses["checked"] == 9
    assert za.is_boundary("ZA(0,2)") and za.is_boundary("ZA(4,1)") and za.is_boundary("ZA(2,4)")


def test_mesh_check_catches_a_missing_arrow():
    tube = build_stable_tube(2, 3)
    broken = tube.replaced(arrows=tube.arrows[1:])
    verdict = mesh_check(broken)
    assert not verdict
    assert {f[0] for f in verdict.witnesses["failures"]} == {"T(0,2)", "T(1,1)"}


def test_mesh_check_needs_translates():
    quiver = TranslationQuiver([TVertex("a", projective=True), TVertex("b")], [("a", "b")])
    verdict = mesh_check(quiver)
    assert not verdict
    assert "no translate" in verdict.detail


@pytest.mark.parametrize(
    "vertices,arrows,tau,message",
    [
        ([TVertex("a")], [("a", "b")], {}, "leaves the vertex set"),
        ([TVertex("a", projective=True), TVertex("b")], [], {"a": "b"}, "projective vertex a"),
        ([TVertex("a"), TVertex("b", injective=True)], [], {"a": "b"}, "injective vertex b"),
        ([TVertex("a"), TVertex("b"), TVertex("c")], [], {"a": "c", "b": "c"}, "not injective"),
        ([TVertex("a"), TVertex("a")], [], {}, "declared twice"),
    ],
)
def test_structural_errors(vertices, arrows, tau, message):
    with pytest.raises(InvalidTranslationQuiver, match=message):
        TranslationQuiver(vertices, arrows, tau)


def test_labels():
    assert make_label({"2": 1, "1": 0, "3": 2}) == (("2", 1), ("3", 2))
    assert add_labels(make_label({"1": 1}), make_label({"1": 1, "2": 1})) == (("1", 2), ("2", 1))
    assert add_labels(make_label({"1": 1}), None) is None


@pytest.mark.parametrize(
    "flags,expected",
    [({}, "stable"), ({"projective": True}, "ray"), ({"injective": True}, "coray"), ({"projective": True, "injective": True}, "neither")],
)
def test_classify_tube_by_flags(flags, expected):
    quiver = TranslationQuiver([TVertex("a", **flags), TVertex("b", boundary=True, injective=True)], [("a", "b")])
    assert classify_tube(quiver) == expected


def test_sectional_paths_in_a_tube():
    tube = build_stable_tube(2, 4)
    ray = ("T(0,1)", "T(0,2)", "T(0,3)", "T(0,4)")
    assert sectional_paths(tube, "T(0,1)") == [ray]
    assert is_sectional(tube, ray)
    assert not is_sectional(tube, ("T(0,1)", "T(0,2)", "T(1,1)"))
    assert not is_sectional(tube, ("T(0,1)", "T(1,1)"))
    assert boundary_reaching_path(tube, "T(0,1)") == ray
    coray = ("T(1,4)", "T(0,3)", "T(1,2)", "T(0,1)")
    assert sectional_paths(tube, "T(0,1)", reverse=True) == [coray]
    assert boundary_reaching_path(tube, "T(0,1)", reverse=True) == coray


def test_coherence():
    tube = build_stable_tube(3, 4)
    verdict = coherence_check(tube)
    assert verdict
    assert not verdict.truncation_dependent

    ray = TranslationQuiver([TVertex("p", projective=True), TVertex("b", boundary=True)], [("p", "b")])
    verdict = coherence_check(ray)
    assert verdict
    assert verdict.truncation_dependent
    assert verdict.witnesses["paths"] == {"p": ("p", "b")}

    cut = TranslationQuiver([TVertex("p", projective=True), TVertex("q", injective=True)], [("p", "q")])
    verdict = coherence_check(cut)
    assert not verdict
    assert verdict.witnesses == {"projective": ["p"], "injective": ["q"]}


def test_b8_component_structure(b8_component):
    assert mesh_check(b8_component)
    verdict = label_additivity_check(b8_component)
    assert verdict
    assert verdict.witnesses["checked"] == 8
    assert classify_tube(b8_component) == "neither"
    assert "P8" in coherence_check(b8_component).witnesses["projective"]


def test_almost_cyclic():
    assert almost_cyclic_check(build_stable_tube(2, 3))
    verdict = almost_cyclic_check(build_za_window(4, 3))
    assert not verdict
    assert verdict.truncation_dependent
    assert "ZA(0,1)" in verdict.witnesses["acyclic_boundary"]
