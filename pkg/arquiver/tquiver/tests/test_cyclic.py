"""
This module contains package tests for cyclic parts, supports and quiver transforms.
"""

import pytest

from arquiver.tquiver import (
    build_stable_tube,
    build_za_window,
    classify_tube,
    cyclic_components,
    cyclic_components_check,
    cyclic_part,
    disjoint_union,
    mesh_check,
    opposite,
    relabel,
    scc_cyclic,
    support_algebra,
    support_of_subquiver,
)

CORE = {"S6", "P7", "Q", "R", "I5"}


def test_b8_cyclic_part(b8_component):
    part = cyclic_part(b8_component)
    assert set(part.vertices) == CORE
    assert cyclic_components(b8_component) == [frozenset(CORE)]
    assert scc_cyclic(b8_component) == [frozenset(CORE)]
    assert cyclic_components_check(b8_component)


def test_cyclic_part_is_idempotent(b8_component):
    part = cyclic_part(b8_component)
    assert cyclic_part(part) == part


def test_cyclic_part_of_tubes_and_windows():
    tube = build_stable_tube(3, 4)
    assert set(cyclic_part(tube).vertices) == set(tube.vertices)
    assert len(cyclic_part(build_za_window(6, 4))) == 0
    assert cyclic_components(build_za_window(6, 4)) == []


def test_two_tubes_give_two_components():
    union = disjoint_union(build_stable_tube(2, 3), build_stable_tube(3, 2, prefix="U"))
    components = cyclic_components(union)
    assert len(components) == 2
    assert cyclic_components_check(union)
    with pytest.raises(ValueError, match="more than one quiver"):
        disjoint_union(build_stable_tube(2, 3), build_stable_tube(2, 3))


def test_cyclic_components_check_detects_weak_components():
    # two tubes joined by a single arrow form one weak component with two strong ones
    union = disjoint_union(build_stable_tube(2, 3), build_stable_tube(2, 3, prefix="U"))
    joined = union.replaced(arrows=union.arrows + (("T(0,3)", "U(0,3)"),))
    verdict = cyclic_components_check(joined)
    assert not verdict
    assert len(verdict.witnesses["components"]) == 1
    assert len(verdict.witnesses["sccs"]) == 2


def test_support_of_subquiver(b8, b8_component):
    assert support_of_subquiver(b8_component, CORE) == {"5", "6", "7"}
    assert support_of_subquiver(b8_component, []) == set()
    assert support_of_subquiver(b8_component) == set(b8.vertices)
    restriction = support_algebra(b8_component, b8, CORE)
    assert restriction.convex
    assert restriction.algebra.vertices == ("5", "6", "7")


def test_opposite(b8_component):
    op = opposite(b8_component)
    assert opposite(op) == b8_component
    assert op.is_injective("P8") and op.is_projective("I5")
    assert op.translate("P7") == "I5"
    # bullet2 has no inverse translate inside the window
    assert {f[0] for f in mesh_check(op).witnesses["failures"]} == {"bullet2"}
    assert classify_tube(opposite(build_stable_tube(2, 3))) == "stable"


def test_relabel():
    tube = build_stable_tube(2, 2)
    renamed = relabel(tube, prefix="a:")
    assert renamed.translate("a:T(0,1)") == "a:T(1,1)"
    assert relabel(renamed, {"a:T(0,1)": "m"}).translate("m") == "a:T(1,1)"
    with pytest.raises(ValueError, match="identifies"):
        relabel(tube, {"T(0,1)": "T(1,1)"})
