"""
This module contains package tests for multisections.
"""

from dataclasses import replace

import pytest

from arquiver.analysis import (
    multisection_cover_check,
    multisection_parts,
    multisection_search,
    nonsectional_triples,
    tau_orbits,
    validate_multisection,
)
from arquiver.exceptions import InvalidTranslationQuiver, NotAMultisection
from arquiver.tquiver import TranslationQuiver, TVertex, cyclic_vertices, support_of_subquiver

B8_DELTA = {"I1", "I2", "I3", "I4", "I5", "I6", "P6", "P7", "P8", "S5", "S6", "S7", "Q", "R"}


@pytest.fixture(scope="module")
def a2_component():
    vertices = [
        TVertex("P2", projective=True),
        TVertex("P1", projective=True, injective=True),
        TVertex("S1", injective=True),
    ]
    return TranslationQuiver(vertices, [("P2", "P1"), ("P1", "S1")], tau={"S1": "P2"})


def test_b8_parts(b8_component):
    parts = multisection_parts(b8_component, B8_DELTA)
    assert parts.delta == B8_DELTA
    assert parts.left == {"I1", "I2", "I3", "I4", "S5", "P6"}
    assert parts.core == {"S6", "P7", "Q", "R", "I5"}
    assert parts.right == {"I6", "S7", "P8"}
    assert parts.left_prime == {"I1", "I2", "I3", "I4", "S5", "P6", "P7", "S6", "Q", "R", "I5"}
    assert parts.right_prime == {"S6", "P7", "Q", "I5", "R", "I6", "S7", "P8"}
    assert str(parts).startswith("left: I1, I2, I3, I4, P6, S5; core: I5, P7, Q, R, S6")


def test_b8_core_is_the_cyclic_part(b8_component):
    parts = multisection_parts(b8_component, B8_DELTA)
    assert set(cyclic_vertices(b8_component)) == parts.core
    assert set(support_of_subquiver(b8_component, parts.core)) == {"5", "6", "7"}


def test_b8_cover(b8_component):
    parts = multisection_parts(b8_component, B8_DELTA)
    verdict = multisection_cover_check(b8_component, parts)
    assert verdict
    assert verdict.truncation_dependent
    assert verdict.witnesses == {"cycles_outside_core": [], "uncovered": []}


def test_cover_reports_cycles_outside_the_core(b8_component):
    parts = replace(multisection_parts(b8_component, B8_DELTA), core=frozenset())
    verdict = multisection_cover_check(b8_component, parts)
    assert not verdict
    assert verdict.witnesses["cycles_outside_core"] == ["I5", "P7", "Q", "R", "S6"]
    assert "lies on a cycle outside the core" in verdict.detail


def test_b8_search_finds_one_core(b8_component):
    found = multisection_search(b8_component, B8_DELTA, radius=1)
    assert found == [frozenset(B8_DELTA)]
    cores = {multisection_parts(b8_component, delta, check=False).core for delta in found}
    assert len(cores) == 1


def test_search_refuses_large_quivers(b8_component):
    with pytest.raises(ValueError, match="limited to 10 vertices"):
        multisection_search(b8_component, B8_DELTA, max_vertices=10)


def test_section_without_core(a2_component):
    parts = multisection_parts(a2_component, {"P2", "P1"})
    assert parts.core == set()
    assert parts.left == parts.right == {"P2", "P1"}
    assert parts.left_prime == parts.right_prime == set()
    assert multisection_cover_check(a2_component, parts)


def test_a2_structure(a2_component):
    assert nonsectional_triples(a2_component) == [("P2", "S1")]
    assert sorted(map(sorted, tau_orbits(a2_component))) == [["P1"], ["P2", "S1"]]
    found = multisection_search(a2_component, {"P2", "P1"}, radius=2)
    assert found == [frozenset({"P1", "P2"}), frozenset({"P1", "S1"})]
    assert multisection_parts(a2_component, found[1]).core == set()


@pytest.mark.parametrize(
    ("delta", "axiom"),
    [
        (set(), "connected"),
        ({"P2"}, "iii"),
        ({"P2", "S1"}, "connected"),
        ({"P2", "P1", "S1"}, "v"),
    ],
)
def test_invalid_multisections(a2_component, delta, axiom):
    with pytest.raises(NotAMultisection) as err:
        validate_multisection(a2_component, delta)
    assert err.value.axiom == axiom


def test_unknown_vertex(a2_component):
    with pytest.raises(InvalidTranslationQuiver, match="Unknown vertex"):
        validate_multisection(a2_component, {"P3"})


def test_convexity(b8_component):
    with pytest.raises(NotAMultisection, match="not convex") as err:
        validate_multisection(b8_component, B8_DELTA - {"Q"})
    assert err.value.axiom == "ii"
