"""
This module contains package tests for the Hom order and orbit dimensions.
"""

import logging

import pytest

from arquiver.analysis import (
    check_ext_step,
    finite_type_deg_order,
    hom_order,
    orbit_dimension,
    orbit_dimension_drop,
)
from arquiver.exceptions import DimensionMismatch
from arquiver.reps import Representation, direct_sum, hom, projective, simple


@pytest.fixture(scope="module")
def a2_modules(a2):
    s1, s2 = simple(a2, "1"), simple(a2, "2")
    p1 = projective(a2, "1").renamed("P1")
    return {
        "P1": p1,
        "S1": s1.renamed("S1"),
        "S2": s2.renamed("S2"),
        "S1+S2": direct_sum(s1, s2, name="S1+S2"),
    }


@pytest.fixture(scope="module")
def family(a2_modules):
    return [a2_modules[name] for name in ("P1", "S1", "S2")]


def test_projective_below_semisimple(a2_modules, family):
    verdict = hom_order(a2_modules["P1"], a2_modules["S1+S2"], family)
    assert verdict.relation == "<="
    assert verdict.dual_relation == "<="
    assert verdict.consistent and verdict.strict
    assert verdict.profiles["from"] == {"P1": (1, 1), "S1": (1, 1), "S2": (0, 1)}
    assert verdict.degeneration is None
    assert str(verdict) == "P1 <= S1+S2"


def test_reversed_pair(a2_modules, family):
    verdict = hom_order(a2_modules["S1+S2"], a2_modules["P1"], family)
    assert verdict.relation == ">="
    assert not verdict.strict


def test_equal_profile(a2_modules, family):
    verdict = hom_order(a2_modules["P1"], a2_modules["P1"], family)
    assert verdict.relation == verdict.dual_relation == "equal-profile"


def test_kronecker_modules_are_incomparable(k2):
    first = Representation(k2, {"1": 1, "2": 1}, {"a": [[1]], "b": [[0]]}, name="first")
    second = Representation(k2, {"1": 1, "2": 1}, {"a": [[0]], "b": [[1]]}, name="second")
    verdict = hom_order(first, second, [first, second])
    assert verdict.relation == "incomparable"
    assert verdict.profiles["from"] == {"first": (1, 0), "second": (0, 1)}


def test_different_dimension_vectors(a2_modules, family):
    with pytest.raises(DimensionMismatch, match="different dimension vectors"):
        hom_order(a2_modules["P1"], a2_modules["S1"], family)


def test_separating_family_is_logged(a2_modules, caplog):
    with caplog.at_level(logging.WARNING, logger="arquiver.analysis.orders"):
        verdict = hom_order(a2_modules["P1"], a2_modules["S1+S2"], [a2_modules["S2"]])
    assert verdict.relation == "<="
    assert verdict.dual_relation == "equal-profile"
    assert "separates P1 and S1+S2 differently" in caplog.text


def test_degeneration_over_finite_type(a2_modules, family):
    p1, split = a2_modules["P1"], a2_modules["S1+S2"]
    verdict = finite_type_deg_order(p1, split, family, complete=True)
    assert verdict.degeneration == "<="
    assert "finite representation type" in verdict.provenance
    assert str(verdict) == "P1 <= S1+S2 (degeneration: <=)"
    assert finite_type_deg_order(split, p1, family, complete=True).degeneration == "not <="
    assert finite_type_deg_order(p1, p1, family, complete=True).degeneration == "<="


def test_degeneration_needs_attestation(a2_modules, family):
    with pytest.raises(ValueError, match="complete=True"):
        finite_type_deg_order(a2_modules["P1"], a2_modules["S1+S2"], family)


def test_ext_step(a2_modules, family):
    p1, s1, s2 = a2_modules["P1"], a2_modules["S1"], a2_modules["S2"]
    (f,) = hom(s2, p1).basis
    (g,) = hom(p1, s1).basis
    verdict = check_ext_step(p1, s2, s1, f, g, family)
    assert verdict
    assert verdict.name == "ext_step_in_hom_order"
    assert verdict.witnesses["exact"]
    assert verdict.witnesses["order"].second == "S2+S1"
    with pytest.raises(DimensionMismatch, match="is not an extension"):
        check_ext_step(p1, s1, s1, {}, {}, family)


def test_ext_step_with_swapped_ends(a2_modules, family):
    # S1 is the top of P1, not a submodule
    verdict = check_ext_step(a2_modules["P1"], a2_modules["S1"], a2_modules["S2"], {"1": [[1]]}, {"2": [[1]]}, family)
    assert not verdict
    assert not verdict.witnesses["exact"]
    assert verdict.detail == "not a short exact sequence: f is not a homomorphism along a"


def test_ext_step_needs_injective_f(a2_modules, family):
    p1, s1, s2 = a2_modules["P1"], a2_modules["S1"], a2_modules["S2"]
    (g,) = hom(p1, s1).basis
    verdict = check_ext_step(p1, s2, s1, {}, g, family)
    assert not verdict
    assert "f is not injective at 2" in verdict.detail


def test_ext_step_map_shapes(a2_modules, family):
    p1, s1, s2 = a2_modules["P1"], a2_modules["S1"], a2_modules["S2"]
    with pytest.raises(DimensionMismatch, match="does not fit the shape \\(1, 1\\)"):
        check_ext_step(p1, s2, s1, {"2": [[1, 0]]}, {}, family)


@pytest.mark.parametrize(("name", "expected"), [("P1", 1), ("S1+S2", 0), ("S1", 0), ("S2", 0)])
def test_orbit_dimension(a2_modules, name, expected):
    assert orbit_dimension(a2_modules[name]) == expected


def test_orbit_dimension_drop(a2_modules):
    p1, split = a2_modules["P1"], a2_modules["S1+S2"]
    verdict = orbit_dimension_drop(p1, split)
    assert verdict
    assert verdict.witnesses == {"P1": 1, "S1+S2": 0}
    assert not orbit_dimension_drop(split, p1)
    assert not orbit_dimension_drop(p1, p1)
