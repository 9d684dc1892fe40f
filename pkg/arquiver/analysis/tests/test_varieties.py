"""
This module contains package tests for module variety dimensions.
"""

import pytest

from arquiver.analysis import (
    ext_end_inequality,
    group_dimension,
    periodic_variety_dimension,
    variety_dimension_formulas,
)
from arquiver.exceptions import DimensionMismatch
from arquiver.reps import direct_sum, projective, simple

DELTA = {"4": 1, "5": 1, "6": 2, "7": 2, "8": 1, "9": 1}


def test_group_dimension():
    assert group_dimension(DELTA) == 12
    assert group_dimension({}) == 0


def test_projective_meets_the_inequality(a2):
    verdict = ext_end_inequality(projective(a2, "1"))
    assert verdict
    assert verdict.witnesses == {"end": 1, "ext1": 0, "higher": {}, "pd": 0}
    assert not verdict.truncation_dependent


def test_mouth_module(d5t_modules):
    verdict = ext_end_inequality(d5t_modules["E"])
    assert verdict
    assert verdict.witnesses["ext1"] == 0
    assert verdict.witnesses["end"] == 1


def test_homogeneous_brick_is_a_boundary_case(d5t_modules):
    verdict = ext_end_inequality(d5t_modules["H"])
    assert verdict
    assert verdict.witnesses["ext1"] == verdict.witnesses["end"] == 1
    assert verdict.detail == "1 <= 1"


def test_semisimple_kronecker_module(k2):
    module = direct_sum(simple(k2, "1"), simple(k2, "2"))
    verdict = ext_end_inequality(module)
    assert verdict
    assert verdict.witnesses["ext1"] == verdict.witnesses["end"] == 2


@pytest.mark.parametrize(
    ("vertex", "group", "orbit"),
    [("1", 1, 0), ("2", 1, 0)],
)
def test_simple_modules(a2, vertex, group, orbit):
    module = simple(a2, vertex)
    report = variety_dimension_formulas(a2, {vertex: 1}, module=module)
    assert report.group == group
    assert report.orbit == orbit
    assert report.tits == report.euler == 1
    assert report.check


def test_projective_module(a2):
    report = variety_dimension_formulas(a2, {"1": 1, "2": 1}, module=projective(a2, "1"))
    assert (report.group, report.ambient, report.orbit) == (2, 1, 1)
    assert (report.end, report.ext1, report.ext2) == (1, 0, 0)
    assert report.check
    assert report.as_dict()["orbit"] == 1


def test_delta_for_d5t(d5t, d5t_modules):
    report = variety_dimension_formulas(d5t, DELTA, module=d5t_modules["H"])
    assert report.group == 12
    assert report.ambient == 12
    assert report.tits == report.euler == 0
    assert report.orbit == 11
    assert report.check
    assert periodic_variety_dimension(d5t, DELTA) == 12


def test_kronecker_null_root(k2):
    assert periodic_variety_dimension(k2, {"1": 1, "2": 1}) == 2
    assert variety_dimension_formulas(k2, {"1": 1, "2": 1}).tits == 0


def test_missing_euler_form(a2):
    report = variety_dimension_formulas(a2, {"1": 1, "2": 1}, module=projective(a2, "1"), gldim_cap=0)
    assert report.euler is None
    assert not report.check
    assert "not available" in report.check.detail


def test_dimension_mismatch(a2):
    with pytest.raises(DimensionMismatch, match="unknown vertices"):
        variety_dimension_formulas(a2, {"9": 1})
    with pytest.raises(DimensionMismatch, match="does not have the dimension vector"):
        variety_dimension_formulas(a2, {"1": 1}, module=projective(a2, "1"))
