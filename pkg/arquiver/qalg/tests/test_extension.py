"""
This module contains package tests for one-point extensions and coextensions.
"""

import pytest

from arquiver.exceptions import AlgebraMismatch
from arquiver.qalg import (
    algebras_match,
    fresh_vertex,
    linear_quiver_algebra,
    one_point_coextension,
    one_point_coextension_data,
    one_point_extension,
    one_point_extension_data,
    point_module,
    triangular_matrix_algebra,
)
from arquiver.reps import injective, projective, simple, thin_module


def test_fresh_vertex():
    assert fresh_vertex(["1", "w0", "w1"]) == "w2"
    assert fresh_vertex(["1"], prefix="new") == "new0"


def test_extension_by_simple_sink(a2):
    data = one_point_extension_data(a2, simple(a2, "2"), vertex="w")
    algebra = data.algebra
    assert algebra.dimension == 5
    assert len(algebra.vertices) == len(a2.vertices) + 1
    assert algebra.quiver.arrows_to("w") == []
    assert [(a.id, a.target) for a in algebra.quiver.arrows_from("w")] == [("w>2", "2")]
    assert len(algebra.relations) == 0


def test_extension_by_projective_is_linear(a2):
    algebra = one_point_extension(a2, projective(a2, "1"), vertex="w")
    assert algebra.dimension == 6
    assert algebras_match(algebra, linear_quiver_algebra(["w", "1", "2"]))


def test_extension_of_the_field():
    field = triangular_matrix_algebra(1)
    algebra = one_point_extension(field, simple(field, "1"), vertex="0")
    assert algebras_match(algebra, linear_quiver_algebra(["0", "1"]))


def test_extension_relations_come_from_the_syzygy(d5t):
    # the radical of P_7 is generated at 6, so one zero relation starts at the new vertex
    algebra = one_point_extension(d5t, simple(d5t, "7"), vertex="16")
    (relation,) = algebra.relations
    assert str(relation) == "16>7 rho"
    assert algebra.dimension == d5t.dimension + 2


def test_extension_by_thin_module(d5t):
    module = thin_module(d5t, d5t.vertices)
    algebra = one_point_extension(d5t, module, vertex="10")
    assert sorted(a.target for a in algebra.quiver.arrows_from("10")) == ["8", "9"]
    assert len(algebra.relations) == 1
    assert sorted(str(p) for p in algebra.relations[0].paths) == ["10>8 nu", "10>9 eta"]


def test_extension_rejects_foreign_module(a2, k2):
    with pytest.raises(AlgebraMismatch):
        one_point_extension(a2, simple(k2, "1"))


def test_extension_rejects_existing_vertex(a2):
    with pytest.raises(ValueError, match="already exists"):
        one_point_extension(a2, simple(a2, "1"), vertex="2")


def test_coextension_by_simple_source(a2):
    algebra = one_point_coextension(a2, simple(a2, "1"), vertex="w")
    assert algebra.dimension == 5
    assert algebra.quiver.arrows_from("w") == []
    assert [(a.id, a.source) for a in algebra.quiver.arrows_to("w")] == [("1>w", "1")]


def test_coextension_by_injective_is_linear(a2):
    algebra = one_point_coextension(a2, injective(a2, "2"), vertex="w")
    assert algebras_match(algebra, linear_quiver_algebra(["1", "2", "w"]))


def test_coextension_of_the_field():
    field = triangular_matrix_algebra(1)
    assert one_point_coextension(field, simple(field, "1"), vertex="2").dimension == 3


def test_coextension_opposites_are_linked(d5t, d5t_modules):
    data = one_point_coextension_data(d5t, d5t_modules["E"], vertex="3")
    algebra = data.algebra
    assert data.coextension
    assert algebra.opposite().opposite() is algebra
    assert sorted(a.source for a in algebra.quiver.arrows_to("3")) == ["4", "5"]
    (relation,) = algebra.relations
    assert sorted(str(p) for p in relation.paths) == ["alpha 5>3", "sigma 4>3"]


def test_point_module(a2):
    data = one_point_extension_data(a2, simple(a2, "2"), vertex="w")
    target = projective(a2, "1")
    module = point_module(data, target, {"2": [[1]]}, name="X'")
    assert module.dims == {"w": 1, "1": 1, "2": 1}
    assert module.algebra is data.algebra


def test_point_module_needs_an_extension(a2):
    data = one_point_coextension_data(a2, simple(a2, "1"), vertex="w")
    with pytest.raises(ValueError, match="coextensions"):
        point_module(data, simple(a2, "1"), {})
