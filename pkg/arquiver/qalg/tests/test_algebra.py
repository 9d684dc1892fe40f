"""
This module contains package tests for path bases and algebra constructions.
"""

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from arquiver.exceptions import NotAdmissible
from arquiver.qalg import (
    Quiver,
    algebras_match,
    compute_path_basis,
    full_convex_subcategory,
    linear_quiver_algebra,
    parse_algebra,
    product,
    triangular_matrix_algebra,
)


def test_a2_basis(a2):
    assert a2.dimension == 3
    assert sorted(str(p) for p in a2.basis) == ["a", "e_1", "e_2"]
    assert_array_equal(a2.cartan, [[1, 1], [0, 1]])


def test_b8_kills_every_path_of_length_two(b8):
    assert b8.dimension == len(b8.vertices) + len(b8.quiver.arrows) == 17
    assert b8.certificate == 2
    for p in b8.quiver.paths(2):
        if len(p) == 2:
            assert b8.normal_form(p) == {}


def test_loop_without_relations_is_not_admissible():
    loop = Quiver(["1"], [("x", "1", "1")])
    with pytest.raises(NotAdmissible, match="not admissible") as info:
        compute_path_basis(loop, [], length_cap=5)
    assert len(info.value.witness) == 5


def test_mixed_length_loop_relation_is_not_admissible():
    # x x - x x x generates no power of x
    with pytest.raises(NotAdmissible, match="not admissible") as info:
        parse_algebra("vertex 1\narrow x : 1 -> 1\nrel : x x - x x x\n", length_cap=5)
    assert len(info.value.witness) == 5


def test_loop_with_square_zero():
    algebra = parse_algebra("vertex 1\narrow x : 1 -> 1\nrel : x x\n")
    assert algebra.dimension == 2
    assert not algebra.is_triangular()


def test_length_cap_must_allow_relations():
    with pytest.raises(ValueError, match="at least 2"):
        compute_path_basis(Quiver(["1"]), [], length_cap=1)


@pytest.mark.parametrize(("r", "dimension"), [(1, 1), (2, 3), (3, 6), (5, 15)])
def test_triangular_matrix_algebra(r, dimension):
    algebra = triangular_matrix_algebra(r)
    assert algebra.dimension == dimension == r * (r + 1) // 2
    assert algebra.is_triangular()


@pytest.mark.parametrize("name", ["a2", "k2", "b8", "d5t", "a23"])
def test_cartan_invariants(name, request):
    algebra = request.getfixturevalue(name)
    assert algebra.cartan.sum() == algebra.dimension
    assert_array_equal(np.diag(algebra.cartan), np.ones(len(algebra.vertices)))
    for rel in algebra.relations:
        assert algebra.is_zero(rel)


def test_a23_mixed_length_relation(a23):
    long_path = a23.quiver.path(["xi", "eta", "rho", "alpha", "beta"])
    short_path = a23.quiver.path(["pi", "lambda"])
    assert a23.normal_form(long_path) == a23.normal_form(short_path)
    assert a23.normal_form(a23.quiver.path(["sigma", "gamma"])) == a23.normal_form(a23.quiver.path(["alpha", "beta"]))
    assert a23.normal_form(a23.quiver.path(["psi", "rho"])) == {}


def test_convex_d5_restriction(a23):
    restriction = full_convex_subcategory(a23, [str(v) for v in range(4, 10)])
    assert restriction.convex
    assert len(restriction.algebra.quiver.arrows) == 5
    assert restriction.algebra.relations == ()
    assert restriction.algebra.dimension == 19


def test_non_convex_restriction(a23):
    restriction = full_convex_subcategory(a23, ["0", "2"])
    assert not restriction.convex
    assert restriction.witness == ("2", "1", "0")


def test_restriction_to_everything(b8):
    restriction = full_convex_subcategory(b8, b8.vertices)
    assert restriction.convex
    assert restriction.algebra.dimension == b8.dimension
    assert algebras_match(restriction.algebra, b8)


def test_restriction_needs_vertices(b8):
    with pytest.raises(ValueError, match="must not be empty"):
        full_convex_subcategory(b8, [])


def test_opposite_round_trip(a23):
    opposite = a23.opposite()
    assert opposite.dimension == a23.dimension
    assert_array_equal(opposite.cartan, a23.cartan.T)
    assert opposite.quiver.opposite() == a23.quiver
    assert [r.reversed() for r in opposite.relations] == list(a23.relations)
    assert opposite.opposite() is a23


def test_product(a2, k2):
    renamed = linear_quiver_algebra(["x", "y"])
    prod = product(a2, renamed)
    assert prod.dimension == a2.dimension + renamed.dimension
    with pytest.raises(ValueError, match="both factors"):
        product(a2, k2)


def test_algebras_match_renamed_arrows(a2):
    assert algebras_match(linear_quiver_algebra(["1", "2"]), a2)
    verdict = algebras_match(linear_quiver_algebra(["1", "3"]), a2)
    assert not verdict
    assert verdict.witnesses["vertices"] == ["2", "3"]
