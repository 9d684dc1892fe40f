"""
This module contains package tests for Hom spaces, resolutions and Ext groups.
"""

import pytest

from arquiver.config import conf
from arquiver.exceptions import (
    AlgebraMismatch,
    InfiniteGlobalDimensionWithinCap,
    ResolutionCapExceeded,
)
from arquiver.qalg import parse_algebra, triangular_matrix_algebra
from arquiver.reps import (
    Representation,
    direct_sum,
    euler_characteristic,
    ext_dim,
    global_dimension,
    hom,
    hom_dimension,
    hom_vanishing_check,
    injective,
    injective_dimension,
    is_brick,
    is_isomorphic_proxy,
    proj_dim,
    projective,
    projective_cover,
    radical,
    simple,
    syzygy,
    top_dimension_vector,
)


@pytest.fixture(scope="module")
def square_zero_loop():
    return parse_algebra("vertex 1\narrow x : 1 -> 1\nrel : x x\n")


@pytest.mark.parametrize(
    "source,target,expected",
    [(("p", "1"), ("p", "1"), 1), (("s", "1"), ("s", "2"), 0), (("p", "1"), ("s", "1"), 1), (("s", "2"), ("p", "1"), 1)],
)
def test_hom_dimensions_over_a2(a2, source, target, expected):
    build = {"p": projective, "s": simple}
    first = build[source[0]](a2, source[1])
    second = build[target[0]](a2, target[1])
    space = hom(first, second)
    assert space.dimension == expected
    assert len(space.basis) == expected
    assert hom_dimension(first, second) == expected


def test_hom_needs_same_algebra(a2, b8):
    with pytest.raises(AlgebraMismatch):
        hom(simple(a2, "1"), simple(b8, "1"))


def test_hom_from_projective_and_into_injective(b8, b8_modules):
    for module in b8_modules.values():
        for v in b8.vertices:
            assert hom_dimension(projective(b8, v), module) == module.dims[v]
            assert hom_dimension(module, injective(b8, v)) == module.dims[v]


def test_bricks(a2, d5t_modules):
    assert is_brick(projective(a2, "1"))
    assert not is_brick(direct_sum(simple(a2, "1"), simple(a2, "2")))
    for name in ("S6", "S7", "E", "H"):
        assert is_brick(d5t_modules[name])


def test_radical_and_top(b8, b8_modules):
    p7 = projective(b8, "7")
    assert radical(p7).dims == {**{v: 0 for v in b8.vertices}, "5": 1, "6": 1}
    assert top_dimension_vector(p7) == {**{v: 0 for v in b8.vertices}, "7": 1}
    assert top_dimension_vector(b8_modules["R"])["7"] == 1
    assert top_dimension_vector(b8_modules["R"])["6"] == 1


def test_projective_cover(b8, b8_modules):
    cover = projective_cover(b8_modules["P8"])
    assert [v for v, _ in cover.generators] == ["8"]
    assert cover.module.dims == projective(b8, "8").dims


def test_syzygies(a2, b8):
    assert syzygy(simple(a2, "1")).dims == simple(a2, "2").dims
    assert syzygy(projective(a2, "1")).is_zero()
    assert syzygy(simple(b8, "8")).dims == direct_sum(simple(b8, "7"), simple(b8, "7")).dims
    assert syzygy(simple(b8, "5")).dimension_tuple == (1, 1, 1, 1, 0, 0, 0, 0)


@pytest.mark.parametrize("vertex,expected", [("1", 0), ("5", 1), ("6", 2), ("7", 3), ("8", 4)])
def test_projective_dimensions_of_b8_simples(b8, vertex, expected):
    assert proj_dim(simple(b8, vertex)) == expected


def test_injective_dimension(a2):
    assert injective_dimension(simple(a2, "1")) == 0
    assert injective_dimension(simple(a2, "2")) == 1


@pytest.mark.parametrize("first,second,k,expected", [("1", "2", 1, 1), ("2", "1", 1, 0), ("1", "1", 1, 0), ("1", "2", 2, 0)])
def test_ext_over_a2(a2, first, second, k, expected):
    assert ext_dim(simple(a2, first), simple(a2, second), k) == expected


@pytest.mark.parametrize(
    "first,second,expected",
    [("8", "6", 2), ("8", "5", 2), ("7", "5", 1), ("7", "1", 1), ("6", "1", 1), ("6", "5", 0), ("8", "1", 0)],
)
def test_second_ext_over_b8(b8, first, second, expected):
    assert ext_dim(simple(b8, first), simple(b8, second), 2) == expected


def test_ext_rejects_negative_degree(a2):
    with pytest.raises(ValueError, match="nonnegative"):
        ext_dim(simple(a2, "1"), simple(a2, "1"), -1)


def test_ext_vanishes_on_projectives(b8, b8_modules):
    for module in b8_modules.values():
        for k in (1, 2):
            assert ext_dim(projective(b8, "7"), module, k) == 0


@pytest.mark.parametrize("r", [2, 3, 4])
def test_global_dimension_of_triangular_algebras(r):
    assert global_dimension(triangular_matrix_algebra(r)) == 1


def test_global_dimension(a2, b8):
    assert global_dimension(a2) == 1
    assert global_dimension(b8) == 4


def test_global_dimension_reads_the_cap_at_call_time(b8):
    assert global_dimension(b8) == 4
    with conf.set_temp("gldim_cap", 2):
        with pytest.raises(InfiniteGlobalDimensionWithinCap, match="exceeds 2"):
            global_dimension(b8)
    assert global_dimension(b8) == 4


def test_square_zero_loop_has_no_finite_resolution(square_zero_loop):
    s1 = simple(square_zero_loop, "1")
    assert proj_dim(s1, cap=4) is None
    for k in range(1, 4):
        assert ext_dim(s1, s1, k, cap=4) == 1
    with pytest.raises(ResolutionCapExceeded, match="more than 2 syzygies"):
        ext_dim(s1, s1, 5, cap=2)
    with pytest.raises(InfiniteGlobalDimensionWithinCap, match="exceeds 3"):
        global_dimension(square_zero_loop, cap=3)
    with pytest.raises(InfiniteGlobalDimensionWithinCap):
        euler_characteristic(s1, s1, cap=3)


def test_euler_characteristic(a2):
    assert euler_characteristic(simple(a2, "1"), simple(a2, "1")) == 1
    assert euler_characteristic(simple(a2, "1"), simple(a2, "2")) == -1
    assert euler_characteristic(simple(a2, "2"), simple(a2, "1")) == 0


def test_tube_mouth_is_orthogonal(d5t_modules):
    mouth = [d5t_modules[name] for name in ("S6", "S7", "E")]
    for x in mouth:
        for y in mouth:
            assert hom_dimension(x, y) == (1 if x is y else 0)
    # tau S7 = S6
    assert ext_dim(d5t_modules["S7"], d5t_modules["S6"], 1) == 1
    assert ext_dim(d5t_modules["S6"], d5t_modules["S7"], 1) == 0


def test_homogeneous_brick_has_self_extension(d5t_modules):
    h = d5t_modules["H"]
    assert ext_dim(h, h, 1) == 1
    assert euler_characteristic(h, h) == 0


def test_hom_vanishing(b8_modules):
    us = [b8_modules[name] for name in ("I6", "S7", "P8")]
    verdict = hom_vanishing_check(us, ["S5"], {"S5": b8_modules["bullet"]})
    assert verdict.passed
    assert verdict.witnesses["checked"] == 3

    verdict = hom_vanishing_check(us, ["S5"], {"S5": b8_modules["I6"]})
    assert not verdict
    assert verdict.witnesses["pairs"] == [("I6", "S5")]

    assert not hom_vanishing_check(us, ["S5"], {})
    assert hom_vanishing_check(us, [], {})


def test_isomorphism_proxy(a2, k2, b8_modules):
    r = b8_modules["R"]
    assert is_isomorphic_proxy(r, r.renamed("R'"))
    assert "dimension vectors" in is_isomorphic_proxy(b8_modules["S5"], b8_modules["S6"]).detail

    split = direct_sum(simple(a2, "1"), simple(a2, "2"))
    assert "endomorphism" in is_isomorphic_proxy(projective(a2, "1"), split).detail

    first = Representation(k2, {"1": 1, "2": 1}, {"a": [[1]], "b": [[0]]}, name="first")
    second = Representation(k2, {"1": 1, "2": 1}, {"a": [[0]], "b": [[1]]}, name="second")
    assert is_isomorphic_proxy(first, second)
    verdict = is_isomorphic_proxy(first, second, family=[first])
    assert not verdict
    assert verdict.witnesses["test_module"] == "first"
