"""
This module contains package tests for the admissible operations.
"""

import random

import pytest

from arquiver.analysis import brenner_bound_check
from arquiver.exceptions import ArquiverError, BoundaryTooTight, GammaHatInfinite, GrammarViolation, ShapeMismatch
from arquiver.ops import (
    ModuleRegistry,
    PivotContext,
    apply_ad1,
    apply_ad2,
    apply_ad3,
    apply_ad4,
    apply_ad5,
    apply_dual,
    apply_fad1,
    apply_operation,
    classify_support,
    ledger_additivity_check,
    parallel_rays,
    split_finite_part,
)
from arquiver.ops.tests.test_support import ladder
from arquiver.tquiver import (
    TranslationQuiver,
    TVertex,
    build_stable_tube,
    classify_tube,
    cyclic_components_check,
    disjoint_union,
    make_label,
    mesh_check,
    opposite,
)


def labelled_tube(r, window):
    return build_stable_tube(r, window, mouth=[{str(n): 1} for n in range(r)])


def isolated(name="x", label=None):
    return TranslationQuiver([TVertex(name, label, projective=True, injective=True)], name=name)


def test_ad1_without_rectangle_gives_a_ray_tube():
    tube = build_stable_tube(1, 6)
    result = apply_ad1(PivotContext(tube, "T(0,1)"))
    q = result.quiver
    assert len(q) == len(tube) + 6
    assert {e.kind for e in result.entries} == {"X'"}
    assert classify_tube(q) == "ray"
    assert mesh_check(q)
    assert q.is_projective("X'(0)@1")
    assert q.translate("T(0,1)") == "X'(0)@1"
    assert q.translate("X'(3)@1") == "T(0,3)"
    assert result.parameter == parallel_rays(result) == 1


def test_ad1_rectangle():
    tube = labelled_tube(3, 6)
    result = apply_ad1(PivotContext(tube, "T(0,1)", t=2))
    q = result.quiver
    kinds = [e.kind for e in result.entries]
    assert kinds.count("Z") == 12
    assert kinds.count("X'") == 6
    assert kinds.count("Y") == 2 and kinds.count("D") == 1
    assert q.is_projective("Z(0,1)@1")
    assert q.translate("Z(2,1)@1") == "T(0,2)"
    assert q.translate("Z(0,2)@1") == "Y(1)@1"
    assert q.translate("X'(0)@1") == "Y(2)@1"
    assert q.translate("X'(3)@1") == "Z(2,2)@1"
    assert mesh_check(q)
    assert ledger_additivity_check(result)
    assert ledger_additivity_check(result).witnesses["checked"] == 18
    assert result.parameter == parallel_rays(result) == 3
    assert len(result.ledger) == 21
    assert set(result.ledger.colnames) == {"id", "kind", "i", "j", "label", "parents", "step"}


def test_ad1_labels():
    result = apply_ad1(PivotContext(labelled_tube(2, 4), "T(1,1)", t=1, ext="w", d=("d",)))
    q = result.quiver
    assert q.label("Y(1)@1") == make_label({"d": 1})
    assert q.label("Z(0,1)@1") == make_label({"1": 1, "d": 1, "w": 1})
    assert q.label("Z(1,1)@1") == make_label({"0": 1, "1": 1, "d": 1, "w": 1})
    assert q.label("X'(1)@1") == make_label({"0": 1, "1": 1, "w": 1})


def test_ad1_on_rank_one_tube_gives_a_ray_tube():
    result = apply_ad1(PivotContext(build_stable_tube(1, 6), "T(0,1)", t=1))
    assert classify_tube(result.quiver) == "ray"
    assert mesh_check(result.quiver)


def test_ad1_needs_an_infinite_ray():
    with pytest.raises(ShapeMismatch, match="support of T\\(0,2\\) is Other"):
        apply_ad1(PivotContext(build_stable_tube(3, 6), "T(0,2)"))
    with pytest.raises(BoundaryTooTight):
        apply_ad1(PivotContext(build_stable_tube(3, 6), "T(0,6)"))


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("t", [0, 1, 2])
@pytest.mark.parametrize("window", [5, 7])
@pytest.mark.parametrize("dual", [False, True])
def test_ad1_grid(r, t, window, dual):
    tube = labelled_tube(r, window)
    for n in range(r):
        ctx = PivotContext(tube, f"T({n},1)", t=t)
        result = apply_operation("ad1*" if dual else "ad1", ctx)
        q = result.quiver
        assert len(q) == len(tube) + window * (t + 1) + t * (t + 1) // 2
        assert mesh_check(q)
        assert ledger_additivity_check(result)
        assert parallel_rays(result) == result.parameter == t + 1
        assert classify_tube(q) == ("coray" if dual else "ray")
        assert result.operation == ("ad1*" if dual else "ad1")


SWEEP_OPERATIONS = ("ad1", "ad1*", "ad2", "ad2*", "ad3", "ad3*", "ad4")


def random_step(rng, quiver, tag):
    """First operation that applies, over shuffled (operation, pivot) pairs."""
    candidates = [(op, x) for op in SWEEP_OPERATIONS for x in quiver.vertices]
    rng.shuffle(candidates)
    for op, x in candidates:
        params = {"t": rng.choice((0, 1))} if op.startswith("ad1") else {}
        if op == "ad4":
            params = {"y": ("y",), "r": rng.choice((0, 1, 2))}
        try:
            return op, params, apply_operation(op, PivotContext(quiver, x, tag=tag, **params))
        except ArquiverError:
            continue
    return None


@pytest.mark.parametrize("seed", range(50))
def test_random_scripts(seed):
    rng = random.Random(seed)
    r, window = rng.choice((1, 2, 3)), rng.choice((6, 8))
    quiver = disjoint_union(labelled_tube(r, window), isolated("y", make_label({"y": 1})))
    applied = []
    for k in range(1, rng.randint(1, 5) + 1):
        step = random_step(rng, quiver, str(k))
        if step is None:
            break
        op, params, result = step
        quiver = result.quiver
        applied.append(op)
        assert mesh_check(quiver)
        ledger = ledger_additivity_check(result)
        assert ledger
        assert ledger.witnesses["checked"] > 0
        assert result.parameter == parallel_rays(result)
        if op.startswith("ad1"):
            assert result.parameter == params["t"] + 1
        elif op == "ad4":
            assert result.parameter == len(params["y"]) + params["r"] + 1
    assert applied
    assert cyclic_components_check(quiver)
    assert brenner_bound_check(quiver)


def test_double_dual_is_primal():
    tube = labelled_tube(2, 5)
    primal = apply_ad1(PivotContext(tube, "T(0,1)", t=1))
    twice = apply_dual("ad1*", PivotContext(opposite(tube), "T(0,1)", t=1))
    assert opposite(twice.quiver) == primal.quiver
    assert twice.operation == "ad1*"
    dual = apply_dual("ad1", PivotContext(tube, "T(0,1)", t=1))
    mirror = apply_ad1(PivotContext(opposite(tube), "T(0,1)", t=1))
    assert dual.quiver == opposite(mirror.quiver)


def test_ad1_algebra_side(d5t, d5t_modules):
    tube = build_stable_tube(3, 5, mouth=[d5t_modules[name].dims for name in ("S6", "S7", "E")])
    registry = ModuleRegistry({"T(1,1)": d5t_modules["S7"]})
    ctx = PivotContext(tube, "T(1,1)", t=1, algebra=d5t, modules=registry, ext="11", d=("12",))
    result = apply_ad1(ctx)
    algebra = result.algebra
    assert sorted(algebra.vertices) == sorted(d5t.vertices + ("11", "12"))
    assert sorted(a.id for a in algebra.quiver.arrows_from("11")) == ["11>12", "11>7"]
    for vertex in ("Z(0,1)@1", "X'(0)@1", "Y(1)@1"):
        module = result.modules[vertex]
        assert module.algebra is algebra
        assert make_label(module.dims) == result.quiver.label(vertex)
    assert result.delta is None


def test_ad1_without_modules_is_symbolic(d5t):
    result = apply_ad1(PivotContext(build_stable_tube(3, 5), "T(1,1)", t=1, algebra=d5t, ext="11"))
    assert result.algebra is None
    assert result.delta["vertex"] == "11"
    assert result.delta["summands"] == ("T(1,1)",)
    assert not result.delta["coextension"]


def test_ad2_after_dual_ad1():
    first = apply_operation("ad1*", PivotContext(build_stable_tube(2, 6), "T(0,1)", t=1))
    q = first.quiver
    assert q.is_injective("Z(0,1)@1")
    ctx = PivotContext(q, "Z(0,1)@1", tag="2")
    assert str(ctx.support_shape()) == "RayPlusFiniteCoray(1)"
    result = apply_ad2(ctx)
    new = result.quiver
    assert new.is_projective("X'(0)@2") and new.is_injective("X'(0)@2")
    assert "Z(0,1)@1" in new.predecessors("X'(0)@2")
    assert new.successors("X'(0)@2") == ["Z(1,1)@2"]
    assert mesh_check(new)
    assert parallel_rays(result) == result.parameter == 2


def test_ad2_needs_its_shape():
    with pytest.raises(ShapeMismatch, match="needs RayPlusFiniteCoray"):
        apply_ad2(PivotContext(build_stable_tube(2, 6), "T(0,1)"))


def test_fad1_on_an_isolated_vertex():
    result = apply_fad1(PivotContext(isolated(), "x"))
    q = result.quiver
    assert len(q) == 3
    assert q.is_projective("X'(0)@1") and q.is_injective("X'(0)@1")
    assert q.translate("W@1") == "x"
    assert q.is_injective("W@1")
    assert q.is_projective("x") and not q.is_injective("x")
    assert mesh_check(q)
    assert result.parameter is None


def test_ad3_splits_off_the_finite_part():
    result = apply_ad3(PivotContext(ladder(), "X0"))
    q = result.quiver
    assert result.removed == {"H1"}
    assert result.names["H1"] is None and result.names["Y2"] == "Y2"
    assert "H1" not in q
    assert mesh_check(q)
    assert q.is_projective("X'(0)@1") and not q.is_injective("X'(0)@1")
    assert q.translate("Y2") == "X'(0)@1"
    assert q.is_injective("X'(1)@1")
    assert q.translate("V2") == "X'(2)@1"
    assert not q.is_injective("X1") and not q.is_injective("Y2")
    assert sum(e.kind == "Z" for e in result.entries) == 7
    assert parallel_rays(result) == result.parameter == 3


def test_finite_part_must_stay_inside_the_window():
    quiver = ladder()
    hat, cut = split_finite_part(quiver, ("Y1", "Y2"), protected=("X0",))
    assert hat == {"H1"}
    assert cut == [("Y2", "H1")]
    with pytest.raises(GammaHatInfinite, match="contains H1"):
        split_finite_part(quiver, ("Y1", "Y2"), protected=("H1",))


def test_ad3_rejects_a_short_path():
    with pytest.raises(ShapeMismatch, match="ParallelMesh"):
        apply_ad3(PivotContext(isolated(), "x"))


def test_ad4_with_a_single_path_vertex():
    quiver = disjoint_union(build_stable_tube(2, 5), isolated("y"))
    result = apply_ad4(PivotContext(quiver, "T(0,1)", y=("y",)))
    q = result.quiver
    assert q.is_projective("Z(0,1)@1")
    assert q.translate("X'(0)@1") == "y"
    assert q.is_projective("y") and not q.is_injective("y")
    assert sum(e.kind == "Z" for e in result.entries) == 5
    assert mesh_check(q)
    assert parallel_rays(result) == result.parameter == 2


def test_ad4_with_a_triangular_part():
    quiver = disjoint_union(build_stable_tube(2, 5), isolated("y", make_label({"y": 1})))
    result = apply_ad4(PivotContext(quiver, "T(0,1)", y=("y",), r=2, g=("g1", "g2")))
    q = result.quiver
    assert sorted(e.id for e in result.entries if e.kind == "U") == ["U(1,1)@1", "U(1,2)@1", "U(2,1)@1", "U(2,2)@1", "U(2,3)@1"]
    assert q.label("U(2,3)@1") == make_label({"g2": 1})
    assert q.label("U(2,1)@1") == make_label({"g1": 1, "g2": 1, "y": 1})
    assert mesh_check(q)
    assert parallel_rays(result) == result.parameter == 4


def test_ad4_checks_the_path():
    quiver = disjoint_union(build_stable_tube(2, 5), isolated("y"))
    with pytest.raises(ShapeMismatch, match="finite sectional path"):
        apply_ad4(PivotContext(quiver, "T(0,1)"))
    with pytest.raises(ShapeMismatch, match="Unknown vertex"):
        apply_ad4(PivotContext(quiver, "T(0,1)", y=("z",)))
    with pytest.raises(ShapeMismatch, match="no arrow"):
        apply_ad4(PivotContext(quiver, "T(0,1)", y=("y", "T(1,1)")))


def test_ad5_composite():
    quiver = disjoint_union(build_stable_tube(2, 5), isolated("x"))
    steps = [("fad1", {"pivot": "x"}), ("ad4", {"pivot": "T(0,1)", "y": ("X'(0)@1.1", "W@1.1")})]
    result = apply_ad5(PivotContext(quiver), steps)
    q = result.quiver
    assert result.operation == "ad5"
    assert mesh_check(q)
    assert {e.step for e in result.entries} == {"1.1", "1.2"}
    assert result.extension_vertex == ("w0", "w1")
    assert result.parameter == 3
    assert q.translate("Z(0,2)@1.2") == "X'(0)@1.1"
    assert ledger_additivity_check(result)


def test_ad5_grammar():
    quiver = disjoint_union(build_stable_tube(2, 5), isolated("x"))
    bad = [
        [("ad4", {"pivot": "T(0,1)", "y": ("x",)}), ("fad1", {"pivot": "x"})],
        [("fad1", {"pivot": "x"})],
        [("fad1*", {"pivot": "x"}), ("ad4", {"pivot": "T(0,1)", "y": ("x",)})],
        [("fad1", {"pivot": "x"}), ("ad1", {"pivot": "T(1,1)"}), ("ad4", {"pivot": "T(0,1)", "y": ("x",)})],
    ]
    for steps in bad:
        with pytest.raises(GrammarViolation):
            apply_ad5(PivotContext(quiver), steps)


def test_unknown_operation():
    with pytest.raises(ValueError, match="Unknown operation"):
        apply_operation("ad7", PivotContext(build_stable_tube(1, 3), "T(0,1)"))


def test_support_shape_is_cached():
    ctx = PivotContext(build_stable_tube(3, 5), "T(0,1)")
    assert ctx.support_shape() is ctx.support_shape()
    assert ctx.support_shape() == classify_support(ctx.quiver, "T(0,1)")
