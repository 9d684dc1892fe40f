"""
End to end checks of the worked examples shipped as fixtures.

Every check returns a `~arquiver.verdict.Verdict`; `run_checks` collects them
into one `~astropy.table.Table`.
"""

import logging
from functools import cached_property
from itertools import combinations

from astropy.table import Table

from arquiver.analysis import (
    brenner_bound_check,
    count_bounds,
    count_by_dimvector,
    ext_end_inequality,
    finite_type_deg_order,
    multisection_cover_check,
    multisection_parts,
    orbit_dimension_drop,
    variety_dimension_formulas,
)
from arquiver.cli.registry import FixtureRegistry
from arquiver.forms import UnitForm, euler_form, gldim_le_2_implies_equal, tits_form, weak_nonnegativity_box
from arquiver.ops import ledger_additivity_check, read_script, run_script
from arquiver.qalg import algebras_match, full_convex_subcategory, triangular_matrix_algebra
from arquiver.reps import (
    direct_sum,
    euler_characteristic,
    global_dimension,
    hom_dimension,
    is_brick,
    projective,
    simple,
)
from arquiver.tquiver import (
    TranslationQuiver,
    almost_cyclic_check,
    build_stable_tube,
    coherence_check,
    cyclic_components_check,
    cyclic_vertices,
    mesh_check,
    support_of_subquiver,
)
from arquiver.verdict import Verdict

__all__ = ["CHECKS", "MODULES", "VerificationContext", "run_checks"]

logger = logging.getLogger(__name__)

MODULES = ("qalg", "reps", "forms", "tquiver", "ops", "analysis")

CHECKS = []

B8_DELTA = frozenset({"I1", "I2", "I3", "I4", "I5", "I6", "P6", "P7", "P8", "S5", "S6", "S7", "Q", "R"})
B8_PARTS = {
    "left": {"I1", "I2", "I3", "I4", "S5", "P6"},
    "core": {"S6", "P7", "Q", "R", "I5"},
    "right": {"I6", "S7", "P8"},
}


def check(module):
    """Register a check under one of `MODULES`."""

    def register(func):
        CHECKS.append((func.__name__, module, func))
        return func

    return register


class VerificationContext:
    """
    Fixtures shared by the checks of one run.

    The multicoil replay is computed at most once.
    """

    def __init__(self, registry=None):
        self.registry = registry or FixtureRegistry()

    @cached_property
    def replay(self):
        path = self.registry.script_path("A23")
        return run_script(read_script(path), base_dir=path.parent)

    def mouth(self):
        modules = self.registry.modules("D5t")
        return [modules[name] for name in ("S6", "S7", "E")]


def _combine(name, verdicts, truncated=False):
    failed = [v for v in verdicts if not v]
    truncated = truncated or any(v.truncation_dependent for v in verdicts)
    detail = "; ".join(str(v) for v in failed)
    return Verdict(not failed, name, {"checked": len(verdicts), "failed": len(failed)}, truncated, detail)


def _expect(name, pairs):
    """A verdict from ``(description, actual, expected)`` triples."""
    wrong = [f"{what}: got {actual}, expected {expected}" for what, actual, expected in pairs if actual != expected]
    return Verdict(not wrong, name, {"checked": len(pairs)}, detail="; ".join(wrong))


@check("qalg")
def fixtures_load(ctx):
    table = ctx.registry.validate()
    return Verdict(True, "fixtures_load", {"table": table}, detail=f"{len(table)} fixtures")


@check("qalg")
def b8_global_dimension(ctx):
    return _expect("b8_global_dimension", [("gl.dim B8", global_dimension(ctx.registry.algebra("B8")), 4)])


@check("forms")
def tits_equals_euler(ctx):
    algebras = [ctx.registry.algebra(name) for name in ("A2", "K2", "D5t")]
    algebras += [triangular_matrix_algebra(r) for r in range(1, 6)]
    return _combine("tits_equals_euler", [gldim_le_2_implies_equal(a) for a in algebras])


@check("forms")
def mouth_radical_vector(ctx):
    d5t = ctx.registry.algebra("D5t")
    q = tits_form(d5t)
    vectors = [[m.dims[v] for v in d5t.vertices] for m in ctx.mouth()]
    delta = [sum(column) for column in zip(*vectors)]
    verdict = _expect("mouth_radical_vector", [("q(delta)", q(delta), 0), ("q(E)", q(vectors[2]), 1)])
    return _combine("mouth_radical_vector", [verdict, weak_nonnegativity_box(q, 6)])


@check("forms")
def negative_form_detected(ctx):
    verdict = weak_nonnegativity_box(UnitForm([[1, -3], [0, 1]]), 6)
    return Verdict(not verdict, "negative_form_detected", verdict.witnesses, detail=str(verdict))


@check("reps")
def mouth_orthogonal_bricks(ctx):
    mouth = ctx.mouth()
    pairs = [(f"End({m.name})", is_brick(m), True) for m in mouth]
    for first, second in combinations(mouth, 2):
        pairs.append((f"Hom({first.name}, {second.name})", hom_dimension(first, second), 0))
        pairs.append((f"Hom({second.name}, {first.name})", hom_dimension(second, first), 0))
    return _expect("mouth_orthogonal_bricks", pairs)


@check("reps")
def euler_identity(ctx):
    a2 = ctx.registry.algebra("A2")
    groups = [(a2, [projective(a2, "1"), simple(a2, "1"), simple(a2, "2")])]
    groups += [(ctx.registry.algebra(name), list(ctx.registry.modules(name).values())) for name in ("D5t", "B8")]
    pairs = []
    for algebra, modules in groups:
        chi = euler_form(algebra)
        for m in modules:
            vector = [m.dims[v] for v in algebra.vertices]
            pairs.append((f"chi({m.name})", chi(vector), euler_characteristic(m, m)))
    return _expect("euler_identity", pairs)


@check("tquiver")
def tube_counts(ctx):
    mouth = [m.dims for m in ctx.mouth()]
    tube = build_stable_tube(3, 8, mouth=mouth)
    delta = {v: sum(d[v] for d in mouth) for v in mouth[0]}
    pairs = [("vertices of dimension delta", count_by_dimvector(tube, delta).count, 3)]
    pairs += [(f"mesh of tube({r}, {w})", bool(mesh_check(build_stable_tube(r, w))), True) for r in (1, 2, 3) for w in (6, 8)]
    return _expect("tube_counts", pairs)


@check("tquiver")
def b8_cyclic_support(ctx):
    component = ctx.registry.component("B8")
    cyclic = set(cyclic_vertices(component))
    verdict = _expect(
        "b8_cyclic_support",
        [("cyclic vertices", cyclic, B8_PARTS["core"]), ("support", support_of_subquiver(component, cyclic), {"5", "6", "7"})],
    )
    return _combine("b8_cyclic_support", [verdict, cyclic_components_check(component)])


@check("tquiver")
def malformed_mesh_detected(ctx):
    tube = build_stable_tube(2, 3)
    broken = TranslationQuiver([tube.vertex(x) for x in tube.vertices], tube.arrows[1:], tube.tau)
    verdict = mesh_check(broken)
    return Verdict(not verdict, "malformed_mesh_detected", detail=str(verdict))


@check("analysis")
def b8_multisection(ctx):
    component = ctx.registry.component("B8")
    parts = multisection_parts(component, B8_DELTA)
    verdict = _expect("b8_multisection", [(name, set(getattr(parts, name)), part) for name, part in B8_PARTS.items()])
    return _combine("b8_multisection", [verdict, multisection_cover_check(component, parts)])


@check("analysis")
def degeneration_micro_case(ctx):
    a2 = ctx.registry.algebra("A2")
    s1, s2 = simple(a2, "1"), simple(a2, "2")
    p1 = projective(a2, "1")
    split = direct_sum(s1, s2)
    order = finite_type_deg_order(p1, split, [p1, s1, s2], complete=True)
    verdict = _expect("degeneration_micro_case", [("relation", order.relation, "<="), ("degeneration", order.degeneration, "<=")])
    return _combine("degeneration_micro_case", [verdict, orbit_dimension_drop(p1, split)])


@check("analysis")
def ext_end_on_d5t(ctx):
    d5t = ctx.registry.algebra("D5t")
    modules = list(ctx.registry.modules("D5t").values())
    verdicts = [ext_end_inequality(m) for m in modules]
    verdicts += [variety_dimension_formulas(d5t, m.dims, module=m).check for m in modules]
    return _combine("ext_end_on_d5t", verdicts)


@check("ops")
def multicoil_replay(ctx):
    result = ctx.replay
    algebra = result.algebra
    a23 = ctx.registry.algebra("A23")
    restriction = full_convex_subcategory(a23, list(algebra.vertices)).algebra
    return _expect(
        "multicoil_replay",
        [("matches the convex restriction", algebras_match(algebra, restriction), True), ("gl.dim <= 3", global_dimension(algebra) <= 3, True)],
    )


@check("ops")
def multicoil_invariants(ctx):
    result = ctx.replay
    quiver = result.quiver
    verdicts = [mesh_check(quiver), coherence_check(quiver), almost_cyclic_check(quiver), cyclic_components_check(quiver)]
    verdicts += [brenner_bound_check(quiver), count_bounds(quiver)[0]]
    verdicts += [ledger_additivity_check(r) for r in result.results if r.entries]
    return _combine("multicoil_invariants", verdicts)


def run_checks(only=None, registry=None):
    """
    Run the registered checks.

    Parameters
    ----------
    only : `str` or iterable of `str`, optional
        Restrict to checks of these modules.
    registry : `~arquiver.cli.registry.FixtureRegistry`, optional

    Returns
    -------
    `~astropy.table.Table`
        Columns ``check``, ``module``, ``status`` (``PASS``, ``FAIL`` or
        ``ERROR``), ``truncated`` and ``detail``.
    """
    if isinstance(only, str):
        only = [only]
    only = set(only or MODULES)
    unknown = only - set(MODULES)
    if unknown:
        raise ValueError(f"Unknown module {sorted(unknown)[0]!r}; choose from {', '.join(MODULES)}.")
    ctx = VerificationContext(registry)
    rows = []
    for name, module, func in CHECKS:
        if module not in only:
            continue
        try:
            verdict = func(ctx)
        except (ValueError, KeyError, FileNotFoundError) as err:
            logger.warning("Check %s raised %s", name, err)
            rows.append((name, module, "ERROR", False, str(err)))
            continue
        status = "PASS" if verdict else "FAIL"
        rows.append((name, module, status, verdict.truncation_dependent, verdict.detail))
    return Table(rows=rows, names=("check", "module", "status", "truncated", "detail"))
