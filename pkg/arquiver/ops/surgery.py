"""
Admissible operations as surgery on a translation quiver and its algebra.

Every operation works on a `PivotContext` and returns a `SurgeryResult`. The
quiver side is always computed. The algebra side is an iterated one-point
extension (or coextension for the dual operations) and is computed whenever
the context carries an algebra and a representation at the pivot; otherwise
the result records what the extension would have been.

Dual operations are the primal ones applied to the opposite quiver and the
opposite algebra, then turned back round.
"""

import logging
from dataclasses import dataclass, field, replace

from arquiver import linalg
from arquiver.config import conf
from arquiver.exceptions import (
    AlgebraMismatch,
    ArquiverError,
    BoundaryTooTight,
    GrammarViolation,
    ShapeMismatch,
    SharedSubpathMissing,
)
from arquiver.ops.grid import Patch, ledger_table, split_finite_part
from arquiver.ops.modules import ModuleRegistry
from arquiver.ops.support import classify_support
from arquiver.qalg import (
    ExtensionData,
    fresh_vertex,
    linear_quiver_algebra,
    one_point_coextension_data,
    one_point_extension_data,
    point_module,
    product,
)
from arquiver.reps import direct_sum, dual, hom, is_brick, projective, simple, thin_module
from arquiver.tquiver import add_labels, make_label, mesh_check, opposite, sectional_paths
from arquiver.verdict import Verdict

__all__ = [
    "OPERATIONS",
    "PivotContext",
    "SurgeryResult",
    "apply_ad1",
    "apply_ad2",
    "apply_ad3",
    "apply_ad4",
    "apply_ad5",
    "apply_dual",
    "apply_fad1",
    "apply_fad2",
    "apply_fad3",
    "apply_fad4",
    "apply_operation",
    "ledger_additivity_check",
    "parallel_rays",
]

logger = logging.getLogger(__name__)


@dataclass
class PivotContext:
    """
    Everything an operation needs to know about where it is applied.

    Parameters
    ----------
    quiver : `~arquiver.tquiver.TranslationQuiver`
    pivot : `str`
        The vertex ``X``.
    t : `int`
        Length of the path ``Y_1, ..., Y_t``. For ad2 and ad3 it is read off the
        support and a nonzero value here must agree with it.
    r : `int`
        Number of vertices of the triangular matrix algebra in ad4.
    y : `tuple`
        The path ``Y_1, ..., Y_t`` for ad4 and fad4.
    algebra : `~arquiver.qalg.BoundQuiverAlgebra`, optional
    modules : `~arquiver.ops.ModuleRegistry`, optional
        Representations at quiver vertices.
    ext : `str`, optional
        Id of the extension vertex; a fresh one is chosen otherwise.
    d : `tuple`
        Ids of the vertices ``1, ..., t`` of the linear quiver added by ad1 and fad1.
    g : `tuple`
        Ids of the vertices ``v_1, ..., v_r`` added by ad4 and fad4.
    tag : `str`
        Suffix of new vertex ids, the step number in a script.
    provenance : `frozenset`, optional
        Vertices created by dual operations earlier in the script.
    reserved : `frozenset`
        Extension vertex ids already used, avoided when choosing fresh ones.
    dual : `bool`
        Set while a primal operation runs on the opposite side.
    """

    quiver: object
    pivot: str = None
    t: int = 0
    r: int = 0
    y: tuple = ()
    algebra: object = None
    modules: ModuleRegistry = None
    ext: str = None
    d: tuple = ()
    g: tuple = ()
    tag: str = "1"
    provenance: frozenset = None
    reserved: frozenset = frozenset()
    dual: bool = False
    shape: object = None

    def support_shape(self):
        """The classified support of the pivot, computed once."""
        if self.shape is None:
            self.shape = classify_support(self.quiver, self.pivot)
            logger.debug("Support of %s: %s", self.pivot, self.shape)
        return self.shape


@dataclass(frozen=True)
class SurgeryResult:
    """
    Outcome of one operation.

    Attributes
    ----------
    operation : `str`
    quiver : `~arquiver.tquiver.TranslationQuiver`
    algebra : `~arquiver.qalg.BoundQuiverAlgebra`
        The new algebra, `None` when the algebra side is symbolic.
    modules : `dict`
        Representations built for inserted vertices.
    entries : `tuple`
        `~arquiver.ops.LedgerEntry` per inserted vertex.
    names : `dict`
        Old vertex id to new id, `None` for removed vertices.
    removed : `frozenset`
    parameter : `int`
        Expected number of parallel rays through the inserted part, `None` for
        operations that insert no infinite rays.
    extension_vertex : `str`
    delta : `dict`
        The extension data when the algebra side is symbolic.
    """

    operation: str
    quiver: object
    algebra: object = None
    modules: dict = field(default_factory=dict)
    entries: tuple = ()
    names: dict = field(default_factory=dict)
    removed: frozenset = frozenset()
    parameter: int = None
    extension_vertex: object = None
    delta: dict = None

    @property
    def ledger(self):
        return ledger_table(self.entries)

    @property
    def new_vertices(self):
        return tuple(e.id for e in self.entries)


def _label_vertices(quiver):
    found = set()
    for x in quiver.vertices:
        label = quiver.label(x)
        if label:
            found.update(v for v, _ in label)
    return found


def _fresh_ids(ctx, given, count):
    taken = set(ctx.algebra.vertices) if ctx.algebra is not None else _label_vertices(ctx.quiver)
    taken |= set(ctx.reserved)
    given = [str(v) for v in given]
    if len(given) > count:
        raise ValueError(f"Expected at most {count} vertex ids, got {len(given)}.")
    omega = str(ctx.ext) if ctx.ext is not None else fresh_vertex(taken | set(given))
    taken.add(omega)
    ids = list(given)
    while len(ids) < count:
        ids.append(fresh_vertex(taken | set(ids)))
    return omega, ids


def _require(ctx, kind, finite=None):
    shape = ctx.support_shape()
    if shape.kind != kind or (finite is not None and shape.finite != finite):
        wanted = f"a finite {kind}" if finite else kind
        raise ShapeMismatch(f"The support of {ctx.pivot} is {shape}, the operation needs {wanted}.")
    return shape


def _check_provenance(ctx, operation):
    if not conf.require_provenance:
        return
    if ctx.provenance is None or ctx.pivot not in ctx.provenance:
        raise ShapeMismatch(f"{operation} needs a pivot created by a dual operation; {ctx.pivot} was not.")


def _check_t(ctx, t):
    if ctx.t and ctx.t != t:
        raise ShapeMismatch(f"The support of {ctx.pivot} has t = {t}, not {ctx.t}.")


def _interval(ids, first, last):
    """Thin label on ``ids[first - 1], ..., ids[last - 1]``."""
    return make_label({v: 1 for v in ids[first - 1 : last]})


class _AlgebraSide:
    """
    Extensions as seen by the operation.

    For a dual operation the oriented algebra is the opposite of the real one,
    modules are dualised on the way in and out, and extensions become
    coextensions of the real algebra.
    """

    def __init__(self, ctx):
        self.ctx = ctx
        self.dual = ctx.dual
        self.registry = ctx.modules

    def orient(self, algebra):
        return algebra.opposite() if self.dual else algebra

    real = orient

    def module(self, vertex_id, algebra):
        """The module at ``vertex_id`` over ``orient(algebra)``, or `None`."""
        if self.registry is None:
            return None
        module = self.registry.available(vertex_id, algebra)
        if module is None:
            return None
        return dual(module) if self.dual else module

    def pivot_module(self):
        ctx = self.ctx
        if ctx.algebra is None:
            return None
        module = self.module(ctx.pivot, ctx.algebra)
        if module is None:
            logger.warning("No representation at %s; the algebra side of step %s stays symbolic", ctx.pivot, ctx.tag)
            return None
        if not is_brick(module):
            raise ShapeMismatch(f"The module at {ctx.pivot} is not a brick.")
        return module

    def extend(self, base, module, vertex):
        """
        Extend the real algebra ``base`` by ``module`` (over ``orient(base)``).

        Returns
        -------
        `tuple`
            ``(real new algebra, ExtensionData on the oriented side)``.
        """
        if not self.dual:
            data = one_point_extension_data(base, module, vertex)
            return data.algebra, data
        data = one_point_coextension_data(base, dual(module), vertex)
        new = data.algebra
        return new, ExtensionData(new.opposite(), base.opposite(), data.vertex, data.module, data.arrows)

    def back(self, module, name):
        module = dual(module) if self.dual else module
        return module.renamed(name)

    def point(self, data, x, target, name):
        """
        ``(K, target, f)`` where ``f`` is the unique map ``X -> target`` on the summand ``X``.

        `None` unless ``Hom(X, target)`` is one dimensional.
        """
        space = hom(x, target)
        if space.dimension != 1:
            return None
        (g,) = space.basis
        components = {}
        for v in data.base.vertices:
            extra = data.module.dims[v] - x.dims[v]
            components[v] = linalg.hstack(g[v], linalg.zeros(target.dims[v], extra)) if extra else g[v]
        return self.back(point_module(data, target, components), name)


def _materialize_ray(side, data, xs, x_or, primes, first_row=0):
    """Point modules at ``X'_i`` from the modules at ``X_i``."""
    modules, base = {}, side.real(data.base)
    for i, vertex in primes.items():
        if i < first_row or i >= len(xs):
            continue
        target = x_or if i == 0 else side.module(xs[i], base)
        if target is None:
            continue
        try:
            module = side.point(data, x_or, target, vertex)
        except ArquiverError as err:
            logger.debug("No module at %s: %s", vertex, err)
            continue
        if module is not None:
            modules[vertex] = module
    return modules


def _symbolic(ctx, omega, summands, extra=None):
    delta = {"vertex": omega, "coextension": ctx.dual, "summands": tuple(summands)}
    if extra:
        delta.update(extra)
    return delta


def _finish(ctx, operation, patch, omega, parameter=None, algebra=None, modules=None, delta=None):
    quiver = patch.build()
    if not ctx.dual:
        _mesh_gate(quiver, operation, ctx.pivot)
    names = {x: (None if x in patch.removed else x) for x in ctx.quiver.vertices}
    logger.info("%s at %s inserted %d vertices, removed %d", operation, ctx.pivot, len(patch.entries), len(patch.removed))
    return SurgeryResult(
        operation,
        quiver,
        algebra=algebra,
        modules=dict(modules or {}),
        entries=tuple(patch.entries),
        names=names,
        removed=frozenset(patch.removed),
        parameter=parameter,
        extension_vertex=omega,
        delta=delta,
    )


def _mesh_gate(quiver, operation, pivot):
    verdict = mesh_check(quiver)
    if not verdict:
        raise ShapeMismatch(f"{operation} at {pivot} breaks the mesh condition: {verdict.detail}")


def _ray_patch(ctx, xs):
    patch = Patch(ctx.quiver, ctx.tag)
    for i, x in enumerate(xs):
        patch.place(i, 0, x)
    return patch


def _ad1(ctx, finite):
    name = "fad1" if finite else "ad1"
    shape = _require(ctx, "FiniteRay" if finite else "InfiniteRay")
    xs, t = shape.x_path, ctx.t
    if t < 0:
        raise ValueError("t must be nonnegative.")
    omega, ds = _fresh_ids(ctx, ctx.d, t)
    e = make_label({omega: 1})
    patch = _ray_patch(ctx, xs)
    for i in range(-t, 0):
        for j in range(1, t + 2 + i):
            stem, kind = (f"Y({j})", "Y") if i == -1 else (f"D({i},{j})", "D")
            patch.create(stem, kind, _interval(ds, -i, t + 1 - j), i, j)
    primes = patch.rectangle(xs, t, -1, e, finite=finite)
    patch.connect()
    patch.rewire(xs, primes)

    side = _AlgebraSide(ctx)
    x = side.pivot_module()
    if x is None:
        delta = _symbolic(ctx, omega, (ctx.pivot,), {"linear": tuple(ds)})
        return _finish(ctx, name, patch, omega, None if finite else t + 1, delta=delta)
    base = ctx.algebra
    if t:
        line = linear_quiver_algebra(list(reversed(ds)) if side.dual else ds)
        base = product(ctx.algebra, line, name=ctx.algebra.name)
        x = side.module(ctx.pivot, base)
        module = direct_sum(x, thin_module(side.orient(base), ds, name="Y_1"))
    else:
        module = x
    new, data = side.extend(base, module, omega)
    modules = _materialize_ray(side, data, xs, x, primes)
    for entry in patch.entries:
        if entry.kind in ("Y", "D"):
            modules[entry.id] = thin_module(new, dict(entry.label), name=entry.id)
    if t:
        modules[patch.cell(0, 1)] = side.back(projective(data.algebra, omega), patch.cell(0, 1))
    if finite:
        modules[patch.vid("W")] = simple(new, omega).renamed(patch.vid("W"))
    return _finish(ctx, name, patch, omega, None if finite else t + 1, algebra=new, modules=modules)


def apply_ad1(ctx):
    """
    Insert a rectangle along an infinite sectional path starting at the pivot.

    The algebra becomes ``(A x D)[X + Y_1]`` where ``D`` is the linear quiver
    on ``t`` new vertices and ``Y_1`` its projective-injective module; for
    ``t = 0`` it is ``A[X]`` and only the ray ``X'_i`` is inserted.

    Raises
    ------
    `~arquiver.exceptions.ShapeMismatch`
        The support of the pivot is not a single infinite sectional path.

    Examples
    --------
    >>> from arquiver.tquiver import build_stable_tube, classify_tube
    >>> result = apply_ad1(PivotContext(build_stable_tube(1, 6), "T(0,1)", t=1))
    >>> classify_tube(result.quiver)
    'ray'
    """
    return _ad1(ctx, finite=False)


def apply_fad1(ctx):
    """`apply_ad1` along a finite sectional path ending at an injective vertex."""
    return _ad1(ctx, finite=True)


def _ad2(ctx, finite):
    name = "fad2" if finite else "ad2"
    _check_provenance(ctx, name)
    shape = _require(ctx, "RayPlusFiniteCoray", finite=finite)
    xs, ys = shape.x_path, shape.y_path
    t = len(ys)
    _check_t(ctx, t)
    q = ctx.quiver
    if not all(q.is_injective(y) for y in (xs[0],) + ys):
        raise ShapeMismatch(f"{name} needs {xs[0]} and the path {', '.join(ys)} to be injective.")
    omega, _ = _fresh_ids(ctx, (), 0)
    e = make_label({omega: 1})
    patch = _ray_patch(ctx, xs)
    for j, y in enumerate(ys, start=1):
        patch.place(0, j, y)
    primes = patch.rectangle(xs, t, 0, e, first_row=1, finite=finite)
    first = patch.create("X'(0)", "X'", add_labels(q.label(xs[0]), e), 0, t + 1, (xs[0],), on_grid=False)
    patch.arrow(xs[0], first)
    patch.arrow(first, patch.cell(1, 1))
    primes[0] = first
    patch.connect()
    patch.rewire(xs, primes)
    return _extend_by_pivot(ctx, name, patch, omega, xs, primes, None if finite else t + 1, finite)


def _extend_by_pivot(ctx, name, patch, omega, xs, primes, parameter, finite):
    """Algebra side of ad2 and ad3: ``A[X]`` with ``X'_0`` the new projective."""
    side = _AlgebraSide(ctx)
    x = side.pivot_module()
    if x is None:
        return _finish(ctx, name, patch, omega, parameter, delta=_symbolic(ctx, omega, (ctx.pivot,)))
    new, data = side.extend(ctx.algebra, x, omega)
    modules = _materialize_ray(side, data, xs, x, primes, first_row=1)
    modules[primes[0]] = side.back(projective(data.algebra, omega), primes[0])
    if finite:
        modules[patch.vid("W")] = simple(new, omega).renamed(patch.vid("W"))
    return _finish(ctx, name, patch, omega, parameter, algebra=new, modules=modules)


def apply_ad2(ctx):
    """
    Operation on an injective pivot with one infinite and one finite sectional path.

    ``X'_0`` is inserted as a projective-injective vertex between ``X_0`` and
    ``Z_11``; the algebra becomes ``A[X]``.
    """
    return _ad2(ctx, finite=False)


def apply_fad2(ctx):
    return _ad2(ctx, finite=True)


def _ad3(ctx, finite):
    name = "fad3" if finite else "ad3"
    _check_provenance(ctx, name)
    shape = _require(ctx, "ParallelMesh", finite=finite)
    q = ctx.quiver
    xs, ys = shape.x_path, shape.y_path
    t, m = len(ys), len(xs) - 1
    _check_t(ctx, t)
    if t < 2:
        raise ShapeMismatch(f"{name} needs two parallel paths with t >= 2.")
    if m < t - 1 or (not finite and m < t):
        raise BoundaryTooTight(f"The path from {ctx.pivot} has {m} arrows inside the window, {t} are needed.")
    if not q.is_injective(xs[t - 1]):
        raise ShapeMismatch(f"{name} needs {xs[t - 1]} to be injective.")
    hat, _ = split_finite_part(q, ys, set(xs) | set(ys))
    if q.translate_inverse(ys[-1]) not in (None, *hat):
        raise ShapeMismatch(f"{name} needs {ys[-1]} to be injective once the finite part is split off.")
    omega, _ = _fresh_ids(ctx, (), 0)
    e = make_label({omega: 1})
    patch = Patch(q, ctx.tag)
    patch.removed = hat
    top = m + 1 if finite else m

    def x_label(i):
        return q.label(xs[i]) if i <= m else ()

    first = patch.create("X'(0)", "X'", add_labels(x_label(0), e), 0, 1, (xs[0],), on_grid=False)
    zs, primes = {}, {0: first}
    for i in range(1, top + 1):
        phantom = finite and i == top
        boundary = i == m and not finite
        for j in range(1, min(i, t) + 1):
            stem, kind = (f"Y'({j})", "Y'") if phantom else (f"Z({i},{j})", "Z")
            parents = (ys[j - 1],) if phantom else (xs[i], ys[j - 1])
            label = add_labels(x_label(i), q.label(ys[j - 1]), e)
            zs[i, j] = patch.create(stem, kind, label, i, j, parents, boundary, on_grid=False)
        stem, kind = ("W", "W") if phantom else (f"X'({i})", "X'")
        parents = () if phantom else (xs[i],)
        primes[i] = patch.create(stem, kind, add_labels(x_label(i), e), i, min(i, t) + 1, parents, boundary, on_grid=False)

    patch.arrow(xs[0], first)
    for (i, j), z in zs.items():
        if j == 1:
            if i <= m:
                patch.arrow(xs[i], z)
            if i == 1:
                patch.arrow(ys[0], z)
                patch.arrow(first, z)
            else:
                patch.arrow(zs[i - 1, 1], z)
            patch.tau[z] = xs[i - 1]
            continue
        patch.arrow(zs[i, j - 1], z)
        if i > j:
            patch.arrow(zs[i - 1, j], z)
        else:
            patch.arrow(primes[j - 1], z)
            patch.arrow(ys[j - 1], z)
        patch.tau[z] = zs[i - 1, j - 1]
    for i in range(1, top + 1):
        if i <= t:
            patch.arrow(zs[i, i], primes[i])
            patch.tau[primes[i]] = ys[i - 1]
        else:
            patch.arrow(zs[i, t], primes[i])
            patch.arrow(primes[i - 1], primes[i])
            patch.tau[primes[i]] = zs[i - 1, t]
    for j in range(2, t + 1):
        patch.drop(xs[j - 1], ys[j - 1])
        patch.drop(ys[j - 2], ys[j - 1])
        patch.arrow(zs[j - 1, j - 1], ys[j - 1])
        patch.tau[ys[j - 1]] = primes[j - 2]
    patch.rewire(xs, primes, start=t)
    return _extend_by_pivot(ctx, name, patch, omega, xs, primes, None if finite else t + 1, finite)


def apply_ad3(ctx):
    """
    Operation on a pivot whose support is the mesh category of two parallel sectional paths.

    The finite part hanging off the arrows ``Y_i -> tau^-1 Y_{i-1}`` is removed
    first; the algebra becomes ``A[X]``.

    Raises
    ------
    `~arquiver.exceptions.GammaHatInfinite`
        The part to be removed is not finite inside the window.
    """
    return _ad3(ctx, finite=False)


def apply_fad3(ctx):
    return _ad3(ctx, finite=True)


def _ad4(ctx, finite):
    name = "fad4" if finite else "ad4"
    shape = _require(ctx, "FiniteRay" if finite else "InfiniteRay")
    q = ctx.quiver
    xs, ys, r = shape.x_path, tuple(ctx.y), ctx.r
    t = len(ys)
    if t < 1:
        raise ShapeMismatch(f"{name} needs a finite sectional path Y_1, ..., Y_t.")
    if r < 0:
        raise ValueError("r must be nonnegative.")
    missing = [y for y in ys if y not in q]
    if missing:
        raise ShapeMismatch(f"Unknown vertex {missing[0]} on the path Y.")
    if set(ys) & set(xs):
        raise ShapeMismatch("The path Y meets the path starting at the pivot.")
    for a, b in zip(ys, ys[1:]):
        if b not in q.successors(a):
            raise ShapeMismatch(f"There is no arrow {a} -> {b} on the path Y.")
    if any(q.is_boundary(y) for y in ys):
        raise BoundaryTooTight("The path Y reaches the boundary of the window.")
    hat, _ = split_finite_part(q, ys, set(xs) | set(ys))
    if q.translate_inverse(ys[-1]) not in (None, *hat):
        raise ShapeMismatch(f"{name} needs {ys[-1]} to be injective once the finite part is split off.")
    omega, gs = _fresh_ids(ctx, ctx.g, r)
    e = make_label({omega: 1})
    patch = _ray_patch(ctx, xs)
    patch.removed = hat
    for j, y in enumerate(ys, start=1):
        patch.place(-r - 1, j, y)
    for k in range(1, r + 1):
        for l in range(1, t + k + 1):
            if l <= t:
                label, parents = add_labels(q.label(ys[l - 1]), _interval(gs, 1, k)), (ys[l - 1],)
            else:
                label, parents = _interval(gs, l - t, k), ()
            patch.create(f"U({k},{l})", "U", label, k - r - 1, l, parents, index=(k, l))
    primes = patch.rectangle(xs, t + r, -1, e, finite=finite)
    patch.connect()
    patch.rewire(xs, primes)

    side = _AlgebraSide(ctx)
    x = side.pivot_module()
    y1 = side.module(ys[0], ctx.algebra) if x is not None else None
    parameter = None if finite else t + r + 1
    if x is None or y1 is None:
        if x is not None:
            logger.warning("No representation at %s; the algebra side of step %s stays symbolic", ys[0], ctx.tag)
        delta = _symbolic(ctx, omega, (ctx.pivot, ys[0]), {"triangular": tuple(gs)})
        return _finish(ctx, name, patch, omega, parameter, delta=delta)
    real, top, modules = ctx.algebra, y1, {}
    for k, vertex in enumerate(gs, start=1):
        real, data = side.extend(real, top, vertex)
        top = projective(data.algebra, vertex)
        cell = patch.cell(k - r - 1, 1)
        modules[cell] = side.back(top, cell)
    x = side.module(ctx.pivot, real)
    new, data = side.extend(real, direct_sum(x, top), omega)
    modules.update(_materialize_ray(side, data, xs, x, primes))
    modules[patch.cell(0, 1)] = side.back(projective(data.algebra, omega), patch.cell(0, 1))
    if finite:
        modules[patch.vid("W")] = simple(new, omega).renamed(patch.vid("W"))
    return _finish(ctx, name, patch, omega, parameter, algebra=new, modules=modules)


def apply_ad4(ctx):
    """
    Glue a finite path ``Y_1, ..., Y_t`` to an infinite sectional path through a rectangle.

    With ``r >= 1`` the rectangles ``U_kl`` of the triangular matrix algebra on
    ``v_1, ..., v_r`` are inserted as well and the algebra is built as the
    iterated extension by ``Y_1``, ``P_{v_1}``, ... and finally ``X + P_{v_r}``.
    """
    return _ad4(ctx, finite=False)


def apply_fad4(ctx):
    return _ad4(ctx, finite=True)


def _check_grammar(operations):
    if len(operations) < 2:
        raise GrammarViolation("ad5 is a fad1, fad2 or fad3 step, some fad4 steps and an ad4 step.")
    starred = [op for op in operations if op.endswith("*")]
    if starred:
        raise GrammarViolation(f"Sub-steps of ad5 are primal; dualise the whole composite instead of {starred[0]}.")
    if operations[0] not in ("fad1", "fad2", "fad3"):
        raise GrammarViolation(f"ad5 must start with fad1, fad2 or fad3, not {operations[0]}.")
    if operations[-1] != "ad4":
        raise GrammarViolation(f"ad5 must end with ad4, not {operations[-1]}.")
    middle = [op for op in operations[1:-1] if op != "fad4"]
    if middle:
        raise GrammarViolation(f"Only fad4 may occur between the first and last step of ad5, not {middle[0]}.")


def _shared_tail(quiver, starts):
    tails = None
    for x in starts:
        ends = {p[-2:] for p in sectional_paths(quiver, x) if len(p) > 1 and quiver.is_boundary(p[-1])}
        if not ends:
            raise SharedSubpathMissing(f"No sectional path from {x} reaches the boundary.")
        tails = ends if tails is None else tails & ends
        if not tails:
            raise SharedSubpathMissing(f"The rays from {', '.join(starts)} do not share a tail.")
    return sorted(tails)[0] if tails else None


def apply_ad5(ctx, steps):
    """
    Run a composite ``(fad1 | fad2 | fad3), fad4, ..., fad4, ad4``.

    Parameters
    ----------
    ctx : `PivotContext`
        Carries the quiver, algebra and modules; the pivot is ignored.
    steps : `list`
        ``(operation, parameters)`` pairs, the parameters being `PivotContext`
        fields such as ``pivot``, ``t``, ``y`` or ``ext``.

    Raises
    ------
    `~arquiver.exceptions.GrammarViolation`
    `~arquiver.exceptions.SharedSubpathMissing`
        The sectional paths from the new projective vertices do not end in a
        common boundary reaching tail.
    """
    _check_grammar([op for op, _ in steps])
    registry = ctx.modules.copy() if ctx.modules is not None else None
    quiver, algebra = ctx.quiver, ctx.algebra
    names = {x: x for x in ctx.quiver.vertices}
    entries, modules, removed, deltas, omegas = [], {}, set(), [], []
    reserved = set(ctx.reserved)
    result = None
    for k, (op, params) in enumerate(steps, start=1):
        sub = replace(
            ctx,
            quiver=quiver,
            algebra=algebra,
            modules=registry,
            tag=f"{ctx.tag}.{k}",
            reserved=frozenset(reserved),
            shape=None,
            **params,
        )
        result = _PRIMAL[op](sub)
        quiver, algebra = result.quiver, result.algebra
        if algebra is None and ctx.algebra is not None:
            logger.warning("ad5 continues without an algebra after sub-step %d", k)
        names = {x: (result.names.get(y) if y is not None else None) for x, y in names.items()}
        entries.extend(result.entries)
        modules.update(result.modules)
        if registry is not None:
            registry.update(result.modules)
        removed |= result.removed
        omegas.append(result.extension_vertex)
        reserved.add(result.extension_vertex)
        if result.delta is not None:
            deltas.append(result.delta)
    starts = [e.id for e in entries if e.id in quiver and quiver.is_projective(e.id)]
    tail = _shared_tail(quiver, starts)
    logger.info("ad5 composite of %d steps; the new rays share the tail %s", len(steps), tail)
    return SurgeryResult(
        "ad5",
        quiver,
        algebra=algebra,
        modules=modules,
        entries=tuple(entries),
        names=names,
        removed=frozenset(removed),
        parameter=result.parameter,
        extension_vertex=tuple(omegas),
        delta={"steps": deltas} if deltas else None,
    )


_PRIMAL = {
    "ad1": apply_ad1,
    "ad2": apply_ad2,
    "ad3": apply_ad3,
    "ad4": apply_ad4,
    "fad1": apply_fad1,
    "fad2": apply_fad2,
    "fad3": apply_fad3,
    "fad4": apply_fad4,
}

OPERATIONS = tuple(sorted(_PRIMAL)) + ("ad5",)


def _dispatch(operation, ctx, steps=None):
    if operation == "ad5":
        return apply_ad5(ctx, steps or [])
    if operation not in _PRIMAL:
        raise ValueError(f"Unknown operation {operation!r}.")
    return _PRIMAL[operation](ctx)


def apply_dual(operation, ctx, steps=None):
    """
    Apply the dual of ``operation``.

    The primal operation runs on the opposite quiver (and, through the
    context, the opposite algebra); arrows and translation are then reversed
    back. Vertex ids are kept, so the name map needs no translation.
    """
    primal = operation.rstrip("*")
    if primal not in OPERATIONS:
        raise ValueError(f"Unknown operation {operation!r}.")
    flipped = replace(ctx, quiver=opposite(ctx.quiver), dual=not ctx.dual, shape=None)
    result = _dispatch(primal, flipped, steps)
    quiver = opposite(result.quiver)
    if not ctx.dual:
        _mesh_gate(quiver, f"{primal}*", ctx.pivot)
    return replace(result, operation=f"{primal}*", quiver=quiver)


def apply_operation(operation, ctx, steps=None):
    """Apply ``operation``, a tag such as ``"ad1"`` or ``"fad2*"``."""
    if operation.endswith("*"):
        return apply_dual(operation, ctx, steps)
    return _dispatch(operation, ctx, steps)


def ledger_additivity_check(result):
    """
    Labels of inserted vertices equal the sum of their parents' labels and ``e_w``.

    Entries with an unlabelled parent are skipped.
    """
    quiver = result.quiver
    failures, checked = [], 0
    for entry in result.entries:
        if entry.kind not in ("Z", "X'", "Y'") or entry.id not in quiver:
            continue
        omega = _omega_of(result, entry)
        parents = [quiver.label(p) if p in quiver else None for p in entry.parents]
        expected = add_labels(*parents, make_label({omega: 1}))
        actual = quiver.label(entry.id)
        if expected is None or actual is None:
            continue
        checked += 1
        if expected != actual:
            failures.append((entry.id, dict(actual), dict(expected)))
    if failures:
        return Verdict(False, "ledger_additivity", {"failures": failures, "checked": checked}, detail=f"label of {failures[0][0]} is off")
    return Verdict(True, "ledger_additivity", {"checked": checked})


def _omega_of(result, entry):
    omega = result.extension_vertex
    if isinstance(omega, tuple):
        # ad5: one extension vertex per sub-step, tagged "<step>.<k>"
        k = int(entry.step.rsplit(".", 1)[1])
        return omega[k - 1]
    return omega


def parallel_rays(result):
    """Number of inserted ``Z`` and ``X'`` vertices on the boundary, one per ray."""
    quiver = result.quiver
    return sum(1 for e in result.entries if e.kind in ("Z", "X'") and e.id in quiver and quiver.is_boundary(e.id))
