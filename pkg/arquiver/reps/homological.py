"""
Hom spaces, projective covers, syzygies and Ext groups.

Ext groups are read off minimal projective resolutions computed by iterated
syzygies: for ``0 -> Omega X -> P_0 -> X -> 0`` exactness of the Hom sequence
gives

    dim Ext^1(X, N) = dim Hom(Omega X, N) - dim Hom(P_0, N) + dim Hom(X, N)

and ``Ext^k(M, N) = Ext^1(Omega^{k-1} M, N)``.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from arquiver import linalg
from arquiver.config import resolve
from arquiver.exceptions import AlgebraMismatch, InfiniteGlobalDimensionWithinCap, ResolutionCapExceeded
from arquiver.reps.representation import (
    direct_sum,
    dual,
    projective,
    simple,
    subrepresentation,
    zero_representation,
)
from arquiver.verdict import Verdict

__all__ = [
    "HomSpace",
    "ProjectiveCover",
    "euler_characteristic",
    "ext_dim",
    "global_dimension",
    "hom",
    "hom_dimension",
    "hom_vanishing_check",
    "injective_dimension",
    "is_brick",
    "is_isomorphic_proxy",
    "proj_dim",
    "projective_cover",
    "radical",
    "syzygy",
    "syzygy_with_inclusion",
    "top_dimension_vector",
    "top_generators",
]

logger = logging.getLogger(__name__)


@dataclass
class HomSpace:
    """
    ``Hom_A(source, target)`` with an explicit basis.

    Each basis element maps vertex ids to matrices of shape
    ``(target.dims[v], source.dims[v])`` intertwining the arrow actions.
    """

    source: object
    target: object
    dimension: int
    basis: list = field(default_factory=list)


def _check_algebra(first, second):
    if first.algebra is not second.algebra:
        raise AlgebraMismatch("Hom spaces need modules over the same algebra.")


def _intertwining_system(source, target):
    algebra = source.algebra
    offsets, total = {}, 0
    for v in algebra.vertices:
        offsets[v] = total
        total += target.dims[v] * source.dims[v]
    equations = []
    for a in algebra.quiver.arrows:
        m_s, m_t = source.dims[a.source], source.dims[a.target]
        n_s, n_t = target.dims[a.source], target.dims[a.target]
        if n_t * m_s == 0:
            continue
        ma = linalg.qq_rows(source.maps[a.id])
        na = linalg.qq_rows(target.maps[a.id])
        for r in range(n_t):
            for c in range(m_s):
                row = [0] * total
                # (g_t M_a)[r][c]
                for k in range(m_t):
                    if ma[k][c] != 0:
                        row[offsets[a.target] + r * m_t + k] += ma[k][c]
                # (N_a g_s)[r][c]
                for k in range(n_s):
                    if na[r][k] != 0:
                        row[offsets[a.source] + k * m_s + c] -= na[r][k]
                if any(x != 0 for x in row):
                    equations.append(row)
    return linalg.matrix(equations, (len(equations), total)), offsets, total


def hom(source, target):
    """
    Compute ``Hom_A(source, target)``.

    Raises
    ------
    `~arquiver.exceptions.AlgebraMismatch`
    """
    _check_algebra(source, target)
    system, offsets, total = _intertwining_system(source, target)
    basis = []
    for vec in linalg.nullspace(system):
        element = {}
        for v in source.algebra.vertices:
            rows, cols = target.dims[v], source.dims[v]
            start = offsets[v]
            element[v] = linalg.matrix(
                [[vec[start + r * cols + c] for c in range(cols)] for r in range(rows)], (rows, cols)
            )
        basis.append(element)
    return HomSpace(source, target, len(basis), basis)


def hom_dimension(source, target):
    _check_algebra(source, target)
    system, _, total = _intertwining_system(source, target)
    return total - linalg.rank(system)


def is_brick(module):
    """Whether ``End(module)`` is one dimensional."""
    return hom_dimension(module, module) == 1


def _columns(m):
    rows = linalg.qq_rows(m)
    return [list(col) for col in zip(*rows)] if m.shape[0] and m.shape[1] else []


def _radical_columns(module):
    algebra = module.algebra
    spans = {v: [] for v in algebra.vertices}
    for a in algebra.quiver.arrows:
        spans[a.target].extend(_columns(module.maps[a.id]))
    return spans


def _basis_of_span(vectors):
    chosen = []
    for vec in vectors:
        if linalg.solve_in_span(chosen, vec) is None:
            chosen.append(vec)
    return chosen


def radical(module):
    """The radical ``rad M``, spanned by the images of all arrows."""
    bases = {}
    for v, vectors in _radical_columns(module).items():
        chosen = _basis_of_span(vectors)
        rows = [[vec[i] for vec in chosen] for i in range(module.dims[v])]
        bases[v] = linalg.matrix(rows, (module.dims[v], len(chosen)))
    rad, _ = subrepresentation(module, bases, name=f"rad {module.name}" if module.name else None)
    return rad


def top_generators(module):
    """Standard basis vectors completing a basis of ``rad M`` at each vertex."""
    generators = []
    for v, vectors in _radical_columns(module).items():
        span = _basis_of_span(vectors)
        for k in range(module.dims[v]):
            unit = [linalg.to_qq(int(i == k)) for i in range(module.dims[v])]
            if linalg.solve_in_span(span, unit) is None:
                span.append(unit)
                generators.append((v, unit))
    return generators


def top_dimension_vector(module):
    counts = {v: 0 for v in module.algebra.vertices}
    for v, _ in top_generators(module):
        counts[v] += 1
    return counts


@dataclass
class ProjectiveCover:
    """
    A projective cover ``P_0 -> M``.

    Attributes
    ----------
    module : `~arquiver.reps.Representation`
        ``P_0``, a direct sum with one summand ``P_v`` per top generator.
    surjection : `dict`
        Vertex to the matrix of ``P_0 -> M`` at that vertex.
    generators : `list`
        Pairs ``(vertex, vector)`` of top generators of ``M``.
    labels : `dict`
        Vertex to the list ``(generator index, basis path)`` indexing ``P_0`` at that vertex.
    """

    module: object
    surjection: dict
    generators: list
    labels: dict


@lru_cache(maxsize=256)
def _projective(algebra, vertex):
    return projective(algebra, vertex)


def projective_cover(module):
    algebra = module.algebra
    generators = top_generators(module)
    summands = [_projective(algebra, v) for v, _ in generators]
    labels = {w: [(k, p) for k, (v, _) in enumerate(generators) for p in summands[k].basis_paths[w]] for w in algebra.vertices}
    if summands:
        cover = direct_sum(*summands, name=f"P0({module.name})" if module.name else None)
    else:
        cover = zero_representation(algebra)
    surjection = {}
    for w in algebra.vertices:
        cols = []
        for k, p in labels[w]:
            v, vec = generators[k]
            image = linalg.matmul(module.path_matrix(p), linalg.column(vec))
            cols.append([row[0] for row in linalg.qq_rows(image)] if module.dims[w] else [])
        rows = [[col[i] for col in cols] for i in range(module.dims[w])]
        surjection[w] = linalg.matrix(rows, (module.dims[w], len(cols)))
    return ProjectiveCover(cover, surjection, generators, labels)


def syzygy_with_inclusion(module):
    """
    The first syzygy together with its cover.

    Returns
    -------
    `tuple`
        ``(Omega M, ProjectiveCover, inclusion)`` where ``inclusion[v]`` has the
        kernel basis of ``P_0 -> M`` at ``v`` as columns.
    """
    cover = projective_cover(module)
    bases = {}
    for w, m in cover.surjection.items():
        kernel = linalg.nullspace(m)
        dim = cover.module.dims[w]
        bases[w] = linalg.matrix([[vec[i] for vec in kernel] for i in range(dim)], (dim, len(kernel)))
    omega, inclusion = subrepresentation(cover.module, bases, name=f"Omega({module.name})" if module.name else None)
    return omega, cover, inclusion


def syzygy(module):
    chain = _chain(module, 1)
    return chain[1] if len(chain) > 1 else zero_representation(module.algebra)


def _chain(module, length):
    """``[M, Omega M, ..., Omega^length M]``, cut short after the first zero module."""
    if module._syzygies is None:
        module._syzygies = [module]
    chain = module._syzygies
    while len(chain) <= length and not chain[-1].is_zero():
        omega, _, _ = syzygy_with_inclusion(chain[-1])
        chain.append(omega)
    return chain


def proj_dim(module, cap=None):
    """
    Projective dimension, or `None` when the resolution does not stop within ``cap`` steps.
    """
    cap = resolve(cap, "resolution_cap")
    if module.is_zero():
        return 0
    chain = _chain(module, cap + 1)
    for k, omega in enumerate(chain):
        if omega.is_zero():
            logger.debug("Resolution of %s has length %d", module.name, k - 1)
            return k - 1
    return None


def injective_dimension(module, cap=None):
    return proj_dim(dual(module), cap)


def global_dimension(algebra, cap=None):
    """
    Global dimension as the largest projective dimension of a simple module.

    Raises
    ------
    `~arquiver.exceptions.InfiniteGlobalDimensionWithinCap`
    """
    return _global_dimension(algebra, resolve(cap, "gldim_cap"))


@lru_cache(maxsize=64)
def _global_dimension(algebra, cap):
    worst = 0
    for v in algebra.vertices:
        pd = proj_dim(simple(algebra, v), cap)
        if pd is None:
            raise InfiniteGlobalDimensionWithinCap(f"pd S_{v} exceeds {cap}; no finite global dimension certified.")
        worst = max(worst, pd)
    return worst


def ext_dim(first, second, k, cap=None):
    """
    ``dim Ext^k(first, second)``.

    Raises
    ------
    `~arquiver.exceptions.ResolutionCapExceeded`
        ``k - 1`` lies beyond ``cap`` and the resolution has not stopped by then.
    """
    _check_algebra(first, second)
    if k < 0:
        raise ValueError("Ext degree must be nonnegative.")
    if k == 0:
        return hom_dimension(first, second)
    cap = resolve(cap, "resolution_cap")
    if k - 1 > cap:
        if _chain(first, cap)[-1].is_zero():
            return 0
        raise ResolutionCapExceeded(f"Ext^{k} needs more than {cap} syzygies.")
    chain = _chain(first, k)
    if len(chain) < k or chain[k - 1].is_zero():
        return 0
    x = chain[k - 1]
    omega = chain[k] if len(chain) > k else zero_representation(x.algebra)
    tops = top_dimension_vector(x)
    projective_part = sum(tops[v] * second.dims[v] for v in x.algebra.vertices)
    return hom_dimension(omega, second) - projective_part + hom_dimension(x, second)


def euler_characteristic(first, second, cap=None):
    """Alternating sum of ``dim Ext^k(first, second)`` over the finite resolution of ``first``."""
    pd = proj_dim(first, cap)
    if pd is None:
        raise InfiniteGlobalDimensionWithinCap(f"{first.name} has no finite resolution within the cap.")
    return sum((-1) ** k * ext_dim(first, second, k, cap) for k in range(pd + 1))


def hom_vanishing_check(us, vs, tau_pairs):
    """
    Check ``Hom(U, tau V) = 0`` for every ``U`` in ``us`` and ``V`` in ``vs``.

    Parameters
    ----------
    us : `list` of `~arquiver.reps.Representation`
    vs : `list` of `str`
        Names of the modules ``V``.
    tau_pairs : `dict`
        Name of ``V`` to a representation of ``tau V``.

    Returns
    -------
    `~arquiver.verdict.Verdict`
    """
    missing = [v for v in vs if v not in tau_pairs]
    if missing:
        return Verdict(False, "hom_vanishing", {"missing": missing}, detail="no translate supplied")
    offending = [(u.name, v) for u in us for v in vs if hom_dimension(u, tau_pairs[v]) != 0]
    if offending:
        return Verdict(False, "hom_vanishing", {"pairs": offending}, detail=f"Hom({offending[0][0]}, tau {offending[0][1]}) != 0")
    return Verdict(True, "hom_vanishing", {"checked": len(us) * len(vs)})


def is_isomorphic_proxy(first, second, family=()):
    """
    Compare dimension vectors, endomorphism dimensions and Hom profiles against ``family``.

    Agreement does not prove an isomorphism; disagreement disproves one.
    """
    _check_algebra(first, second)
    if first.dims != second.dims:
        return Verdict(False, "isomorphic_proxy", detail="dimension vectors differ")
    if hom_dimension(first, first) != hom_dimension(second, second):
        return Verdict(False, "isomorphic_proxy", detail="endomorphism dimensions differ")
    for x in family:
        if hom_dimension(x, first) != hom_dimension(x, second) or hom_dimension(first, x) != hom_dimension(second, x):
            return Verdict(False, "isomorphic_proxy", {"test_module": x.name}, detail=f"Hom profiles differ at {x.name}")
    return Verdict(True, "isomorphic_proxy", {"family_size": len(family)})
