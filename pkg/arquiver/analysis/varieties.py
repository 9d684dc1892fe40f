"""
Dimensions attached to module varieties, read off the quadratic forms and Ext groups.
"""

import logging
from dataclasses import dataclass

from arquiver.config import resolve
from arquiver.exceptions import ArquiverError, DimensionMismatch
from arquiver.forms import euler_form, tits_form
from arquiver.reps import ext_dim, hom_dimension, proj_dim
from arquiver.verdict import Verdict

__all__ = [
    "VarietyReport",
    "ext_end_inequality",
    "group_dimension",
    "periodic_variety_dimension",
    "variety_dimension_formulas",
]

logger = logging.getLogger(__name__)


def group_dimension(dims):
    """Dimension of ``G(d)``, the product of the general linear groups, ``sum d_i^2``."""
    return sum(int(d) ** 2 for d in dims.values())


def _vector(algebra, dims):
    unknown = set(dims) - set(algebra.vertices)
    if unknown:
        raise DimensionMismatch(f"Dimensions given for unknown vertices {sorted(unknown)}.")
    return [int(dims.get(v, 0)) for v in algebra.vertices]


def ext_end_inequality(module, cap=None):
    """
    Check ``dim Ext^1(M, M) <= dim End(M)`` and ``Ext^k(M, M) = 0`` for ``k >= 2``.

    The higher groups are computed up to the projective dimension of ``M``, or
    up to ``cap`` when the resolution does not stop within it.

    Returns
    -------
    `~arquiver.verdict.Verdict`
        Truncation dependent when the higher groups were only checked up to ``cap``.
    """
    cap = resolve(cap, "resolution_cap")
    end = hom_dimension(module, module)
    ext1 = ext_dim(module, module, 1, cap)
    pd = proj_dim(module, cap)
    top = cap if pd is None else pd
    higher = {k: ext_dim(module, module, k, cap) for k in range(2, top + 1)}
    witnesses = {"end": end, "ext1": ext1, "higher": higher, "pd": pd}
    truncated = pd is None
    if ext1 > end:
        return Verdict(False, "ext_end_inequality", witnesses, truncated, f"dim Ext^1 = {ext1} > dim End = {end}")
    nonzero = [k for k, d in higher.items() if d]
    if nonzero:
        detail = f"Ext^{nonzero[0]}({module.name}, {module.name}) has dimension {higher[nonzero[0]]}"
        return Verdict(False, "ext_end_inequality", witnesses, truncated, detail)
    return Verdict(True, "ext_end_inequality", witnesses, truncated, f"{ext1} <= {end}")


@dataclass(frozen=True)
class VarietyReport:
    """
    Dimensions attached to a dimension vector ``d`` and, optionally, one module of that vector.

    Attributes
    ----------
    dims : `dict`
    group : `int`
        ``dim G(d)``.
    ambient : `int`
        Dimension of the space of all matrix tuples, before the relations are imposed.
    tits : `int`
        ``q_A(d)``.
    euler : `int`
        ``chi_A(d)``, or `None` when no finite global dimension is certified.
    end, ext1, ext2, orbit : `int`
        Present when a module was given.
    check : `~arquiver.verdict.Verdict`
        ``q_A(d) >= chi_A(d) = dim End - dim Ext^1 >= 0`` with ``Ext^2 = 0``.
    """

    dims: dict
    group: int
    ambient: int
    tits: int
    euler: int = None
    end: int = None
    ext1: int = None
    ext2: int = None
    orbit: int = None
    check: Verdict = None

    def as_dict(self):
        return {k: v for k, v in self.__dict__.items() if k not in ("dims", "check")}


def _module_check(tits, euler, end, ext1, ext2):
    witnesses = {"tits": tits, "euler": euler, "end": end, "ext1": ext1, "ext2": ext2}
    if euler is None:
        return Verdict(False, "variety_dimensions", witnesses, detail="chi_A(d) is not available")
    failures = []
    if tits < euler:
        failures.append(f"q(d) = {tits} < chi(d) = {euler}")
    if euler != end - ext1:
        failures.append(f"chi(d) = {euler} but dim End - dim Ext^1 = {end - ext1}")
    if end - ext1 < 0:
        failures.append("dim Ext^1 exceeds dim End")
    if ext2:
        failures.append(f"dim Ext^2 = {ext2}")
    if failures:
        return Verdict(False, "variety_dimensions", witnesses, detail="; ".join(failures))
    return Verdict(True, "variety_dimensions", witnesses, detail=f"{tits} >= {euler} = {end} - {ext1} >= 0")


def variety_dimension_formulas(algebra, dims, module=None, gldim_cap=None):
    """
    Collect the dimensions attached to ``dims``.

    Parameters
    ----------
    algebra : `~arquiver.qalg.BoundQuiverAlgebra`
        A triangular algebra.
    dims : `dict`
        Vertex id to dimension.
    module : `~arquiver.reps.Representation`, optional
        A module with dimension vector ``dims``; adds its End and Ext groups,
        its orbit dimension and the comparison with the forms.

    Returns
    -------
    `VarietyReport`

    Examples
    --------
    >>> from arquiver.qalg import linear_quiver_algebra
    >>> report = variety_dimension_formulas(linear_quiver_algebra(["1", "2"]), {"1": 1, "2": 1})
    >>> report.group, report.ambient, report.tits, report.euler
    (2, 1, 1, 1)
    """
    vector = _vector(algebra, dims)
    dims = dict(zip(algebra.vertices, vector))
    group = group_dimension(dims)
    ambient = sum(dims[a.source] * dims[a.target] for a in algebra.quiver.arrows)
    tits = tits_form(algebra)(vector)
    try:
        euler = euler_form(algebra, gldim_cap)(vector)
    except ArquiverError as err:
        logger.warning("No Euler form for %s: %s", algebra.name or "the algebra", err)
        euler = None
    if module is None:
        return VarietyReport(dims, group, ambient, tits, euler)
    if module.dims != dims:
        raise DimensionMismatch(f"{module.name} does not have the dimension vector given.")
    end = hom_dimension(module, module)
    ext1 = ext_dim(module, module, 1)
    ext2 = ext_dim(module, module, 2)
    check = _module_check(tits, euler, end, ext1, ext2)
    return VarietyReport(dims, group, ambient, tits, euler, end, ext1, ext2, group - end, check)


def periodic_variety_dimension(algebra, dims):
    """
    ``dim G(d) - q_A(d)``, the dimension of the module variety at a vector of a periodic family.

    Examples
    --------
    >>> from arquiver.qalg import linear_quiver_algebra
    >>> periodic_variety_dimension(linear_quiver_algebra(["1", "2"]), {"1": 1, "2": 1})
    1
    """
    vector = _vector(algebra, dims)
    return group_dimension(dict(zip(algebra.vertices, vector))) - tits_form(algebra)(vector)
