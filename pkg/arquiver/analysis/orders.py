"""
Hom order comparisons of modules with a common dimension vector.

The degeneration order is never computed from the geometry of module
varieties. It is only derived from the Hom order in the settings where the two
are known to agree, and every such verdict records where it came from.
"""

import logging
from dataclasses import dataclass, field

from arquiver import linalg
from arquiver.exceptions import DimensionMismatch
from arquiver.reps import direct_sum, hom_dimension
from arquiver.verdict import Verdict

__all__ = [
    "OrderVerdict",
    "check_ext_step",
    "finite_type_deg_order",
    "hom_order",
    "orbit_dimension",
    "orbit_dimension_drop",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderVerdict:
    """
    Comparison of two modules against a finite test family.

    Attributes
    ----------
    first, second : `str`
        Names of the modules compared.
    relation : `str`
        One of ``"<="``, ``">="``, ``"equal-profile"`` and ``"incomparable"``,
        read off ``dim Hom(-, X)`` over the family.
    dual_relation : `str`
        The same read off ``dim Hom(X, -)``.
    profiles : `dict`
        ``"from"`` and ``"to"`` map each test module to the pair of dimensions.
    degeneration : `str`
        ``"<="`` or ``"not <="`` once derived, else `None`.
    provenance : `str`
        Why ``degeneration`` may be read off the Hom order.
    """

    first: str
    second: str
    relation: str
    dual_relation: str
    profiles: dict = field(default_factory=dict)
    degeneration: str = None
    provenance: str = ""

    @property
    def consistent(self):
        """Whether both profiles give the same relation."""
        return self.relation == self.dual_relation

    @property
    def strict(self):
        return self.relation == "<="

    def __str__(self):
        text = f"{self.first} {self.relation} {self.second}"
        if self.degeneration is not None:
            text += f" (degeneration: {self.degeneration})"
        return text


def _relation(pairs):
    below = all(m <= n for m, n in pairs)
    above = all(m >= n for m, n in pairs)
    if below and above:
        return "equal-profile"
    if below:
        return "<="
    if above:
        return ">="
    return "incomparable"


def hom_order(first, second, family):
    """
    Compare ``first`` and ``second`` in the Hom order relative to ``family``.

    ``first <= second`` when ``dim Hom(first, X) <= dim Hom(second, X)`` for
    every ``X`` in the family. The contravariant profile ``dim Hom(X, -)`` is
    computed as well; over all modules the two agree.

    Parameters
    ----------
    first, second : `~arquiver.reps.Representation`
    family : iterable of `~arquiver.reps.Representation`

    Returns
    -------
    `OrderVerdict`

    Raises
    ------
    `~arquiver.exceptions.DimensionMismatch`
    """
    if first.dims != second.dims:
        raise DimensionMismatch(f"{first.name} and {second.name} have different dimension vectors.")
    family = list(family)
    hom_from = {x.name: (hom_dimension(first, x), hom_dimension(second, x)) for x in family}
    hom_to = {x.name: (hom_dimension(x, first), hom_dimension(x, second)) for x in family}
    verdict = OrderVerdict(
        first.name,
        second.name,
        _relation(hom_from.values()),
        _relation(hom_to.values()),
        {"from": hom_from, "to": hom_to},
    )
    if not verdict.consistent:
        logger.warning("The test family separates %s and %s differently from both sides", first.name, second.name)
    return verdict


def finite_type_deg_order(first, second, indecomposables, complete=False):
    """
    Decide ``first <=_deg second`` over an algebra of finite representation type.

    There the degeneration order coincides with the Hom order, which is decided
    by the indecomposable modules.

    Parameters
    ----------
    first, second : `~arquiver.reps.Representation`
    indecomposables : iterable of `~arquiver.reps.Representation`
        All indecomposable modules up to isomorphism.
    complete : `bool`
        The caller's attestation that ``indecomposables`` is complete.

    Returns
    -------
    `OrderVerdict`
    """
    if not complete:
        raise ValueError("The degeneration order needs the complete list of indecomposables; pass complete=True.")
    verdict = hom_order(first, second, indecomposables)
    holds = verdict.relation in ("<=", "equal-profile")
    return OrderVerdict(
        verdict.first,
        verdict.second,
        verdict.relation,
        verdict.dual_relation,
        verdict.profiles,
        degeneration="<=" if holds else "not <=",
        provenance="finite representation type: degenerations agree with the Hom order on all indecomposables",
    )


def _component(maps, vertex, shape):
    m = maps.get(vertex)
    if m is None:
        return linalg.zeros(*shape)
    if not hasattr(m, "domain"):
        try:
            m = linalg.matrix(m, shape)
        except ValueError:
            raise DimensionMismatch(f"The map at {vertex} does not fit the shape {shape}.") from None
    if m.shape != shape:
        raise DimensionMismatch(f"The map at {vertex} has shape {m.shape}, expected {shape}.")
    return m


def _morphism(maps, source, target):
    return {v: _component(maps, v, (target.dims[v], source.dims[v])) for v in source.algebra.vertices}


def _sequence_defect(sub, middle, quotient, f, g):
    """Why ``0 -> sub -f-> middle -g-> quotient -> 0`` is not exact, or `None`."""
    for a in middle.algebra.quiver.arrows:
        s, t = a.source, a.target
        for label, h, first, second in (("f", f, sub, middle), ("g", g, middle, quotient)):
            lhs = linalg.matmul(second.maps[a.id], h[s])
            rhs = linalg.matmul(h[t], first.maps[a.id])
            if linalg.entries(lhs) != linalg.entries(rhs):
                return f"{label} is not a homomorphism along {a.id}"
    for v in middle.algebra.vertices:
        if linalg.rank(f[v]) != sub.dims[v]:
            return f"f is not injective at {v}"
        if linalg.rank(g[v]) != quotient.dims[v]:
            return f"g is not surjective at {v}"
        # with the dimensions adding up this gives im f = ker g
        if not linalg.is_zero(linalg.matmul(g[v], f[v])):
            return f"g f is not zero at {v}"
    return None


def check_ext_step(middle, sub, quotient, f, g, family, name=None):
    """
    Check that an extension degenerates into the direct sum of its ends in the Hom order.

    Parameters
    ----------
    middle, sub, quotient : `~arquiver.reps.Representation`
    f, g : `dict`
        Vertex id to matrix of ``sub -> middle`` and ``middle -> quotient``;
        missing vertices map by zero.
    family : iterable of `~arquiver.reps.Representation`
        Test modules of the Hom order.
    name : `str`, optional
        Name of the direct sum.

    Returns
    -------
    `~arquiver.verdict.Verdict`
        Fails when ``0 -> sub -> middle -> quotient -> 0`` is not exact or when
        ``middle`` does not lie below the direct sum.

    Raises
    ------
    `~arquiver.exceptions.DimensionMismatch`
        The dimension vectors do not add up, or a map has the wrong shape.
    """
    dims = {v: sub.dims[v] + quotient.dims[v] for v in middle.algebra.vertices}
    if dims != middle.dims:
        raise DimensionMismatch(f"{middle.name} is not an extension of {quotient.name} by {sub.name}.")
    f, g = _morphism(f, sub, middle), _morphism(g, middle, quotient)
    defect = _sequence_defect(sub, middle, quotient, f, g)
    if defect is not None:
        logger.debug("Sequence %s -> %s -> %s: %s", sub.name, middle.name, quotient.name, defect)
        return Verdict(False, "ext_step_in_hom_order", {"exact": False}, detail=f"not a short exact sequence: {defect}")
    split = direct_sum(sub, quotient, name=name or f"{sub.name}+{quotient.name}")
    verdict = hom_order(middle, split, family)
    witnesses = {"exact": True, "order": verdict}
    return Verdict(verdict.relation in ("<=", "equal-profile"), "ext_step_in_hom_order", witnesses, detail=f"{verdict}")


def orbit_dimension(module):
    """
    Dimension of the orbit of ``module`` in its module variety, ``sum d_i^2 - dim End``.

    Examples
    --------
    >>> from arquiver.qalg import linear_quiver_algebra
    >>> from arquiver.reps import projective
    >>> orbit_dimension(projective(linear_quiver_algebra(["1", "2"]), "1"))
    1
    """
    return sum(d * d for d in module.dims.values()) - hom_dimension(module, module)


def orbit_dimension_drop(first, second):
    """
    A proper degeneration of ``first`` to ``second`` lowers the orbit dimension.

    Returns
    -------
    `~arquiver.verdict.Verdict`
    """
    if first.dims != second.dims:
        raise DimensionMismatch(f"{first.name} and {second.name} have different dimension vectors.")
    top, bottom = orbit_dimension(first), orbit_dimension(second)
    witnesses = {first.name: top, second.name: bottom}
    if bottom >= top:
        return Verdict(False, "orbit_dimension_drop", witnesses, detail=f"dim O({second.name}) = {bottom} >= {top}")
    return Verdict(True, "orbit_dimension_drop", witnesses)
