"""
Middle terms of meshes and the number of vertices sharing a dimension vector.
"""

import logging
from collections import Counter
from dataclasses import dataclass

from astropy.table import Table

from arquiver.ops import format_label
from arquiver.tquiver import make_label, support_of_subquiver
from arquiver.verdict import Verdict

__all__ = [
    "DimensionVectorCount",
    "brenner_bound_check",
    "count_bounds",
    "count_by_dimvector",
    "count_table",
    "middle_term_count",
]

logger = logging.getLogger(__name__)

MAX_MIDDLE_TERMS = 5


def middle_term_count(quiver, vertex):
    """
    Number of indecomposable middle terms of the mesh ending at ``vertex``.

    Arrows carry no valuation, so this is the number of arrows into ``vertex``.

    Raises
    ------
    `ValueError`
        ``vertex`` is projective or its translate lies outside the window.
    """
    if quiver.is_projective(vertex):
        raise ValueError(f"{vertex} is projective and ends no mesh.")
    if quiver.translate(vertex) is None:
        raise ValueError(f"The translate of {vertex} lies outside the window.")
    return len(quiver.predecessors(vertex))


def brenner_bound_check(quiver):
    """
    At most five middle terms everywhere, and a projective-injective one wherever there are five.

    Boundary vertices are skipped.

    Returns
    -------
    `~arquiver.verdict.Verdict`
        ``witnesses["counts"]`` maps each checked vertex to its number of middle terms.
    """
    counts, too_many, unsupported = {}, [], []
    for x in quiver.interior():
        if quiver.is_projective(x) or quiver.translate(x) is None:
            continue
        s = middle_term_count(quiver, x)
        counts[x] = s
        if s > MAX_MIDDLE_TERMS:
            too_many.append(x)
        elif s == MAX_MIDDLE_TERMS:
            middle = quiver.predecessors(x)
            if not any(quiver.is_projective(y) and quiver.is_injective(y) for y in middle):
                unsupported.append(x)
    witnesses = {"counts": counts, "too_many": too_many, "unsupported": unsupported}
    truncated = len(quiver.interior()) < len(quiver)
    if too_many:
        detail = f"{too_many[0]} has {counts[too_many[0]]} middle terms"
        return Verdict(False, "middle_term_bound", witnesses, truncated, detail)
    if unsupported:
        detail = f"{unsupported[0]} has five middle terms, none projective-injective"
        return Verdict(False, "middle_term_bound", witnesses, truncated, detail)
    return Verdict(True, "middle_term_bound", witnesses, truncated)


@dataclass(frozen=True)
class DimensionVectorCount:
    """
    Vertices labelled by one dimension vector, with the bounds they are held to.

    Attributes
    ----------
    label : `tuple`
    vertices : `tuple`
    n : `int`
        Rank of the Grothendieck group.
    """

    label: tuple
    vertices: tuple
    n: int

    @property
    def count(self):
        return len(self.vertices)

    @property
    def within_n(self):
        return self.count <= self.n

    @property
    def within_n_plus_2(self):
        return self.count <= self.n + 2


def _rank(quiver, n):
    return len(support_of_subquiver(quiver)) if n is None else n


def count_by_dimvector(quiver, dims, n=None):
    """
    Vertices of ``quiver`` labelled by the dimension vector ``dims``.

    Parameters
    ----------
    quiver : `~arquiver.tquiver.TranslationQuiver`
    dims : `dict`
        Vertex id to multiplicity; zero entries are ignored.
    n : `int`, optional
        Rank of the Grothendieck group of the algebra; defaults to the number
        of algebra vertices in the support of all labels.

    Returns
    -------
    `DimensionVectorCount`

    Examples
    --------
    >>> from arquiver.tquiver import build_stable_tube
    >>> tube = build_stable_tube(2, 4, mouth=[{"a": 1}, {"b": 1}])
    >>> count_by_dimvector(tube, {"a": 1, "b": 1}).vertices
    ('T(0,2)', 'T(1,2)')
    """
    label = make_label(dims)
    vertices = tuple(x for x in quiver.vertices if quiver.label(x) == label and label)
    return DimensionVectorCount(label, vertices, _rank(quiver, n))


def count_table(quiver):
    """An `~astropy.table.Table` with one row per occurring label and its number of vertices."""
    counts = Counter(quiver.label(x) for x in quiver.vertices if quiver.label(x))
    rows = sorted((format_label(label), count) for label, count in counts.items())
    if not rows:
        return Table(names=("label", "count"), dtype=(str, int))
    return Table(rows=rows, names=("label", "count"))


def count_bounds(quiver, n=None):
    """
    Compare the number of vertices per label with ``n`` and ``n + 2``.

    Returns
    -------
    `tuple` of `~arquiver.verdict.Verdict`
        The bound by ``n`` and the bound by ``n + 2``.
    """
    n = _rank(quiver, n)
    counts = Counter(quiver.label(x) for x in quiver.vertices if quiver.label(x))
    truncated = any(quiver.is_boundary(x) for x in quiver.vertices)
    verdicts = []
    for name, bound in (("count_at_most_n", n), ("count_at_most_n_plus_2", n + 2)):
        over = sorted(format_label(label) for label, count in counts.items() if count > bound)
        witnesses = {"n": n, "labels": len(counts), "over": over}
        detail = f"{len(over)} labels exceed {bound}" if over else ""
        verdicts.append(Verdict(not over, name, witnesses, truncated, detail))
    logger.debug("Counted %d labels against n = %d", len(counts), n)
    return tuple(verdicts)
