"""
Cyclic parts, cyclic components and supports of translation subquivers.
"""

import logging

import networkx as nx

from arquiver.qalg import full_convex_subcategory
from arquiver.verdict import Verdict

__all__ = [
    "cyclic_components",
    "cyclic_components_check",
    "cyclic_part",
    "cyclic_vertices",
    "scc_cyclic",
    "support_algebra",
    "support_of_subquiver",
]

logger = logging.getLogger(__name__)


def _nontrivial_sccs(graph):
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            yield component
        else:
            (x,) = component
            if graph.has_edge(x, x):
                yield component


def cyclic_vertices(quiver):
    """Vertices lying on an oriented cycle of arrows."""
    return set().union(*_nontrivial_sccs(quiver.graph))


def cyclic_part(quiver):
    """
    The full translation subquiver on the vertices lying on oriented cycles.

    Examples
    --------
    >>> from arquiver.tquiver import build_za_window
    >>> len(cyclic_part(build_za_window(5, 4)))
    0
    """
    keep = cyclic_vertices(quiver)
    name = f"cyclic part of {quiver.name}" if quiver.name else None
    return quiver.subquiver([x for x in quiver.vertices if x in keep], name=name)


def _sorted_partition(blocks, order):
    blocks = [frozenset(b) for b in blocks]
    return sorted(blocks, key=lambda b: min(order[x] for x in b))


def cyclic_components(quiver):
    """Connected components of the cyclic part, ignoring arrow directions."""
    order = {x: k for k, x in enumerate(quiver.vertices)}
    part = cyclic_part(quiver)
    return _sorted_partition(nx.weakly_connected_components(part.graph), order)


def scc_cyclic(quiver):
    """Strongly connected components of the whole quiver that carry a cycle."""
    order = {x: k for k, x in enumerate(quiver.vertices)}
    return _sorted_partition(_nontrivial_sccs(quiver.graph), order)


def cyclic_components_check(quiver):
    """
    Two cyclic vertices lie in one cyclic component iff an oriented cycle passes through both.

    Compares `cyclic_components` with `scc_cyclic`.
    """
    components = cyclic_components(quiver)
    sccs = scc_cyclic(quiver)
    witnesses = {"components": components, "sccs": sccs}
    if set(components) != set(sccs):
        split = next(c for c in components if c not in sccs)
        return Verdict(False, "cyclic_components_are_strong", witnesses, detail=f"component {sorted(split)} is not strongly connected")
    return Verdict(True, "cyclic_components_are_strong", witnesses)


def support_of_subquiver(quiver, vertex_ids=None):
    """
    Algebra vertices in the support of the labels of ``vertex_ids`` (all vertices by default).

    Unlabelled vertices contribute nothing.
    """
    vertex_ids = quiver.vertices if vertex_ids is None else vertex_ids
    support = set()
    for x in vertex_ids:
        label = quiver.label(x)
        if label:
            support.update(v for v, n in label if n)
    return support


def support_algebra(quiver, algebra, vertex_ids=None):
    """
    The full subcategory of ``algebra`` on `support_of_subquiver`, with its convexity.

    Returns
    -------
    `~arquiver.qalg.ConvexRestriction`
    """
    support = support_of_subquiver(quiver, vertex_ids)
    restriction = full_convex_subcategory(algebra, support)
    if not restriction.convex:
        logger.info("Support %s is not convex: %s", sorted(support), restriction.witness)
    return restriction
