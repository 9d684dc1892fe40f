"""
Local structure of translation quivers: mouths, tube types, sectional paths and coherence.

An infinite sectional path is represented by a sectional path that reaches a
boundary vertex, so every answer built on it is truncation dependent.
"""

import logging
from collections import deque

from arquiver.tquiver.cyclic import cyclic_vertices
from arquiver.verdict import Verdict

__all__ = [
    "almost_cyclic_check",
    "boundary_reaching_path",
    "classify_tube",
    "coherence_check",
    "is_sectional",
    "mouth",
    "sectional_paths",
    "sectional_steps",
]

logger = logging.getLogger(__name__)


def mouth(quiver):
    """
    Non-boundary vertices with exactly one arrow coming in.

    A vertex without any arrow but with a translate (the rank one tube cut at
    quasi-length one) is counted as well.
    """
    found = []
    for x in quiver.interior():
        into = quiver.predecessors(x)
        if len(into) == 1 or (not into and not quiver.successors(x) and quiver.translate(x) is not None):
            found.append(x)
    return found


def classify_tube(quiver):
    """
    ``"stable"``, ``"ray"``, ``"coray"`` or ``"neither"`` from the flags off the boundary.

    Examples
    --------
    >>> from arquiver.tquiver import build_stable_tube
    >>> classify_tube(build_stable_tube(2, 3))
    'stable'
    """
    inner = [quiver.vertex(x) for x in quiver.interior()]
    projective = any(v.projective for v in inner)
    injective = any(v.injective for v in inner)
    if not projective and not injective:
        return "stable"
    if not injective:
        return "ray"
    if not projective:
        return "coray"
    return "neither"


def is_sectional(quiver, path):
    """
    Whether consecutive vertices of ``path`` are joined by arrows and ``path[i] != tau path[i + 2]``.
    """
    for s, t in zip(path, path[1:]):
        if t not in quiver.successors(s):
            return False
    return all(quiver.translate(path[i + 2]) != path[i] for i in range(len(path) - 2))


def sectional_steps(quiver, previous, current, reverse=False):
    """
    Vertices that extend the sectional path ``... previous -> current`` by one arrow.

    With ``reverse`` the path is extended backwards along predecessors, and the
    condition reads ``next != tau previous``.
    """
    candidates = quiver.predecessors(current) if reverse else quiver.successors(current)
    steps = []
    for y in candidates:
        if y in steps:
            continue
        if previous is not None:
            if reverse and y == quiver.translate(previous):
                continue
            if not reverse and quiver.translate(y) == previous:
                continue
        steps.append(y)
    return steps


def sectional_paths(quiver, start, reverse=False, limit=1000):
    """
    Maximal sectional paths starting (or, with ``reverse``, ending) at ``start``.

    A path stops at a boundary vertex, where it cannot be extended, or where it
    would walk an arrow a second time. Paths are returned in walking order, so
    reversed paths end at ``start``.
    """
    found = []
    stack = [((start,), frozenset())]
    while stack and len(found) < limit:
        path, used = stack.pop()
        current = path[-1]
        previous = path[-2] if len(path) > 1 else None
        steps = [] if quiver.is_boundary(current) and len(path) > 1 else sectional_steps(quiver, previous, current, reverse)
        steps = [y for y in steps if (current, y) not in used]
        if not steps:
            found.append(tuple(reversed(path)) if reverse else path)
            continue
        for y in reversed(steps):
            stack.append((path + (y,), used | {(current, y)}))
    return found


def boundary_reaching_path(quiver, start, reverse=False):
    """
    A shortest sectional path from ``start`` to a boundary vertex, or `None`.

    The search runs over pairs ``(previous, current)`` so it terminates on
    cyclic quivers.
    """
    if quiver.is_boundary(start):
        return (start,)
    queue = deque([(None, start)])
    parent = {(None, start): None}
    while queue:
        state = queue.popleft()
        previous, current = state
        for y in sectional_steps(quiver, previous, current, reverse):
            nxt = (current, y)
            if nxt in parent:
                continue
            parent[nxt] = state
            if quiver.is_boundary(y):
                walked = []
                back = nxt
                while back is not None:
                    walked.append(back[1])
                    back = parent[back]
                walked.reverse()
                return tuple(reversed(walked)) if reverse else tuple(walked)
            queue.append(nxt)
    return None


def coherence_check(quiver):
    """
    Every projective starts, and every injective ends, a sectional path reaching the boundary.

    Returns
    -------
    `~arquiver.verdict.Verdict`
        On success ``witnesses["paths"]`` maps each projective and injective
        vertex to its path; on failure ``witnesses["projective"]`` and
        ``witnesses["injective"]`` list the vertices without one.
    """
    paths, bad_projective, bad_injective = {}, [], []
    for x in quiver.interior():
        v = quiver.vertex(x)
        if v.projective:
            path = boundary_reaching_path(quiver, x)
            if path is None:
                bad_projective.append(x)
            else:
                paths[x] = path
        if v.injective:
            path = boundary_reaching_path(quiver, x, reverse=True)
            if path is None:
                bad_injective.append(x)
            else:
                paths.setdefault(x, path)
    if bad_projective or bad_injective:
        first = (bad_projective or bad_injective)[0]
        return Verdict(
            False,
            "coherence",
            {"projective": bad_projective, "injective": bad_injective},
            truncation_dependent=True,
            detail=f"no boundary reaching sectional path at {first}",
        )
    return Verdict(True, "coherence", {"paths": paths}, truncation_dependent=bool(paths))


def almost_cyclic_check(quiver):
    """
    Finite stand-in for almost cyclicity: every boundary vertex lies on an oriented cycle.

    A component whose acyclic part is finite has a cyclic part reaching out to the
    truncation frontier, which is what this tests.
    """
    cyclic = cyclic_vertices(quiver)
    acyclic = [x for x in quiver.vertices if x not in cyclic]
    frontier = [x for x in acyclic if quiver.is_boundary(x)]
    witnesses = {"acyclic": acyclic, "acyclic_boundary": frontier}
    if frontier:
        return Verdict(False, "almost_cyclic", witnesses, truncation_dependent=True, detail=f"boundary vertex {frontier[0]} is acyclic")
    return Verdict(True, "almost_cyclic", witnesses, truncation_dependent=True)
