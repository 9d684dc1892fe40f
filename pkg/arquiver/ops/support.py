"""
Shape of the support of ``Hom(X, -)`` on a component, read off the translation quiver.

The support is approximated by sectional paths leaving the pivot and, for two
parallel paths, by the ladder of meshes joining them. A path is infinite when
it reaches the boundary; when a decision would need to look past the boundary
the classifier refuses to guess.
"""

import logging
from collections import Counter
from dataclasses import dataclass

from arquiver.exceptions import AmbiguousAtBoundary, BoundaryTooTight
from arquiver.tquiver import sectional_steps

__all__ = ["SHAPES", "SupportShape", "classify_support"]

logger = logging.getLogger(__name__)

SHAPES = ("InfiniteRay", "RayPlusFiniteCoray", "ParallelMesh", "FiniteRay", "Other")


@dataclass(frozen=True)
class SupportShape:
    """
    A classified support.

    Attributes
    ----------
    kind : `str`
        One of `SHAPES`.
    x_path : `tuple`
        The path ``X = X_0, X_1, ...`` starting at the pivot.
    y_path : `tuple`
        ``Y_1, ..., Y_t``, the finite path beside it.
    finite : `bool`
        Whether ``x_path`` ends at an injective vertex rather than the boundary.
    """

    kind: str
    x_path: tuple = ()
    y_path: tuple = ()
    finite: bool = False

    @property
    def s(self):
        return len(self.x_path) - 1

    @property
    def t(self):
        return len(self.y_path)

    def __str__(self):
        if self.kind in ("RayPlusFiniteCoray", "ParallelMesh"):
            return f"{self.kind}({self.t})"
        if self.kind == "FiniteRay":
            return f"{self.kind}({self.s})"
        return self.kind


def _single_arrows(quiver, source, targets):
    counts = Counter(quiver.successors(source))
    return all(counts[y] == 1 for y in targets)


def _follow(quiver, path):
    """
    Extend ``path`` along its unique sectional continuation.

    Returns the walked path and how it stopped: ``"boundary"``, ``"end"`` when
    there is no continuation, or ``"branch"`` for several continuations, a
    multiple arrow or a revisited vertex.
    """
    path = list(path)
    while True:
        current = path[-1]
        if quiver.is_boundary(current):
            return tuple(path), "boundary"
        previous = path[-2] if len(path) > 1 else None
        steps = sectional_steps(quiver, previous, current)
        if not steps:
            return tuple(path), "end"
        if len(steps) > 1 or steps[0] in path or not _single_arrows(quiver, current, steps):
            return tuple(path), "branch"
        path.append(steps[0])


def _ladder(quiver, pivot, x1, y1):
    """
    Try ``x1`` as the continuation of the pivot and ``y1`` as the start of the parallel path.

    Returns ``(xs, ys, end)`` or `None` when the meshes do not line up. ``end``
    is how the ``X`` path stopped, ``"undecided"`` when the ladder hits the boundary.
    """
    xs, ys = [pivot, x1], [y1]
    while True:
        base = xs[len(ys) - 1]
        if quiver.is_boundary(base) or quiver.is_boundary(ys[-1]):
            return xs, ys, "undecided"
        nxt = quiver.translate_inverse(base)
        if nxt is None:
            break
        if nxt in ys or nxt in xs:
            return None
        if sorted(quiver.predecessors(nxt)) != sorted([xs[len(ys)], ys[-1]]):
            return None
        ys.append(nxt)
        if len(xs) <= len(ys):
            walked, stop = _follow(quiver, xs[-2:])
            if len(walked) < 3:
                if stop == "boundary":
                    return xs, ys, "undecided"
                return None
            xs.append(walked[2])
    if len(ys) < 2:
        return None
    walked, stop = _follow(quiver, xs[-2:])
    xs = xs[:-2] + list(walked)
    if stop == "end" and quiver.is_injective(xs[-1]):
        return xs, ys, "end"
    if stop == "boundary":
        return xs, ys, "boundary"
    return None


def _undecided(quiver, pivot):
    if any(quiver.is_injective(x) for x in quiver.vertices):
        raise AmbiguousAtBoundary(f"The support of {pivot} cannot be told apart from a finite one inside the window.")
    return SupportShape("Other")


def classify_support(quiver, pivot):
    """
    Classify the support of ``Hom(pivot, -)`` restricted to ``quiver``.

    Parameters
    ----------
    quiver : `~arquiver.tquiver.TranslationQuiver`
    pivot : `str`

    Returns
    -------
    `SupportShape`
        ``InfiniteRay`` for a single sectional path reaching the boundary,
        ``RayPlusFiniteCoray`` for an injective pivot with one infinite and one
        finite path, ``ParallelMesh`` for two parallel paths joined by meshes,
        ``FiniteRay`` for a single path ending at an injective vertex and
        ``Other`` for anything else. The finite variants of the two path shapes
        set ``finite``.

    Raises
    ------
    `~arquiver.exceptions.BoundaryTooTight`
        The pivot lies on the boundary.
    `~arquiver.exceptions.AmbiguousAtBoundary`
        Both candidate paths reach the boundary, so finiteness cannot be decided.

    Examples
    --------
    >>> from arquiver.tquiver import build_stable_tube
    >>> str(classify_support(build_stable_tube(3, 8), "T(0,1)"))
    'InfiniteRay'
    >>> str(classify_support(build_stable_tube(3, 8), "T(0,2)"))
    'Other'
    """
    if quiver.is_boundary(pivot):
        raise BoundaryTooTight(f"The pivot {pivot} lies on the boundary of the window.")
    steps = sectional_steps(quiver, None, pivot)
    if not _single_arrows(quiver, pivot, steps):
        return SupportShape("Other")
    injective = quiver.is_injective(pivot)

    if not steps:
        if injective:
            return SupportShape("FiniteRay", (pivot,), finite=True)
        return SupportShape("Other")

    if len(steps) == 1:
        walked, stop = _follow(quiver, [pivot, steps[0]])
        if stop == "boundary":
            return SupportShape("InfiniteRay", walked)
        if stop == "end" and quiver.is_injective(walked[-1]):
            return SupportShape("FiniteRay", walked, finite=True)
        return SupportShape("Other")

    if len(steps) > 2:
        return SupportShape("Other")

    if injective:
        paths = {}
        for y in sorted(steps):
            walked, stop = _follow(quiver, [pivot, y])
            if stop == "branch" or (stop == "end" and not quiver.is_injective(walked[-1])):
                return SupportShape("Other")
            paths[y] = (walked, stop)
        stops = sorted(stop for _, stop in paths.values())
        if stops == ["boundary", "boundary"]:
            return _undecided(quiver, pivot)
        if stops == ["boundary", "end"]:
            ray = next(w for w, s in paths.values() if s == "boundary")
            coray = next(w for w, s in paths.values() if s == "end")
            return SupportShape("RayPlusFiniteCoray", ray, coray[1:])
        first, second = sorted(paths.values(), key=lambda item: (-len(item[0]), item[0][1]))
        return SupportShape("RayPlusFiniteCoray", first[0], second[0][1:], finite=True)

    found = []
    for x1, y1 in (tuple(steps), tuple(reversed(steps))):
        ladder = _ladder(quiver, pivot, x1, y1)
        if ladder is not None:
            found.append(ladder)
    if not found:
        return SupportShape("Other")
    xs, ys, end = found[0]
    if end == "undecided":
        return _undecided(quiver, pivot)
    return SupportShape("ParallelMesh", tuple(xs), tuple(ys), finite=end == "end")
