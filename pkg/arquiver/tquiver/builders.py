"""
Seed translation quivers: truncated stable tubes and windows of ``ZA_infinity``.
"""

import logging

from arquiver.config import resolve
from arquiver.tquiver.translation_quiver import TranslationQuiver, TVertex, add_labels, make_label

__all__ = ["build_stable_tube", "build_za_window", "tube_id"]

logger = logging.getLogger(__name__)


def tube_id(n, l, prefix=None):
    """Id of the tube vertex in column ``n`` and quasi-length ``l``, e.g. ``"T(0,1)"``."""
    return f"{resolve(prefix, 'tube_prefix')}({n},{l})"


def build_stable_tube(r, window=None, mouth=None, prefix=None):
    """
    The stable tube of rank ``r`` cut at quasi-length ``window``.

    The vertex ``(n, l)`` has arrows to ``(n, l + 1)`` and ``(n + 1, l - 1)``
    (column indices mod ``r``) and ``tau (n, l) = (n - 1, l)``. The top layer is
    flagged as boundary; the translation stays defined there.

    Parameters
    ----------
    r : `int`
        Rank, at least 1.
    window : `int`, optional
        Largest quasi-length kept, at least 1. Defaults to ``conf.window``.
    mouth : `list`, optional
        Dimension vectors of the mouth, ``mouth[n]`` sitting at ``(n, 1)``; then
        ``(n, l)`` is labelled by ``mouth[n] + ... + mouth[n + l - 1]``.
    prefix : `str`, optional
        Defaults to ``conf.tube_prefix``.

    Returns
    -------
    `~arquiver.tquiver.TranslationQuiver`

    Examples
    --------
    >>> tube = build_stable_tube(3, 2)
    >>> len(tube), len(tube.arrows)
    (6, 6)
    >>> tube.translate("T(0,1)")
    'T(2,1)'
    """
    window = resolve(window, "window")
    if r < 1 or window < 1:
        raise ValueError("A stable tube needs rank and window at least 1.")
    if mouth is not None and len(mouth) != r:
        raise ValueError(f"Expected {r} mouth labels, got {len(mouth)}.")
    mouth = [make_label(m) for m in mouth] if mouth is not None else None

    def label(n, l):
        if mouth is None:
            return None
        return add_labels(*[mouth[(n + k) % r] for k in range(l)])

    vertices, arrows, tau = [], [], {}
    for l in range(1, window + 1):
        for n in range(r):
            x = tube_id(n, l, prefix)
            vertices.append(TVertex(x, label(n, l), boundary=l == window, coord=(n, l)))
            tau[x] = tube_id((n - 1) % r, l, prefix)
            if l < window:
                arrows.append((x, tube_id(n, l + 1, prefix)))
            if l > 1:
                arrows.append((x, tube_id((n + 1) % r, l - 1, prefix)))
    logger.debug("Stable tube of rank %d with %d vertices", r, len(vertices))
    return TranslationQuiver(vertices, arrows, tau, name=f"tube(r={r}, L={window})")


def build_za_window(width, window=None, prefix="ZA"):
    """
    The window ``0 <= c < width``, ``1 <= l <= window`` of ``ZA_infinity``.

    The vertex ``(c, l)`` has arrows to ``(c, l + 1)`` and ``(c + 1, l - 1)`` and
    ``tau (c, l) = (c - 1, l)``. Both outer columns and the top layer are boundary.

    Examples
    --------
    >>> za = build_za_window(4, 3)
    >>> len(za), len(za.interior())
    (12, 4)
    """
    window = resolve(window, "window")
    if width < 2 or window < 1:
        raise ValueError("A ZA window needs width at least 2 and window at least 1.")

    def vid(c, l):
        return f"{prefix}({c},{l})"

    vertices, arrows, tau = [], [], {}
    for c in range(width):
        for l in range(1, window + 1):
            x = vid(c, l)
            edge = c in (0, width - 1) or l == window
            vertices.append(TVertex(x, boundary=edge, coord=(c, l)))
            if c > 0:
                tau[x] = vid(c - 1, l)
            if l < window:
                arrows.append((x, vid(c, l + 1)))
            if l > 1 and c + 1 < width:
                arrows.append((x, vid(c + 1, l - 1)))
    return TranslationQuiver(vertices, arrows, tau, name=f"ZA(width={width}, L={window})")
