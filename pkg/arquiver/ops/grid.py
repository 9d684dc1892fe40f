"""
Gluing new vertices into a translation quiver.

A `Patch` collects the vertices, arrows and translations added by one surgery
and the arrows and vertices it takes away. Most operations place their new
vertices on a grid of cells ``(i, j)``: cell ``(i, j)`` has arrows to
``(i + 1, j)`` and ``(i, j + 1)`` and translate ``(i - 1, j - 1)``. Row ``0``
holds the ray ``X_0, X_1, ...`` starting at the pivot.
"""

import logging
from collections import Counter
from dataclasses import dataclass, replace

import networkx as nx
from astropy.table import Table

from arquiver.exceptions import GammaHatInfinite, InvalidTranslationQuiver, ShapeMismatch
from arquiver.tquiver import TranslationQuiver, TVertex, add_labels

__all__ = ["LedgerEntry", "Patch", "format_label", "ledger_table", "split_finite_part"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LedgerEntry:
    """
    One inserted vertex.

    Attributes
    ----------
    id : `str`
    kind : `str`
        ``"Z"``, ``"X'"``, ``"Y"``, ``"D"``, ``"U"``, ``"Y'"`` or ``"W"``.
    i, j : `int`
        Indices of the vertex in the pictures of the operation.
    label : `tuple`
        Dimension vector label, `None` when unknown.
    parents : `tuple`
        Existing vertices whose labels, plus the extension vertex, add up to ``label``.
    step : `str`
        Tag of the script step that inserted the vertex.
    """

    id: str
    kind: str
    i: int
    j: int
    label: tuple
    parents: tuple
    step: str


def format_label(label):
    if label is None:
        return ""
    return ",".join(f"{v}={n}" for v, n in label)


def ledger_table(entries):
    """The ledger as an `~astropy.table.Table` with one row per inserted vertex."""
    names = ("id", "kind", "i", "j", "label", "parents", "step")
    if not entries:
        return Table(names=names, dtype=(str, str, int, int, str, str, str))
    rows = [(e.id, e.kind, e.i, e.j, format_label(e.label), " ".join(e.parents), e.step) for e in entries]
    return Table(rows=rows, names=names)


def split_finite_part(quiver, ys, protected=()):
    """
    Cut the arrows ``Y_i -> tau^-1 Y_{i-1}`` and collect what hangs off them.

    Parameters
    ----------
    quiver : `~arquiver.tquiver.TranslationQuiver`
    ys : `tuple`
        The path ``Y_1, ..., Y_t``.
    protected : iterable
        Vertices that must stay, typically the pivot's paths.

    Returns
    -------
    `tuple`
        ``(finite part, cut arrows)``; the finite part is the union of the
        connected components containing the vertices ``tau^-1 Y_{i-1}``.

    Raises
    ------
    `~arquiver.exceptions.GammaHatInfinite`
        A cut arrow is missing from the window, or the finite part reaches the
        boundary or a protected vertex.
    """
    arrows = Counter(quiver.arrows)
    cut, starts = [], []
    for previous, current in zip(ys, ys[1:]):
        v = quiver.translate_inverse(previous)
        if v is None:
            if quiver.is_injective(previous):
                continue
            raise GammaHatInfinite(f"The inverse translate of {previous} lies outside the window.")
        if arrows[(current, v)] == 0:
            raise GammaHatInfinite(f"The arrow {current} -> {v} to be deleted is cut off by the window.")
        cut.append((current, v))
        starts.append(v)
    if not starts:
        return frozenset(), cut
    remaining = arrows - Counter(cut)
    graph = nx.Graph()
    graph.add_nodes_from(quiver.vertices)
    graph.add_edges_from(remaining.keys())
    finite = set()
    for v in starts:
        finite |= nx.node_connected_component(graph, v)
    clash = finite & set(protected)
    if clash:
        raise GammaHatInfinite(f"The part split off at {starts[0]} contains {sorted(clash)[0]}.")
    frontier = sorted(x for x in finite if quiver.is_boundary(x))
    if frontier:
        raise GammaHatInfinite(f"The part split off at {starts[0]} reaches the boundary at {frontier[0]}.")
    logger.debug("Split off %d vertices behind %d cut arrows", len(finite), len(cut))
    return frozenset(finite), cut


class Patch:
    """
    New part of a translation quiver, glued in by `build`.

    Parameters
    ----------
    quiver : `~arquiver.tquiver.TranslationQuiver`
        The quiver being operated on.
    tag : `str`
        Suffix of the new vertex ids.
    """

    def __init__(self, quiver, tag):
        self.quiver = quiver
        self.tag = str(tag)
        self.cells = {}
        self.new = {}
        self.entries = []
        self.arrows = []
        self.dropped = []
        self.tau = {}
        self.removed = frozenset()

    def vid(self, stem):
        return f"{stem}@{self.tag}"

    def label(self, vertex_id):
        if vertex_id in self.new:
            return self.new[vertex_id][0]
        return self.quiver.label(vertex_id)

    def cell(self, i, j):
        return self.cells.get((i, j))

    def place(self, i, j, vertex_id):
        """Put an existing vertex on the grid."""
        self.cells[(i, j)] = vertex_id

    def create(self, stem, kind, label, i, j, parents=(), boundary=False, on_grid=True, index=None):
        """Add a new vertex; ``index`` overrides ``(i, j)`` in the ledger."""
        vertex_id = self.vid(stem)
        if vertex_id in self.quiver or vertex_id in self.new:
            raise ShapeMismatch(f"Vertex id {vertex_id} is already taken.")
        self.new[vertex_id] = (label, boundary, (i, j))
        li, lj = index if index is not None else (i, j)
        self.entries.append(LedgerEntry(vertex_id, kind, li, lj, label, tuple(parents), self.tag))
        if on_grid:
            self.cells[(i, j)] = vertex_id
        return vertex_id

    def arrow(self, source, target):
        self.arrows.append((source, target))

    def drop(self, source, target):
        self.dropped.append((source, target))

    def connect(self):
        """Grid arrows and translations of the cells, wherever one end is new."""
        for (i, j), x in self.cells.items():
            for key in ((i + 1, j), (i, j + 1)):
                y = self.cells.get(key)
                if y is not None and (x in self.new or y in self.new):
                    self.arrows.append((x, y))
            below = self.cells.get((i - 1, j - 1))
            if x in self.new and below is not None:
                self.tau[x] = below

    def rewire(self, xs, primes, start=0):
        """
        Hand the meshes of ``tau^-1 X_i`` over to ``X'_i``.

        ``tau' (tau^-1 X_i) = X'_i`` and the arrow ``X_{i+1} -> tau^-1 X_i`` is
        replaced by ``X'_{i+1} -> tau^-1 X_i``.
        """
        for i in range(start, len(xs)):
            v = self.quiver.translate_inverse(xs[i])
            if v is None or v in self.removed or i not in primes:
                continue
            self.tau[v] = primes[i]
            if i + 1 < len(xs) and i + 1 in primes:
                self.drop(xs[i + 1], v)
                self.arrow(primes[i + 1], v)

    def build(self, name=None):
        """
        The new translation quiver.

        Existing vertices that become translates lose their injective flag. New
        vertices are projective when they get no translate and injective when
        they are no translate and not on the boundary.

        Raises
        ------
        `~arquiver.exceptions.ShapeMismatch`
            An arrow to be replaced is missing or the result breaks the
            structure of a translation quiver.
        """
        q, removed = self.quiver, self.removed
        arrows = [(s, t) for s, t in q.arrows if s not in removed and t not in removed]
        for arrow in self.dropped:
            try:
                arrows.remove(arrow)
            except ValueError:
                raise ShapeMismatch(f"Expected an arrow {arrow[0]} -> {arrow[1]}.") from None
        arrows.extend(self.arrows)
        tau = {x: y for x, y in q.tau.items() if x not in removed and y not in removed}
        tau.update(self.tau)
        images = set(tau.values())
        vertices = []
        for x in q.vertices:
            if x in removed:
                continue
            v = q.vertex(x)
            if v.injective and x in images:
                v = replace(v, injective=False)
            vertices.append(v)
        for x, (label, boundary, coord) in self.new.items():
            vertices.append(
                TVertex(
                    x,
                    label,
                    projective=x not in tau,
                    injective=x not in images and not boundary,
                    boundary=boundary,
                    coord=coord,
                )
            )
        try:
            return TranslationQuiver(vertices, arrows, tau, name=name or q.name)
        except InvalidTranslationQuiver as err:
            raise ShapeMismatch(f"The surgery does not give a translation quiver: {err}") from err

    def rectangle(self, xs, columns, side_row, omega_label, first_row=0, finite=False):
        """
        Create the cells ``Z_ij`` and the column ``X'_i`` beside the row of ``xs``.

        ``Z_ij`` sits at ``(i, j)`` for ``first_row <= i`` and ``1 <= j <= columns``
        with label ``X_i + L_j + e``, where ``L_j`` is the label of the cell
        ``(side_row, j)``; ``X'_i`` sits at ``(i, columns + 1)``. On a finite
        path an extra row holds ``Y'_j`` and ``W``.

        Returns
        -------
        `dict`
            Row index to the id of ``X'_i``.
        """
        m = len(xs) - 1
        side = {j: self.cell(side_row, j) for j in range(1, columns + 1)}
        primes = {}
        for i in range(first_row, m + 1):
            x_label = self.quiver.label(xs[i])
            boundary = i == m and not finite
            for j in range(1, columns + 1):
                label = add_labels(x_label, self.label(side[j]), omega_label)
                self.create(f"Z({i},{j})", "Z", label, i, j, (xs[i], side[j]), boundary)
            primes[i] = self.create(f"X'({i})", "X'", add_labels(x_label, omega_label), i, columns + 1, (xs[i],), boundary)
        if finite:
            for j in range(1, columns + 1):
                self.create(f"Y'({j})", "Y'", add_labels(self.label(side[j]), omega_label), m + 1, j, (side[j],))
            self.create("W", "W", omega_label, m + 1, columns + 1)
        return primes
