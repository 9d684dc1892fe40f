"""
Finite translation quivers with a partial translation and truncation flags.

Arrows carry the trivial valuation; a repeated ``(source, target)`` pair is a
multiple arrow. Vertices flagged ``boundary`` lie on the truncation frontier:
the mesh condition is not asked of them and anything that would need to look
past them is reported as truncation dependent.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field, replace

import networkx as nx

from arquiver.exceptions import InvalidTranslationQuiver
from arquiver.verdict import Verdict

__all__ = ["TVertex", "TranslationQuiver", "add_labels", "label_additivity_check", "make_label", "mesh_check"]

logger = logging.getLogger(__name__)


def make_label(dims):
    """
    Normalise a dimension vector given as a mapping into a sorted tuple of pairs.

    Zero entries are dropped, so two labels compare equal exactly when the
    vectors are equal.
    """
    if dims is None:
        return None
    items = dims.items() if hasattr(dims, "items") else dims
    return tuple(sorted((str(v), int(n)) for v, n in items if int(n) != 0))


def add_labels(*labels):
    """Sum of labels; `None` if any summand is unknown."""
    total = Counter()
    for label in labels:
        if label is None:
            return None
        for v, n in label:
            total[v] += n
    return make_label(total)


@dataclass(frozen=True)
class TVertex:
    """
    A vertex of a translation quiver.

    Parameters
    ----------
    id : `str`
    label : `tuple`, optional
        Dimension vector as sorted ``(vertex, multiplicity)`` pairs, see `make_label`.
    projective, injective, boundary : `bool`
    coord : `tuple`, optional
        Position used for layout, e.g. ``(n, l)`` in a tube; ignored by comparisons.
    """

    id: str
    label: tuple = None
    projective: bool = False
    injective: bool = False
    boundary: bool = False
    coord: tuple = field(default=None, compare=False)

    @property
    def dims(self):
        return dict(self.label) if self.label is not None else None

    def flags(self):
        return [name for name in ("projective", "injective", "boundary") if getattr(self, name)]


class TranslationQuiver:
    """
    A finite translation quiver.

    Parameters
    ----------
    vertices : iterable of `TVertex`
    arrows : iterable of ``(source, target)`` pairs
        A pair listed twice is a double arrow.
    tau : `dict`, optional
        The translation, ``x -> tau x``.
    name : `str`, optional
    check : `bool`, optional
        Verify the structural invariants; the mesh condition is checked
        separately by `mesh_check`.

    Raises
    ------
    `~arquiver.exceptions.InvalidTranslationQuiver`
        An arrow or translation leaves the vertex set, the translation is not
        injective, is defined on a projective vertex or hits an injective one.
    """

    def __init__(self, vertices, arrows=(), tau=None, name=None, check=True):
        self.name = name
        self._vertices = {}
        for v in vertices:
            if v.id in self._vertices:
                raise InvalidTranslationQuiver(f"Vertex {v.id!r} is declared twice.")
            self._vertices[v.id] = v
        self._arrows = tuple((str(s), str(t)) for s, t in arrows)
        self.tau = dict(tau or {})
        if check:
            self._check()
        self.tau_inverse = {y: x for x, y in self.tau.items()}
        self.graph = nx.MultiDiGraph()
        self.graph.add_nodes_from(self._vertices)
        for s, t in self._arrows:
            self.graph.add_edge(s, t)

    def _check(self):
        known = self._vertices
        for s, t in self._arrows:
            if s not in known or t not in known:
                raise InvalidTranslationQuiver(f"Arrow {s} -> {t} leaves the vertex set.")
        images = {}
        for x, y in self.tau.items():
            if x not in known or y not in known:
                raise InvalidTranslationQuiver(f"Translation {x} -> {y} leaves the vertex set.")
            if known[x].projective:
                raise InvalidTranslationQuiver(f"The translation is defined on the projective vertex {x}.")
            if known[y].injective:
                raise InvalidTranslationQuiver(f"The injective vertex {y} is a translate of {x}.")
            if y in images:
                raise InvalidTranslationQuiver(f"The translation is not injective: {images[y]} and {x} both map to {y}.")
            images[y] = x

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<TranslationQuiver{label}: {len(self._vertices)} vertices, {len(self._arrows)} arrows>"

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, vertex_id):
        return vertex_id in self._vertices

    def __eq__(self, other):
        return (
            isinstance(other, TranslationQuiver)
            and self._vertices == other._vertices
            and Counter(self._arrows) == Counter(other._arrows)
            and self.tau == other.tau
        )

    __hash__ = None

    @property
    def vertices(self):
        """Vertex ids in declaration order."""
        return tuple(self._vertices)

    @property
    def arrows(self):
        return self._arrows

    def vertex(self, vertex_id):
        try:
            return self._vertices[vertex_id]
        except KeyError:
            raise InvalidTranslationQuiver(f"Unknown vertex {vertex_id!r}.") from None

    def label(self, vertex_id):
        return self.vertex(vertex_id).label

    def predecessors(self, vertex_id):
        """Sources of the arrows into ``vertex_id``, with multiplicity."""
        return [s for s, _ in self.graph.in_edges(vertex_id)]

    def successors(self, vertex_id):
        """Targets of the arrows out of ``vertex_id``, with multiplicity."""
        return [t for _, t in self.graph.out_edges(vertex_id)]

    def translate(self, vertex_id):
        """``tau x``, or `None` where the translation is undefined."""
        return self.tau.get(vertex_id)

    def translate_inverse(self, vertex_id):
        return self.tau_inverse.get(vertex_id)

    def is_projective(self, vertex_id):
        return self.vertex(vertex_id).projective

    def is_injective(self, vertex_id):
        return self.vertex(vertex_id).injective

    def is_boundary(self, vertex_id):
        return self.vertex(vertex_id).boundary

    def interior(self):
        """Vertices that are not on the truncation frontier."""
        return [v for v, data in self._vertices.items() if not data.boundary]

    def subquiver(self, vertex_ids, name=None):
        """The full translation subquiver on ``vertex_ids``; the translation is kept where both ends survive."""
        keep = set(vertex_ids)
        vertices = [v for k, v in self._vertices.items() if k in keep]
        arrows = [(s, t) for s, t in self._arrows if s in keep and t in keep]
        tau = {x: y for x, y in self.tau.items() if x in keep and y in keep}
        return TranslationQuiver(vertices, arrows, tau, name=name or self.name, check=False)

    def replaced(self, vertices=None, arrows=None, tau=None, name=None, check=True):
        """A copy with some of the parts swapped out."""
        return TranslationQuiver(
            self._vertices.values() if vertices is None else vertices,
            self._arrows if arrows is None else arrows,
            self.tau if tau is None else tau,
            name=name or self.name,
            check=check,
        )

    def with_flags(self, vertex_id, **flags):
        """A copy where the flags of one vertex are updated."""
        vertices = [replace(v, **flags) if k == vertex_id else v for k, v in self._vertices.items()]
        return self.replaced(vertices=vertices)


def mesh_check(quiver):
    """
    Check the mesh condition off the boundary.

    At every vertex ``x`` that is neither projective nor on the boundary the
    translation must be defined and the multiset of predecessors of ``x`` must
    equal the multiset of successors of ``tau x``.

    Returns
    -------
    `~arquiver.verdict.Verdict`
        ``witnesses["failures"]`` lists ``(vertex, predecessors, expected)``.
    """
    failures = []
    checked = 0
    for x in quiver.interior():
        if quiver.is_projective(x):
            continue
        checked += 1
        tx = quiver.translate(x)
        preds = sorted(quiver.predecessors(x))
        if tx is None:
            failures.append((x, preds, None))
            continue
        expected = sorted(quiver.successors(tx))
        if preds != expected:
            failures.append((x, preds, expected))
    if failures:
        logger.debug("Mesh condition fails at %d of %d vertices", len(failures), checked)
        x = failures[0][0]
        detail = f"mesh fails at {x}" if failures[0][2] is not None else f"{x} is not projective but has no translate"
        return Verdict(False, "mesh", {"failures": failures, "checked": checked}, detail=detail)
    return Verdict(True, "mesh", {"checked": checked})


def label_additivity_check(quiver):
    """
    Check ``label(x) + label(tau x) = sum of the labels of the predecessors of x``.

    Vertices checked by `mesh_check` whose mesh carries an unlabelled vertex are skipped.
    """
    failures = []
    checked = 0
    for x in quiver.interior():
        tx = quiver.translate(x)
        if quiver.is_projective(x) or tx is None:
            continue
        left = add_labels(quiver.label(x), quiver.label(tx))
        right = add_labels(*[quiver.label(p) for p in quiver.predecessors(x)])
        if left is None or right is None:
            continue
        checked += 1
        if left != right:
            failures.append((x, dict(left), dict(right)))
    if failures:
        return Verdict(
            False, "label_additivity", {"failures": failures, "checked": checked}, detail=f"labels not additive at {failures[0][0]}"
        )
    return Verdict(True, "label_additivity", {"checked": checked})
