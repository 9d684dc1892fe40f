"""
Finite quivers, paths and relations, and the line-oriented quiver file format.

Paths are always written in traversal order: the first arrow listed is the
first arrow walked. A relation written ``γα`` in composition notation, that is
``α`` followed by ``γ``, is therefore stored and written as ``a g``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import networkx as nx

from arquiver.exceptions import MalformedRelation, ParseError

__all__ = [
    "Arrow",
    "Path",
    "Quiver",
    "Relation",
    "format_quiver",
    "format_relation",
    "parse_quiver",
    "parse_relation",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """
    A path of a quiver.

    Parameters
    ----------
    source : `str`
        Starting vertex.
    arrows : `tuple` of `str`
        Arrow ids in traversal order; empty for the trivial path ``e_source``.
    target : `str`
        Final vertex.
    """

    source: str
    arrows: tuple
    target: str

    @classmethod
    def trivial(cls, vertex):
        return cls(vertex, (), vertex)

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    def then(self, other):
        """Concatenate: walk ``self`` first, then ``other``."""
        if self.target != other.source:
            raise ValueError(f"Path {self} does not compose with {other}.")
        return Path(self.source, self.arrows + other.arrows, other.target)

    def reversed(self):
        return Path(self.target, tuple(reversed(self.arrows)), self.source)

    def __str__(self):
        if self.is_trivial:
            return f"e_{self.source}"
        return " ".join(self.arrows)


@dataclass(frozen=True)
class Relation:
    """
    A linear combination of parallel paths.

    Parameters
    ----------
    terms : `tuple`
        Pairs ``(coefficient, Path)`` with `~fractions.Fraction` coefficients.
    """

    terms: tuple

    @property
    def source(self):
        return self.terms[0][1].source

    @property
    def target(self):
        return self.terms[0][1].target

    @property
    def paths(self):
        return [p for _, p in self.terms]

    def reversed(self):
        return Relation(tuple((c, p.reversed()) for c, p in self.terms))

    def __str__(self):
        return format_relation(self)


class Quiver:
    """
    A finite quiver with opaque string ids.

    Parameters
    ----------
    vertices : iterable of `str`
        Vertex ids, in the order used for every vertex-indexed matrix.
    arrows : iterable of `Arrow` or ``(id, source, target)`` triples
    """

    def __init__(self, vertices, arrows=()):
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("Vertex ids must be unique.")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("Arrow ids must be unique.")
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise ValueError(f"Arrow {a.id} joins undeclared vertices {a.source} -> {a.target}.")
        self._arrow = {a.id: a for a in self.arrows}

    def __eq__(self, other):
        return isinstance(other, Quiver) and (self.vertices, self.arrows) == (other.vertices, other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    @cached_property
    def vertex_index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def graph(self):
        """The quiver as a `networkx.MultiDiGraph` keyed by arrow id."""
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.source, a.target, key=a.id)
        return g

    def arrow(self, arrow_id):
        try:
            return self._arrow[arrow_id]
        except KeyError:
            raise ValueError(f"Unknown arrow {arrow_id!r}.") from None

    def arrows_from(self, vertex):
        return [a for a in self.arrows if a.source == vertex]

    def arrows_to(self, vertex):
        return [a for a in self.arrows if a.target == vertex]

    def arrows_between(self, source, target):
        return [a for a in self.arrows if a.source == source and a.target == target]

    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.graph)

    def path(self, arrow_ids, vertex=None):
        """
        Build a `Path` from arrow ids in traversal order.

        ``vertex`` is required for the trivial path.
        """
        arrow_ids = tuple(arrow_ids)
        if not arrow_ids:
            if vertex is None:
                raise ValueError("A trivial path needs its vertex.")
            return Path.trivial(vertex)
        arrows = [self.arrow(i) for i in arrow_ids]
        for prev, curr in zip(arrows, arrows[1:]):
            if prev.target != curr.source:
                raise ValueError(f"Arrows {prev.id} and {curr.id} do not compose.")
        return Path(arrows[0].source, arrow_ids, arrows[-1].target)

    def paths(self, max_length, source=None, target=None):
        """
        All paths of length at most ``max_length``, shortest first.
        """
        frontier = [Path.trivial(v) for v in self.vertices if source is None or v == source]
        found = []
        for _ in range(max_length + 1):
            found.extend(p for p in frontier if target is None or p.target == target)
            frontier = [Path(p.source, p.arrows + (a.id,), a.target) for p in frontier for a in self.arrows_from(p.target)]
        return found

    def paths_ending_at(self, vertex, max_length):
        frontier = [Path.trivial(vertex)]
        found = []
        for _ in range(max_length + 1):
            found.extend(frontier)
            frontier = [Path(a.source, (a.id,) + p.arrows, p.target) for p in frontier for a in self.arrows_to(p.source)]
        return found

    def opposite(self):
        return Quiver(self.vertices, [Arrow(a.id, a.target, a.source) for a in self.arrows])

    def subquiver(self, vertices):
        keep = [v for v in self.vertices if v in set(vertices)]
        return Quiver(keep, [a for a in self.arrows if a.source in set(keep) and a.target in set(keep)])

    def check_relation(self, relation):
        """
        Raise `MalformedRelation` unless ``relation`` combines parallel paths of length at least two.
        """
        if not relation.terms:
            raise MalformedRelation("A relation needs at least one term.")
        if all(c == 0 for c, _ in relation.terms):
            raise MalformedRelation(f"Relation {relation} has only zero coefficients.")
        ends = {(p.source, p.target) for _, p in relation.terms}
        if len(ends) != 1:
            raise MalformedRelation(f"Relation {relation} combines paths with different endpoints.")
        for _, p in relation.terms:
            if len(p) < 2:
                raise MalformedRelation(f"Relation {relation} has the term {p} of length below two.")
            try:
                rebuilt = self.path(p.arrows)
            except ValueError as err:
                raise MalformedRelation(f"Relation {relation}: {err}") from err
            if rebuilt != p:
                raise MalformedRelation(f"Relation {relation}: term {p} has wrong endpoints.")


def _is_coefficient(token):
    try:
        Fraction(token)
    except (ValueError, ZeroDivisionError):
        return False
    return True


def parse_relation(quiver, text):
    """
    Parse the right hand side of a ``rel :`` line, e.g. ``"a b - 2/3 c d"``.

    Arrow ids must not themselves read as rationals.
    """
    tokens = text.split()
    if not tokens:
        raise MalformedRelation("Empty relation.")
    terms = []
    sign, coeff, arrows = 1, None, []

    def close():
        if not arrows:
            raise MalformedRelation(f"Relation term without arrows in {text!r}.")
        value = sign * (coeff if coeff is not None else Fraction(1))
        try:
            path = quiver.path(arrows)
        except ValueError as err:
            raise MalformedRelation(f"{err} (in {text!r})") from err
        terms.append((value, path))

    for token in tokens:
        if token in ("+", "-"):
            if arrows:
                close()
            elif coeff is not None:
                raise MalformedRelation(f"Dangling coefficient in {text!r}.")
            sign = -1 if token == "-" else 1
            coeff, arrows = None, []
        elif not arrows and coeff is None and _is_coefficient(token):
            coeff = Fraction(token)
        else:
            arrows.append(token)
    close()
    relation = Relation(tuple(terms))
    quiver.check_relation(relation)
    return relation


def format_relation(relation):
    parts = []
    for k, (c, p) in enumerate(relation.terms):
        if c < 0:
            parts.append("-")
        elif k > 0:
            parts.append("+")
        if abs(c) != 1:
            parts.append(str(abs(c)))
        parts.append(str(p))
    return " ".join(parts)


def parse_quiver(text):
    """
    Parse the quiver file format.

    Lines are ``vertex <id>``, ``arrow <id> : <src> -> <tgt>`` and
    ``rel : <terms>``; ``#`` starts a comment.

    Returns
    -------
    `tuple`
        ``(Quiver, list of Relation)``
    """
    vertices, arrows, pending = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "vertex":
            if not rest or " " in rest:
                raise ParseError(f"bad vertex declaration {raw!r}", lineno)
            vertices.append(rest)
        elif keyword == "arrow":
            name, sep, ends = rest.partition(":")
            src, arrow_sep, tgt = ends.partition("->")
            if not sep or not arrow_sep or not name.strip() or not src.strip() or not tgt.strip():
                raise ParseError(f"bad arrow declaration {raw!r}", lineno)
            arrows.append(Arrow(name.strip(), src.strip(), tgt.strip()))
        elif keyword == "rel":
            if not rest.startswith(":"):
                raise ParseError(f"bad relation {raw!r}", lineno)
            pending.append((lineno, rest[1:]))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    if not vertices:
        raise ParseError("no vertices declared")
    try:
        quiver = Quiver(vertices, arrows)
    except ValueError as err:
        raise ParseError(str(err)) from err
    relations = []
    for lineno, body in pending:
        try:
            relations.append(parse_relation(quiver, body))
        except MalformedRelation as err:
            raise ParseError(str(err), lineno) from err
    logger.debug("Parsed quiver with %d vertices, %d arrows, %d relations", len(vertices), len(arrows), len(relations))
    return quiver, relations


def format_quiver(quiver, relations=(), header=None):
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(f"vertex {v}" for v in quiver.vertices)
    lines.extend(f"arrow {a.id} : {a.source} -> {a.target}" for a in quiver.arrows)
    lines.extend(f"rel : {format_relation(r)}" for r in relations)
    return "\n".join(lines) + "\n"
