"""
Bound quiver algebras ``KQ/I`` with an explicit path basis.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path as FilePath

import networkx as nx
import numpy as np

from arquiver import linalg
from arquiver.config import resolve
from arquiver.exceptions import NotAdmissible
from arquiver.qalg.quiver import Arrow, Quiver, Relation, format_quiver, parse_quiver
from arquiver.verdict import Verdict

__all__ = [
    "BoundQuiverAlgebra",
    "ConvexRestriction",
    "algebras_match",
    "compute_path_basis",
    "full_convex_subcategory",
    "linear_quiver_algebra",
    "load_algebra",
    "parse_algebra",
    "product",
    "triangular_matrix_algebra",
]

logger = logging.getLogger(__name__)


class BoundQuiverAlgebra:
    """
    A finite dimensional algebra ``KQ/I`` presented by a quiver and relations.

    Instances are produced by `compute_path_basis`, which certifies
    admissibility; they are not meant to be built directly.

    Attributes
    ----------
    quiver : `~arquiver.qalg.Quiver`
    relations : `tuple` of `~arquiver.qalg.Relation`
    basis : `tuple` of `~arquiver.qalg.Path`
        Residue classes of these paths form a basis of the algebra.
    certificate : `int`
        Smallest ``N`` such that every path of length ``N`` lies in the ideal.
    """

    def __init__(self, quiver, relations, basis, normal_forms, certificate, length_cap, name=None):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.basis = tuple(basis)
        self.certificate = certificate
        self.length_cap = length_cap
        self.name = name
        self._normal_forms = normal_forms
        self._opposite = None
        path_basis = defaultdict(list)
        for p in self.basis:
            path_basis[(p.source, p.target)].append(p)
        self.path_basis = dict(path_basis)

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"<BoundQuiverAlgebra {label}{len(self.vertices)} vertices, dim {self.dimension}>"

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def cartan(self):
        """
        Integer matrix whose entry ``[i, j]`` counts basis paths from vertex ``i`` to vertex ``j``.
        """
        index = self.quiver.vertex_index
        c = np.zeros((len(self.vertices), len(self.vertices)), dtype=np.int64)
        for p in self.basis:
            c[index[p.source], index[p.target]] += 1
        return c

    def basis_from(self, vertex):
        return [p for p in self.basis if p.source == vertex]

    def basis_to(self, vertex):
        return [p for p in self.basis if p.target == vertex]

    def is_triangular(self):
        return self.quiver.is_acyclic()

    def normal_form(self, path):
        """
        Express a path in the basis.

        Returns
        -------
        `dict`
            Basis `~arquiver.qalg.Path` to nonzero ``QQ`` coefficient.
        """
        if len(path) > self.length_cap:
            return {}
        if path in self._normal_forms:
            return dict(self._normal_forms[path])
        return {path: linalg.to_qq(1)}

    def reduce(self, terms):
        """Normal form of a combination given as pairs ``(coefficient, Path)``."""
        total = defaultdict(lambda: linalg.to_qq(0))
        for c, p in terms:
            c = linalg.to_qq(c)
            for q, d in self.normal_form(p).items():
                total[q] += c * d
        return {q: v for q, v in total.items() if v != 0}

    def multiply(self, first, second):
        """Normal form of ``first`` followed by ``second``; empty when they do not compose."""
        if first.target != second.source:
            return {}
        return self.normal_form(first.then(second))

    def is_zero(self, relation):
        return not self.reduce(relation.terms)

    def opposite(self):
        """The opposite algebra, with the same ids and every path reversed."""
        if self._opposite is None:
            opp = compute_path_basis(
                self.quiver.opposite(),
                [r.reversed() for r in self.relations],
                length_cap=self.length_cap,
                name=f"{self.name}^op" if self.name else None,
            )
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def to_text(self, header=None):
        return format_quiver(self.quiver, self.relations, header=header)


def _block_normal_forms(columns, generators):
    """
    Row reduce the generators of one ``(source, target)`` block.

    ``columns`` is sorted longest first, so pivots are the reducible paths and
    every normal form is written in shorter or equally long free paths.
    """
    position = {p: k for k, p in enumerate(columns)}
    rows = [[g.get(p, 0) for p in columns] for g in generators]
    reduced, pivots = linalg.rref(linalg.matrix(rows, (len(rows), len(columns))))
    pivot_set = set(pivots)
    forms = {}
    for k, pc in enumerate(pivots):
        forms[columns[pc]] = {
            columns[f]: -reduced[k][f] for f in range(len(columns)) if f not in pivot_set and reduced[k][f] != 0
        }
    free = [p for p in columns if position[p] not in pivot_set]
    return forms, free


def compute_path_basis(quiver, relations, length_cap=None, name=None):
    """
    Compute a path basis of ``KQ/I`` and certify that ``I`` is admissible.

    Parameters
    ----------
    quiver : `~arquiver.qalg.Quiver`
    relations : `list` of `~arquiver.qalg.Relation`
    length_cap : `int`, optional
        Longest path enumerated; defaults to ``conf.length_cap``.
    name : `str`, optional

    Returns
    -------
    `BoundQuiverAlgebra`

    Raises
    ------
    `~arquiver.exceptions.MalformedRelation`
        A relation is not a combination of parallel paths of length at least two.
    `~arquiver.exceptions.NotAdmissible`
        Some path of length ``length_cap`` survives the reduction.
    """
    cap = resolve(length_cap, "length_cap")
    if cap < 2:
        raise ValueError("length_cap must be at least 2.")
    relations = list(relations)
    for r in relations:
        quiver.check_relation(r)

    # multiples u rel v are used only when every term fits under the cap
    generators = defaultdict(list)
    for rel in relations:
        longest = max(len(p) for p in rel.paths)
        if longest > cap:
            logger.debug("Relation %s is longer than the cap %d and is not used", rel, cap)
            continue
        for u in quiver.paths_ending_at(rel.source, cap - longest):
            for v in quiver.paths(cap - longest - len(u), source=rel.target):
                g = {}
                for c, p in rel.terms:
                    q = u.then(p).then(v)
                    if c != 0:
                        g[q] = g.get(q, linalg.to_qq(0)) + linalg.to_qq(c)
                g = {q: c for q, c in g.items() if c != 0}
                if g:
                    generators[(u.source, v.target)].append(g)

    blocks = defaultdict(list)
    for p in quiver.paths(cap):
        blocks[(p.source, p.target)].append(p)

    normal_forms, basis = {}, []
    for key, paths in blocks.items():
        columns = sorted(paths, key=lambda p: (-len(p), p.arrows))
        if generators.get(key):
            forms, free = _block_normal_forms(columns, generators[key])
            normal_forms.update(forms)
        else:
            free = columns
        basis.extend(free)

    by_length = defaultdict(list)
    for p in quiver.paths(cap):
        by_length[len(p)].append(p)
    certificate = None
    for n in range(1, cap + 1):
        if all(p in normal_forms and not normal_forms[p] for p in by_length[n]):
            certificate = n
            break
    if certificate is None:
        witness = next(p for p in by_length[cap] if p not in normal_forms or normal_forms[p])
        raise NotAdmissible(
            f"The path {witness} of length {cap} does not vanish; the ideal is not admissible within the cap.",
            witness=witness,
        )

    index = quiver.vertex_index
    basis.sort(key=lambda p: (index[p.source], index[p.target], len(p), p.arrows))
    logger.debug("Path basis of dimension %d with certificate %d (cap %d)", len(basis), certificate, cap)
    return BoundQuiverAlgebra(quiver, relations, basis, normal_forms, certificate, cap, name=name)


def parse_algebra(text, length_cap=None, name=None):
    quiver, relations = parse_quiver(text)
    return compute_path_basis(quiver, relations, length_cap=length_cap, name=name)


def load_algebra(filename, length_cap=None):
    """Read a quiver file and compute its path basis."""
    filename = FilePath(filename)
    return parse_algebra(filename.read_text(), length_cap=length_cap, name=filename.stem)


def linear_quiver_algebra(vertices, length_cap=None):
    """The path algebra of the linear quiver through ``vertices``; arrows are named ``"i>j"``."""
    vertices = [str(v) for v in vertices]
    arrows = [Arrow(f"{a}>{b}", a, b) for a, b in zip(vertices, vertices[1:])]
    cap = max(resolve(length_cap, "length_cap"), len(vertices))
    return compute_path_basis(Quiver(vertices, arrows), [], length_cap=cap, name=f"A{len(vertices)}")


def triangular_matrix_algebra(r, length_cap=None):
    """
    The algebra of lower triangular ``r x r`` matrices, as the linear quiver on ``1..r``.

    Examples
    --------
    >>> triangular_matrix_algebra(3).dimension
    6
    """
    if r < 1:
        raise ValueError("The size of a triangular matrix algebra must be positive.")
    return linear_quiver_algebra([str(k) for k in range(1, r + 1)], length_cap=length_cap)


def product(first, second, name=None):
    """The product algebra, presented by the disjoint union of the bound quivers."""
    shared = set(first.vertices) & set(second.vertices)
    if shared:
        raise ValueError(f"Vertex ids {sorted(shared)} are used by both factors.")
    shared = {a.id for a in first.quiver.arrows} & {a.id for a in second.quiver.arrows}
    if shared:
        raise ValueError(f"Arrow ids {sorted(shared)} are used by both factors.")
    quiver = Quiver(first.vertices + second.vertices, first.quiver.arrows + second.quiver.arrows)
    return compute_path_basis(
        quiver,
        list(first.relations) + list(second.relations),
        length_cap=max(first.length_cap, second.length_cap),
        name=name,
    )


@dataclass(frozen=True)
class ConvexRestriction:
    """Result of `full_convex_subcategory`."""

    algebra: BoundQuiverAlgebra
    convex: bool
    witness: tuple = ()


def full_convex_subcategory(algebra, vertices):
    """
    Restrict ``algebra`` to a vertex subset and report whether the subset is convex.

    The restriction keeps the arrows inside the subset and the relations all of
    whose paths stay inside it. The subset is convex when no path of the quiver
    leaves it and comes back; ``witness`` is such a path when one exists.
    """
    keep = set(str(v) for v in vertices)
    if not keep:
        raise ValueError("The vertex subset must not be empty.")
    unknown = keep - set(algebra.vertices)
    if unknown:
        raise ValueError(f"Unknown vertices {sorted(unknown)}.")
    graph = nx.DiGraph(algebra.quiver.graph)
    witness = ()
    for w in algebra.vertices:
        if w in keep:
            continue
        before = nx.ancestors(graph, w) & keep
        after = nx.descendants(graph, w) & keep
        if before and after:
            start, end = min(before), min(after)
            witness = tuple(nx.shortest_path(graph, start, w)) + tuple(nx.shortest_path(graph, w, end)[1:])
            break
    sub = algebra.quiver.subquiver(keep)
    inside = {a.id for a in sub.arrows}
    relations = [r for r in algebra.relations if all(set(p.arrows) <= inside for p in r.paths)]
    restricted = compute_path_basis(sub, relations, length_cap=algebra.length_cap)
    return ConvexRestriction(restricted, not witness, witness)


def _arrow_pairing(source_quiver, target_quiver):
    mapping = {}
    for a in source_quiver.arrows:
        if a.id in mapping:
            continue
        theirs = sorted(x.id for x in source_quiver.arrows_between(a.source, a.target))
        ours = sorted(x.id for x in target_quiver.arrows_between(a.source, a.target))
        if len(theirs) != len(ours):
            return None
        if set(theirs) == set(ours):
            mapping.update({x: x for x in theirs})
        else:
            mapping.update(dict(zip(theirs, ours)))
    return mapping


def algebras_match(first, second):
    """
    Check that two presented algebras agree up to renaming parallel arrows.

    Vertices must coincide as sets, every vertex pair must carry the same
    number of arrows, the Cartan matrices must agree and every relation of
    ``second`` must vanish in ``first``.

    Returns
    -------
    `~arquiver.verdict.Verdict`
    """
    name = "algebras_match"
    if set(first.vertices) != set(second.vertices):
        missing = sorted(set(first.vertices) ^ set(second.vertices))
        return Verdict(False, name, {"vertices": missing}, detail="vertex sets differ")
    mapping = _arrow_pairing(second.quiver, first.quiver)
    if mapping is None or len(first.quiver.arrows) != len(second.quiver.arrows):
        return Verdict(False, name, detail="arrow multiplicities differ")
    order = [second.quiver.vertex_index[v] for v in first.vertices]
    if not np.array_equal(first.cartan, second.cartan[np.ix_(order, order)]):
        return Verdict(False, name, detail="Cartan matrices differ")
    for rel in second.relations:
        mapped = Relation(tuple((c, first.quiver.path([mapping[a] for a in p.arrows])) for c, p in rel.terms))
        if not first.is_zero(mapped):
            return Verdict(False, name, {"relation": str(rel)}, detail="a relation does not vanish")
    return Verdict(True, name, {"arrow_map": mapping})

