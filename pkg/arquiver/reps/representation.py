"""
Finite dimensional representations of bound quivers over the rationals.
"""

import logging

from arquiver import linalg
from arquiver.exceptions import AlgebraMismatch, InvalidRepresentation
from arquiver.verdict import Verdict

__all__ = [
    "Representation",
    "dimension_vector",
    "direct_sum",
    "dual",
    "extend_to",
    "injective",
    "is_sincere",
    "projective",
    "restrict_to",
    "simple",
    "subrepresentation",
    "support",
    "thin_module",
    "validate",
    "zero_representation",
]

logger = logging.getLogger(__name__)


class Representation:
    """
    A representation ``(M_i, M_a)`` of a bound quiver.

    Parameters
    ----------
    algebra : `~arquiver.qalg.BoundQuiverAlgebra`
    dims : `dict`
        Vertex id to dimension; missing vertices have dimension 0.
    maps : `dict`
        Arrow id to a ``QQ`` matrix of shape ``(dims[target], dims[source])``
        (a `~sympy.polys.matrices.DomainMatrix` or nested rows). Missing arrows act by zero.
    name : `str`, optional
    check : `bool`, optional
        Raise `~arquiver.exceptions.InvalidRepresentation` on shape or relation failures.
    """

    def __init__(self, algebra, dims, maps=None, name=None, check=True):
        self.algebra = algebra
        self.name = name
        unknown = set(dims) - set(algebra.vertices)
        if unknown:
            raise InvalidRepresentation(f"Dimensions given for unknown vertices {sorted(unknown)}.")
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        if any(d < 0 for d in self.dims.values()):
            raise InvalidRepresentation("Dimensions must be nonnegative.")
        maps = dict(maps or {})
        unknown = set(maps) - {a.id for a in algebra.quiver.arrows}
        if unknown:
            raise InvalidRepresentation(f"Matrices given for unknown arrows {sorted(unknown)}.")
        self.maps = {}
        for a in algebra.quiver.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = maps.get(a.id)
            if m is None:
                m = linalg.zeros(*shape)
            elif not hasattr(m, "shape") or not hasattr(m, "domain"):
                m = linalg.matrix(m, shape)
            if m.shape != shape:
                raise InvalidRepresentation(f"Matrix of arrow {a.id} has shape {m.shape}, expected {shape}.")
            self.maps[a.id] = m
        self._syzygies = None
        if check:
            verdict = validate(self)
            if not verdict:
                raise InvalidRepresentation(verdict.detail, relation=verdict.witnesses.get("relation"))

    def __repr__(self):
        label = self.name or "Representation"
        return f"<{label} dim {self.dimension_tuple}>"

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and other.algebra is self.algebra
            and other.dims == self.dims
            and all(linalg.entries(self.maps[a]) == linalg.entries(other.maps[a]) for a in self.maps)
        )

    def __hash__(self):
        return hash((id(self.algebra), self.dimension_tuple))

    @property
    def dimension_tuple(self):
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def total_dimension(self):
        return sum(self.dims.values())

    def is_zero(self):
        return self.total_dimension == 0

    def path_matrix(self, path):
        """Action of a path, composing arrow matrices in traversal order."""
        m = linalg.identity(self.dims[path.source])
        for arrow_id in path.arrows:
            m = linalg.matmul(self.maps[arrow_id], m)
        return m

    def evaluate(self, relation):
        d_s, d_t = self.dims[relation.source], self.dims[relation.target]
        total = linalg.zeros(d_t, d_s)
        for c, p in relation.terms:
            total = linalg.add(total, linalg.scale(self.path_matrix(p), c))
        return total

    def renamed(self, name):
        rep = Representation(self.algebra, self.dims, self.maps, name=name, check=False)
        rep._syzygies = self._syzygies
        return rep


def validate(module):
    """
    Check matrix shapes and that every relation acts by zero.

    Returns
    -------
    `~arquiver.verdict.Verdict`
        Fails with the offending relation as witness.
    """
    for a in module.algebra.quiver.arrows:
        shape = (module.dims[a.target], module.dims[a.source])
        if module.maps[a.id].shape != shape:
            return Verdict(False, "validate", {"arrow": a.id}, detail=f"arrow {a.id} has a matrix of the wrong shape")
    for rel in module.algebra.relations:
        if not linalg.is_zero(module.evaluate(rel)):
            return Verdict(False, "validate", {"relation": str(rel)}, detail=f"relation {rel} does not vanish")
    return Verdict(True, "validate")


def dimension_vector(module):
    return dict(module.dims)


def support(module):
    return {v for v, d in module.dims.items() if d}


def is_sincere(module):
    return all(module.dims.values())


def zero_representation(algebra):
    return Representation(algebra, {}, check=False)


def _same_algebra(*modules):
    algebra = modules[0].algebra
    if any(m.algebra is not algebra for m in modules):
        raise AlgebraMismatch("Modules live over different algebras.")
    return algebra


def direct_sum(*modules, name=None):
    algebra = _same_algebra(*modules)
    dims = {v: sum(m.dims[v] for m in modules) for v in algebra.vertices}
    maps = {a: linalg.block_diagonal(*[m.maps[a] for m in modules]) for a in modules[0].maps}
    if name is None:
        name = " + ".join(m.name or "?" for m in modules)
    return Representation(algebra, dims, maps, name=name, check=False)


def projective(algebra, vertex):
    """
    The indecomposable projective ``P_vertex``, spanned by the basis paths starting at ``vertex``.

    An arrow ``a`` acts on a basis path ``p`` by the normal form of ``p`` followed by ``a``.
    """
    paths = {v: [p for p in algebra.basis_from(vertex) if p.target == v] for v in algebra.vertices}
    position = {v: {p: k for k, p in enumerate(ps)} for v, ps in paths.items()}
    maps = {}
    for a in algebra.quiver.arrows:
        rows = [[0] * len(paths[a.source]) for _ in paths[a.target]]
        for col, p in enumerate(paths[a.source]):
            step = algebra.quiver.path([a.id])
            for q, c in algebra.multiply(p, step).items():
                rows[position[a.target][q]][col] = c
        maps[a.id] = linalg.matrix(rows, (len(paths[a.target]), len(paths[a.source])))
    dims = {v: len(ps) for v, ps in paths.items()}
    module = Representation(algebra, dims, maps, name=f"P_{vertex}", check=False)
    module.basis_paths = paths
    return module


def dual(module, name=None):
    """The dual ``D M = Hom_K(M, K)``, a representation of the opposite algebra."""
    opposite = module.algebra.opposite()
    maps = {a: linalg.transpose(m) for a, m in module.maps.items()}
    return Representation(opposite, module.dims, maps, name=name or (f"D({module.name})" if module.name else None), check=False)


def injective(algebra, vertex):
    """The indecomposable injective ``I_vertex`` as the dual of a projective of the opposite algebra."""
    return dual(projective(algebra.opposite(), vertex), name=f"I_{vertex}")


def simple(algebra, vertex):
    if vertex not in algebra.vertices:
        raise ValueError(f"Unknown vertex {vertex!r}.")
    return Representation(algebra, {vertex: 1}, name=f"S_{vertex}", check=False)


def thin_module(algebra, vertices, arrows=None, name=None):
    """
    One dimensional spaces on ``vertices`` and identity maps on ``arrows``.

    ``arrows`` defaults to every arrow between two vertices of the support.
    """
    vertices = {str(v) for v in vertices}
    if arrows is None:
        arrows = [a.id for a in algebra.quiver.arrows if a.source in vertices and a.target in vertices]
    maps = {}
    for arrow_id in arrows:
        a = algebra.quiver.arrow(arrow_id)
        if a.source not in vertices or a.target not in vertices:
            raise InvalidRepresentation(f"Arrow {arrow_id} leaves the support of the thin module.")
        maps[arrow_id] = [[1]]
    return Representation(algebra, {v: 1 for v in vertices}, maps, name=name)


def subrepresentation(module, bases, name=None):
    """
    The subrepresentation spanned at each vertex by the columns of ``bases[v]``.

    Parameters
    ----------
    module : `Representation`
    bases : `dict`
        Vertex to a matrix of shape ``(module.dims[v], k_v)`` with independent columns.

    Returns
    -------
    `tuple`
        ``(Representation, inclusion)``, the inclusion given per vertex by ``bases``.

    Raises
    ------
    `ValueError`
        The columns are not stable under the arrows.
    """
    algebra = module.algebra
    bases = {v: bases.get(v, linalg.zeros(module.dims[v], 0)) for v in algebra.vertices}
    columns = {v: [list(col) for col in zip(*linalg.qq_rows(b))] if b.shape[1] else [] for v, b in bases.items()}
    maps = {}
    for a in algebra.quiver.arrows:
        image = linalg.matmul(module.maps[a.id], bases[a.source])
        image_cols = [list(col) for col in zip(*linalg.qq_rows(image))] if image.shape[1] and image.shape[0] else []
        target_cols = columns[a.target]
        k_s, k_t = bases[a.source].shape[1], bases[a.target].shape[1]
        rows = [[0] * k_s for _ in range(k_t)]
        for j in range(k_s):
            vec = image_cols[j] if image_cols else [0] * module.dims[a.target]
            coeffs = linalg.solve_in_span(target_cols, vec)
            if coeffs is None:
                raise ValueError(f"Subspace is not stable under arrow {a.id}.")
            for i, c in enumerate(coeffs):
                rows[i][j] = c
        maps[a.id] = linalg.matrix(rows, (k_t, k_s))
    dims = {v: b.shape[1] for v, b in bases.items()}
    return Representation(algebra, dims, maps, name=name, check=False), bases


def extend_to(module, algebra, name=None):
    """Pad ``module`` by zero onto a larger algebra containing its bound quiver."""
    missing = set(module.algebra.vertices) - set(algebra.vertices)
    if missing:
        raise AlgebraMismatch(f"Target algebra lacks vertices {sorted(missing)}.")
    maps = {}
    for a in module.algebra.quiver.arrows:
        b = algebra.quiver.arrow(a.id)
        if (b.source, b.target) != (a.source, a.target):
            raise AlgebraMismatch(f"Arrow {a.id} has different endpoints in the target algebra.")
        maps[a.id] = module.maps[a.id]
    return Representation(algebra, module.dims, maps, name=name or module.name)


def restrict_to(module, algebra, name=None):
    """Restrict ``module`` to a full subcategory given as an algebra on a subset of vertices."""
    dims = {v: module.dims[v] for v in algebra.vertices}
    maps = {a.id: module.maps[a.id] for a in algebra.quiver.arrows}
    return Representation(algebra, dims, maps, name=name or module.name)
