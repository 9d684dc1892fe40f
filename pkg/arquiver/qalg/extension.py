"""
One-point extensions and coextensions.

The extension ``A[M]`` adds a source ``w`` with one arrow ``w -> i`` per top
generator of ``M`` at ``i``. Its relations come from the top generators of the
first syzygy of ``M``, written in the path coordinates of the projective cover.
"""

import logging
from dataclasses import dataclass

from arquiver import linalg
from arquiver.config import resolve
from arquiver.exceptions import AlgebraMismatch
from arquiver.qalg.algebra import compute_path_basis
from arquiver.qalg.quiver import Arrow, Path, Quiver, Relation
from arquiver.reps.homological import syzygy_with_inclusion, top_generators
from arquiver.reps.representation import Representation, dual

__all__ = [
    "ExtensionData",
    "fresh_vertex",
    "one_point_coextension",
    "one_point_coextension_data",
    "one_point_extension",
    "one_point_extension_data",
    "point_module",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionData:
    """
    Bookkeeping of a one-point extension or coextension.

    Attributes
    ----------
    algebra : `~arquiver.qalg.BoundQuiverAlgebra`
        The new algebra.
    base : `~arquiver.qalg.BoundQuiverAlgebra`
        The algebra that was extended.
    vertex : `str`
        The new vertex.
    module : `~arquiver.reps.Representation`
        The module extended by (over ``base``, or over its opposite for a coextension).
    arrows : `tuple`
        ``(arrow id, vertex, generator vector)`` for each new arrow.
    coextension : `bool`
    """

    algebra: object
    base: object
    vertex: str
    module: object
    arrows: tuple
    coextension: bool = False


def fresh_vertex(vertices, prefix=None):
    """Smallest ``prefix + k`` not in ``vertices``."""
    prefix = resolve(prefix, "extension_prefix")
    taken = set(vertices)
    k = 0
    while f"{prefix}{k}" in taken:
        k += 1
    return f"{prefix}{k}"


def _arrow_names(vertex, generators, coextension):
    counts, names = {}, []
    for v, _ in generators:
        counts[v] = counts.get(v, 0) + 1
    seen = {}
    for v, _ in generators:
        base = f"{v}>{vertex}" if coextension else f"{vertex}>{v}"
        if counts[v] > 1:
            seen[v] = seen.get(v, 0) + 1
            base = f"{base}#{seen[v]}"
        names.append(base)
    return names


def _extension(algebra, module, vertex, coextension):
    if module.algebra is not algebra:
        raise AlgebraMismatch("The module must live over the algebra being extended.")
    if vertex is None:
        vertex = fresh_vertex(algebra.vertices)
    if vertex in algebra.vertices:
        raise ValueError(f"Vertex {vertex!r} already exists.")
    omega, cover, inclusion = syzygy_with_inclusion(module)
    names = _arrow_names(vertex, cover.generators, coextension)
    arrows = [Arrow(name, vertex, v) for name, (v, _) in zip(names, cover.generators)]
    quiver = Quiver((vertex,) + algebra.vertices, algebra.quiver.arrows + tuple(arrows))

    relations = []
    for w, vec in top_generators(omega):
        # coordinates of the generator inside P_0 at w
        embedded = linalg.matmul(inclusion[w], linalg.column(vec))
        terms = []
        for (k, p), c in zip(cover.labels[w], (row[0] for row in linalg.qq_rows(embedded))):
            if c != 0:
                terms.append((linalg.to_fraction(c), Path(vertex, (names[k],) + p.arrows, w)))
        relations.append(Relation(tuple(terms)))
    new = compute_path_basis(quiver, list(algebra.relations) + relations, length_cap=algebra.length_cap + 1)
    logger.debug("One-point extension at %s: %d arrows, %d new relations", vertex, len(arrows), len(relations))
    data = tuple((name, v, tuple(vec)) for name, (v, vec) in zip(names, cover.generators))
    return new, data, vertex


def one_point_extension_data(algebra, module, vertex=None):
    """
    Compute ``A[M]`` and keep the data needed to build its new modules.

    Returns
    -------
    `ExtensionData`
    """
    new, arrows, vertex = _extension(algebra, module, vertex, coextension=False)
    return ExtensionData(new, algebra, vertex, module, arrows)


def one_point_extension(algebra, module, vertex=None):
    """
    The one-point extension ``A[M]`` with a new source vertex.

    Examples
    --------
    >>> from arquiver.qalg import triangular_matrix_algebra
    >>> from arquiver.reps import simple
    >>> a2 = triangular_matrix_algebra(2)
    >>> one_point_extension(a2, simple(a2, "2"), vertex="w").dimension
    5
    """
    return one_point_extension_data(algebra, module, vertex).algebra


def one_point_coextension_data(algebra, module, vertex=None):
    """
    Compute ``[M]A`` as the opposite of the extension of ``A^op`` by ``D M``.

    The arrows of the new sink are named ``"i>w"``.
    """
    if vertex is None:
        vertex = fresh_vertex(algebra.vertices)
    new_op, arrows, vertex = _extension(algebra.opposite(), dual(module), vertex, coextension=True)
    reversed_quiver = new_op.quiver.opposite()
    new = compute_path_basis(
        reversed_quiver, [r.reversed() for r in new_op.relations], length_cap=new_op.length_cap
    )
    new._opposite = new_op
    new_op._opposite = new
    return ExtensionData(new, algebra, vertex, dual(module), arrows, coextension=True)


def one_point_coextension(algebra, module, vertex=None):
    """The one-point coextension ``[M]A`` with a new sink vertex."""
    return one_point_coextension_data(algebra, module, vertex).algebra


def point_module(data, target, components, name=None):
    """
    The module ``(K, X, f)`` of a one-point extension.

    Parameters
    ----------
    data : `ExtensionData`
        An extension (not a coextension).
    target : `~arquiver.reps.Representation`
        The module ``X`` over the base algebra.
    components : `dict`
        Vertex to the matrix of a homomorphism ``f: M -> X`` at that vertex.
        Each new arrow acts by ``f`` applied to its generator.
    name : `str`, optional

    Returns
    -------
    `~arquiver.reps.Representation`
    """
    if data.coextension:
        raise ValueError("Point modules of coextensions are built over the opposite algebra.")
    if target.algebra is not data.base:
        raise AlgebraMismatch("The target module must live over the extended algebra.")
    dims = dict(target.dims)
    dims[data.vertex] = 1
    maps = dict(target.maps)
    for arrow_id, v, vec in data.arrows:
        f = components.get(v)
        if f is None:
            f = linalg.zeros(target.dims[v], len(vec))
        elif not hasattr(f, "domain"):
            f = linalg.matrix(f, (target.dims[v], len(vec)))
        maps[arrow_id] = linalg.matmul(f, linalg.column(list(vec)))
    return Representation(data.algebra, dims, maps, name=name)

