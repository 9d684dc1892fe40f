"""
The Tits form and the Euler form of a bound quiver algebra.
"""

import logging

import numpy as np

from arquiver import linalg
from arquiver.config import resolve
from arquiver.exceptions import NotTriangular, SingularCartan
from arquiver.forms.unit_form import UnitForm
from arquiver.reps import ext_dim, global_dimension, simple
from arquiver.verdict import Verdict

__all__ = ["bilinear_euler", "euler_form", "gldim_le_2_implies_equal", "relation_counts", "tits_form"]

logger = logging.getLogger(__name__)


def relation_counts(algebra):
    """
    Integer matrix ``r`` with ``r[i, j] = dim Ext^2(S_i, S_j)``.

    This is the number of relations from ``i`` to ``j`` in a minimal generating
    set of the ideal, whatever relations the algebra was presented with.
    """
    simples = [simple(algebra, v) for v in algebra.vertices]
    n = len(simples)
    r = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            r[i, j] = ext_dim(simples[i], simples[j], 2)
    return r


def tits_form(algebra):
    """
    The Tits form ``q_A``.

    The coefficient of ``x_i x_j`` counts arrows between ``i`` and ``j`` with a
    minus sign and minimal relations between them with a plus sign.

    Raises
    ------
    `~arquiver.exceptions.NotTriangular`
        The quiver has an oriented cycle.

    Examples
    --------
    >>> from arquiver.qalg import triangular_matrix_algebra
    >>> tits_form(triangular_matrix_algebra(3)).coeff
    array([[ 1, -1,  0],
           [ 0,  1, -1],
           [ 0,  0,  1]])
    """
    if not algebra.is_triangular():
        raise NotTriangular(f"The Tits form needs a triangular algebra, {algebra.name or 'this one'} has a cycle.")
    index = algebra.quiver.vertex_index
    n = len(algebra.vertices)
    coeff = np.eye(n, dtype=np.int64)
    for a in algebra.quiver.arrows:
        i, j = sorted((index[a.source], index[a.target]))
        coeff[i, j] -= 1
    r = relation_counts(algebra)
    coeff += np.triu(r + r.T, k=1)
    if int(r.sum()) != len(algebra.relations):
        logger.warning(
            "%s is presented with %d relations but a minimal set has %d",
            algebra.name or "The algebra",
            len(algebra.relations),
            int(r.sum()),
        )
    return UnitForm(coeff, algebra.vertices, name=f"q({algebra.name})" if algebra.name else None)


def bilinear_euler(algebra, gldim_cap=None):
    """
    Matrix ``E`` of the Euler bilinear form, ``<x, y> = x E y^T``.

    Rows of the Cartan matrix are the dimension vectors of the
    indecomposable projectives, so ``E`` is its inverse.

    Raises
    ------
    `~arquiver.exceptions.InfiniteGlobalDimensionWithinCap`
    `~arquiver.exceptions.SingularCartan`
    """
    gldim = global_dimension(algebra, resolve(gldim_cap, "gldim_cap"))
    logger.debug("Global dimension %d certified for %s", gldim, algebra.name)
    cartan = algebra.cartan
    c = linalg.matrix(cartan.tolist(), cartan.shape)
    if linalg.determinant(c) == 0:
        raise SingularCartan("The Cartan matrix is singular.")
    inverse = linalg.entries(linalg.inverse(c))
    if any(x.denominator != 1 for row in inverse for x in row):
        raise SingularCartan("The inverse Cartan matrix is not integral.")
    return np.array([[int(x) for x in row] for row in inverse], dtype=np.int64).reshape(cartan.shape)


def euler_form(algebra, gldim_cap=None):
    """
    The Euler form ``chi_A(x) = <x, x>``.

    Raises
    ------
    `~arquiver.exceptions.InfiniteGlobalDimensionWithinCap`
        No simple module has a finite resolution certified within ``gldim_cap``.
    `~arquiver.exceptions.SingularCartan`
    """
    e = bilinear_euler(algebra, gldim_cap)
    coeff = np.triu(e + e.T, k=1) + np.diag(np.diag(e))
    return UnitForm(coeff, algebra.vertices, name=f"chi({algebra.name})" if algebra.name else None)


def gldim_le_2_implies_equal(algebra, gldim_cap=None):
    """
    Compare the Tits and Euler forms of an algebra of global dimension at most two.

    Returns
    -------
    `~arquiver.verdict.Verdict`
        Passes trivially, with ``applicable`` set to `False`, when the global
        dimension exceeds two.
    """
    gldim = global_dimension(algebra, resolve(gldim_cap, "gldim_cap"))
    if gldim > 2:
        return Verdict(True, "tits_equals_euler", {"gldim": gldim, "applicable": False}, detail=f"gl.dim {gldim} > 2")
    q, chi = tits_form(algebra), euler_form(algebra, gldim_cap)
    differ = [
        (q.vertices[i], q.vertices[j])
        for i, j in zip(*np.nonzero(q.coeff != chi.coeff))
    ]
    if differ:
        return Verdict(False, "tits_equals_euler", {"gldim": gldim, "coefficients": differ})
    return Verdict(True, "tits_equals_euler", {"gldim": gldim, "applicable": True})
