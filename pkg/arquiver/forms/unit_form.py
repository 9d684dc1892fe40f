"""
Integral quadratic forms stored by their upper triangular coefficient matrix.
"""

import logging

import numpy as np
from astropy.table import Table

__all__ = ["UnitForm", "evaluate"]

logger = logging.getLogger(__name__)


class UnitForm:
    r"""
    An integral quadratic form

    .. math::

        q(x) = \sum_i b_{ii} x_i^2 + \sum_{i < j} b_{ij} x_i x_j

    on the vertices of a quiver.

    Parameters
    ----------
    coeff : `numpy.ndarray`
        Square integer matrix. Only the upper triangle (diagonal included) is read.
    vertices : `tuple` of `str`, optional
        Vertex ids labelling the coordinates, defaults to ``"0", "1", ...``.
    name : `str`, optional

    Examples
    --------
    >>> kronecker = UnitForm([[1, -2], [0, 1]])
    >>> kronecker([1, 1]), kronecker([2, 1])
    (0, 1)
    """

    def __init__(self, coeff, vertices=None, name=None):
        coeff = np.asarray(coeff, dtype=np.int64)
        if coeff.ndim != 2 or coeff.shape[0] != coeff.shape[1]:
            raise ValueError(f"Coefficient matrix must be square, got shape {coeff.shape}.")
        self.coeff = np.triu(coeff)
        self.coeff.setflags(write=False)
        if vertices is None:
            vertices = [str(k) for k in range(coeff.shape[0])]
        self.vertices = tuple(vertices)
        if len(self.vertices) != self.n:
            raise ValueError(f"{len(self.vertices)} vertex ids given for a form of rank {self.n}.")
        self.name = name

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"<UnitForm {label}rank {self.n}>"

    def __eq__(self, other):
        return (
            isinstance(other, UnitForm)
            and other.vertices == self.vertices
            and np.array_equal(other.coeff, self.coeff)
        )

    def __hash__(self):
        return hash((self.vertices, self.coeff.tobytes()))

    def __call__(self, x):
        return evaluate(self, x)

    @property
    def n(self):
        return self.coeff.shape[0]

    @property
    def is_unit(self):
        return bool(np.all(np.diag(self.coeff) == 1))

    @property
    def gram(self):
        """Symmetric matrix ``G`` with ``q(x) = x G x^T / 2``."""
        return self.coeff + self.coeff.T

    def coefficient(self, first, second):
        """Coefficient of ``x_first x_second`` (of ``x_first^2`` when equal)."""
        index = {v: k for k, v in enumerate(self.vertices)}
        i, j = sorted((index[first], index[second]))
        return int(self.coeff[i, j])

    def permute(self, order):
        """
        The same form with its coordinates listed in ``order``.

        Parameters
        ----------
        order : `list` of `str`
            A permutation of ``vertices``.
        """
        if sorted(order) != sorted(self.vertices):
            raise ValueError("The new order must be a permutation of the vertices.")
        index = [self.vertices.index(v) for v in order]
        gram = self.gram[np.ix_(index, index)]
        coeff = np.triu(gram, k=1) + np.diag(np.diag(gram) // 2)
        return UnitForm(coeff, order, name=self.name)

    def as_table(self):
        """Coefficients as an `~astropy.table.Table` with one row per vertex."""
        table = Table()
        table["vertex"] = list(self.vertices)
        for k, v in enumerate(self.vertices):
            table[v] = self.coeff[:, k]
        if self.name:
            table.meta["name"] = self.name
        return table


def evaluate(form, x):
    """
    Evaluate ``form`` at the integer vector ``x``.

    Returns
    -------
    `int`
    """
    x = np.asarray(x, dtype=np.int64)
    if x.shape != (form.n,):
        raise ValueError(f"Expected a vector of length {form.n}, got shape {x.shape}.")
    return int(x @ form.coeff @ x)
