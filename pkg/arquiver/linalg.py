"""
Exact linear algebra over the rationals.

Thin helpers around `sympy.polys.matrices.DomainMatrix` over ``QQ``. Shapes with
a zero dimension are handled here so callers never special-case empty spaces.
"""

from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = [
    "add",
    "block_diagonal",
    "column",
    "coordinates",
    "determinant",
    "entries",
    "hstack",
    "identity",
    "inverse",
    "is_zero",
    "matmul",
    "matrix",
    "nullspace",
    "qq_rows",
    "rank",
    "rref",
    "scale",
    "solve_in_span",
    "sub",
    "to_fraction",
    "to_qq",
    "transpose",
    "vstack",
    "zeros",
]


def to_qq(value):
    """
    Convert an int, `~fractions.Fraction` or rational string such as ``"-2/3"`` to ``QQ``.
    """
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def to_fraction(value):
    """Convert a ``QQ`` element back to `~fractions.Fraction`."""
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def matrix(rows, shape=None):
    """
    Build a ``QQ`` matrix from nested rows of exact scalars.

    Parameters
    ----------
    rows : `list` of `list`
        Row-major entries; ints, fractions or rational strings.
    shape : `tuple`, optional
        Needed only when ``rows`` is empty, e.g. ``(0, 3)``.
    """
    rows = [[to_qq(x) for x in row] for row in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise ValueError(f"Rows do not match the declared shape {shape}.")
    return DomainMatrix(rows, shape, QQ)


def zeros(nrows, ncols):
    return DomainMatrix([[QQ(0)] * ncols for _ in range(nrows)], (nrows, ncols), QQ)


def identity(n):
    return DomainMatrix([[QQ(int(i == j)) for j in range(n)] for i in range(n)], (n, n), QQ)


def column(values):
    """A column vector."""
    return matrix([[v] for v in values], (len(values), 1))


def entries(m):
    """Rows of ``m`` as lists of `~fractions.Fraction`."""
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return [[] for _ in range(nrows)]
    return [[to_fraction(x) for x in row] for row in m.to_list()]


def qq_rows(m):
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return [[] for _ in range(nrows)]
    return [list(row) for row in m.to_list()]


def is_zero(m):
    return all(x == 0 for row in qq_rows(m) for x in row)


def transpose(m):
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return zeros(ncols, nrows)
    return m.transpose()


def matmul(a, b):
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Cannot multiply shapes {a.shape} and {b.shape}.")
    if 0 in (a.shape[0], a.shape[1], b.shape[1]):
        return zeros(a.shape[0], b.shape[1])
    return a * b


def add(a, b):
    if a.shape != b.shape:
        raise ValueError(f"Cannot add shapes {a.shape} and {b.shape}.")
    if 0 in a.shape:
        return a
    return a + b


def sub(a, b):
    if a.shape != b.shape:
        raise ValueError(f"Cannot subtract shapes {a.shape} and {b.shape}.")
    if 0 in a.shape:
        return a
    return a - b


def scale(m, c):
    c = to_qq(c)
    return DomainMatrix([[c * x for x in row] for row in qq_rows(m)], m.shape, QQ)


def rref(m):
    """
    Reduced row echelon form.

    Returns
    -------
    `tuple`
        ``(R, pivots)`` where ``R`` is a list of rows of ``QQ`` elements with
        unit pivots and ``pivots`` the tuple of pivot columns.
    """
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return [], ()
    reduced, pivots = m.rref()
    rows = [list(row) for row in reduced.to_list()]
    for k, p in enumerate(pivots):
        lead = rows[k][p]
        if lead != 1:
            rows[k] = [x / lead for x in rows[k]]
    return rows[: len(pivots)], tuple(pivots)


def rank(m):
    return len(rref(m)[1])


def nullspace(m):
    """
    Basis of ``{v : m v = 0}`` as a list of lists of ``QQ`` elements.

    Each free column ``f`` contributes the vector with ``v[f] = 1`` and
    ``v[p_k] = -R[k][f]`` on the pivot columns.
    """
    ncols = m.shape[1]
    rows, pivots = rref(m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [QQ(0)] * ncols
        v[f] = QQ(1)
        for k, p in enumerate(pivots):
            v[p] = -rows[k][f]
        basis.append(v)
    return basis


def solve_in_span(vectors, target):
    """
    Coefficients expressing ``target`` in the span of ``vectors``.

    Parameters
    ----------
    vectors : `list`
        Spanning vectors, each a list of scalars of common length.
    target : `list`
        The vector to express.

    Returns
    -------
    `list` or `None`
        Coefficients (one per spanning vector, free variables set to zero) or
        `None` when ``target`` is not in the span.
    """
    n = len(target)
    if not vectors:
        return [] if all(to_qq(x) == 0 for x in target) else None
    aug = matrix([[vec[i] for vec in vectors] + [target[i]] for i in range(n)], (n, len(vectors) + 1))
    rows, pivots = rref(aug)
    if len(vectors) in pivots:
        return None
    coeffs = [QQ(0)] * len(vectors)
    for k, p in enumerate(pivots):
        coeffs[p] = rows[k][-1]
    return coeffs


def coordinates(vectors, target):
    """Like `solve_in_span` but raises when ``target`` is outside the span."""
    coeffs = solve_in_span(vectors, target)
    if coeffs is None:
        raise ValueError("Vector does not lie in the given span.")
    return coeffs


def hstack(*blocks):
    nrows = blocks[0].shape[0]
    if any(b.shape[0] != nrows for b in blocks):
        raise ValueError("Blocks must share the number of rows.")
    ncols = sum(b.shape[1] for b in blocks)
    raws = [qq_rows(b) for b in blocks]
    rows = [[x for raw in raws for x in raw[i]] for i in range(nrows)]
    return DomainMatrix(rows, (nrows, ncols), QQ)


def vstack(*blocks):
    ncols = blocks[0].shape[1]
    if any(b.shape[1] != ncols for b in blocks):
        raise ValueError("Blocks must share the number of columns.")
    rows = [row for b in blocks for row in qq_rows(b)]
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def block_diagonal(*blocks):
    nrows = sum(b.shape[0] for b in blocks)
    ncols = sum(b.shape[1] for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for row in qq_rows(b):
            rows.append([QQ(0)] * offset + row + [QQ(0)] * (ncols - offset - b.shape[1]))
        offset += b.shape[1]
    return DomainMatrix(rows, (nrows, ncols), QQ)


def inverse(m):
    if m.shape[0] != m.shape[1]:
        raise ValueError("Only square matrices can be inverted.")
    if m.shape[0] == 0:
        return m
    return m.inv()


def determinant(m):
    if m.shape[0] != m.shape[1]:
        raise ValueError("Only square matrices have a determinant.")
    if m.shape[0] == 0:
        return QQ(1)
    return m.det()
