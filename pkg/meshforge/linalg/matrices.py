"""Helpers around sympy ``DomainMatrix`` over ``QQ``."""

from gmpy2 import mpq
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def to_qq(value):
    """Convert an exact rational to a ``QQ`` element."""
    value = mpq(value)
    return QQ(int(value.numerator), int(value.denominator))


def from_qq(value):
    """Convert a ``QQ`` element back to ``mpq``."""
    return mpq(int(value.numerator), int(value.denominator))


def domain_matrix(entries, shape):
    """
    Build a sparse ``DomainMatrix`` over ``QQ``.

    Parameters
    ----------
    entries : dict
        Row index -> {column index -> rational}; zeros are dropped.
    shape : tuple of int
        (rows, columns).
    """
    rows = {}
    for i, row in entries.items():
        clean = {j: to_qq(c) for j, c in row.items() if c != 0}
        if clean:
            rows[i] = clean
    return DomainMatrix(rows, shape, QQ)


def to_dod(matrix):
    """Row index -> {column index -> mpq} view of a ``DomainMatrix``."""
    sdm = matrix.to_sparse().rep
    return {i: {j: from_qq(c) for j, c in row.items()} for i, row in sdm.items()}


def is_zero_matrix(matrix):
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return True
    return not any(row for row in matrix.to_sparse().rep.values())


def matmul(left, right):
    """Product of two matrices; empty inner dimensions give a zero matrix."""
    nrows, inner = left.shape
    _, ncols = right.shape
    if inner == 0 or nrows == 0 or ncols == 0:
        return DomainMatrix({}, (nrows, ncols), QQ)
    return left.to_sparse() * right.to_sparse()


def rank(matrix):
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return 0
    return matrix.to_sparse().rank()


def _rref(matrix):
    reduced, pivots = matrix.to_sparse().rref()
    return reduced.to_sparse().rep, list(pivots)


def pivot_columns(matrix):
    """Columns of the RREF pivots; the corresponding columns span the image."""
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return []
    _, pivots = _rref(matrix)
    return pivots


def kernel_basis(matrix):
    """
    Basis of the kernel of `matrix`, read off its RREF.

    Returns
    -------
    basis : list of dict
        One sparse column vector per non-pivot column ``j``; the vector has
        coefficient 1 at ``j`` and 0 at every other non-pivot column, so the
        coordinates of any kernel vector are its entries at the non-pivot columns.
    nonpivots : list of int
        The non-pivot columns, in increasing order.
    """
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return [{j: mpq(1)} for j in range(ncols)], list(range(ncols))

    reduced, pivots = _rref(matrix)
    pivot_set = set(pivots)
    row_of_pivot = {}
    for i, row in reduced.items():
        if row:
            row_of_pivot[min(row)] = i

    basis = []
    nonpivots = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        nonpivots.append(j)
        vec = {j: mpq(1)}
        for p in pivots:
            entry = reduced[row_of_pivot[p]].get(j)
            if entry:
                vec[p] = -from_qq(entry)
        basis.append(vec)
    return basis, nonpivots
