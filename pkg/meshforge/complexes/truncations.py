"""
Standard and brutal truncations.

``sigma<=i`` replaces ``C^i`` by ``ker d^i`` and drops higher degrees;
``sigma>i`` replaces ``C^i`` by ``C^i / ker d^i`` and drops lower degrees.
Kernel coordinates are the entries at the non-pivot columns of the RREF of
``d^i``; the quotient is spanned by the pivot columns.
"""
from meshforge.constants import TruncationSide
from meshforge.exceptions import MeshforgeValueError
from meshforge.linalg import domain_matrix, kernel_basis, pivot_columns, to_dod

from .complex import Complex


def _side(side, allowed):
    try:
        side = TruncationSide(side)
    except ValueError as e:
        raise MeshforgeValueError(f"Unknown truncation side: '{side}'") from e
    if side not in allowed:
        raise MeshforgeValueError(f"Side '{side}' not allowed here")
    return side


def std_truncate(m: Complex, i: int, side="leq") -> Complex:
    """
    Standard truncation ``sigma<=i`` (``side="leq"``) or ``sigma>i`` (``"gt"``).

    ``H^j`` of the result is ``H^j(m)`` on the kept side and zero elsewhere.
    """
    side = _side(side, (TruncationSide.LEQ, TruncationSide.GT))
    d_i = m.differential(i)
    dod = to_dod(d_i)

    if side == TruncationSide.LEQ:
        _, nonpivots = kernel_basis(d_i)
        components = {j: n for j, n in m.components.items() if j < i}
        components[i] = len(nonpivots)
        diffs = {j: d for j, d in m.differentials.items() if j < i - 1}
        if i - 1 in m.differentials:
            below = to_dod(m.differentials[i - 1])
            rows = {new: below.get(old, {}) for new, old in enumerate(nonpivots)}
            diffs[i - 1] = domain_matrix(rows, (len(nonpivots), m.dim(i - 1)))
        return Complex(components, diffs)

    pivots = pivot_columns(d_i)
    components = {j: n for j, n in m.components.items() if j > i}
    components[i] = len(pivots)
    diffs = {j: d for j, d in m.differentials.items() if j > i}
    if pivots:
        rows = {
            r: {new: row[old] for new, old in enumerate(pivots) if old in row}
            for r, row in dod.items()
        }
        diffs[i] = domain_matrix(rows, (m.dim(i + 1), len(pivots)))
    return Complex(components, diffs)


def brutal_truncate(m: Complex, i: int, side="geq") -> Complex:
    """
    Brutal truncation ``beta<=i`` (``side="leq"``) or ``beta>=i`` (``"geq"``).

    For every ``j``, ``dim beta>=i(m)^j + dim beta<=i-1(m)^j = dim m^j``.
    """
    side = _side(side, (TruncationSide.LEQ, TruncationSide.GEQ))
    if side == TruncationSide.LEQ:
        low, high = None, i
    else:
        low, high = i, None

    def keep(j):
        return (low is None or j >= low) and (high is None or j <= high)

    components = {j: n for j, n in m.components.items() if keep(j)}
    labels = {j: names for j, names in m.labels.items() if keep(j)}
    diffs = {j: d for j, d in m.differentials.items() if keep(j) and keep(j + 1)}
    return Complex(components, diffs, labels)
