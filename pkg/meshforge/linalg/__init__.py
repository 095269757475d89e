"""
Exact linear algebra over the rationals.

Two tools live here: :class:`EchelonBasis`, an incrementally built sparse
echelon basis keyed by arbitrary sortable labels (used for ideal spans in
truncated path algebras), and thin helpers around sympy's ``DomainMatrix``
over ``QQ`` for ranks, RREF and kernels of explicit matrices.
"""
__all__ = [
    "EchelonBasis",
    "domain_matrix",
    "to_dod",
    "rank",
    "kernel_basis",
    "pivot_columns",
    "matmul",
    "is_zero_matrix",
    "to_qq",
    "from_qq",
]

from .echelon import EchelonBasis
from .matrices import (
    domain_matrix,
    from_qq,
    is_zero_matrix,
    kernel_basis,
    matmul,
    pivot_columns,
    rank,
    to_dod,
    to_qq,
)
