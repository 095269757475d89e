"""
Koszul subpackage: the dual bar construction of augmented dg algebras and
its cohomology, an independent computation of Ext between simples.
"""

__all__ = [
    "AugmentedDgAlgebra",
    "KoszulPresentation",
    "KoszulCohomology",
    "Generator",
    "bar_boundary",
    "koszul_dual",
    "koszul_cohomology",
    "check_d_squared",
]

from .augmented import AugmentedDgAlgebra
from .dual import (
    Generator,
    KoszulCohomology,
    KoszulPresentation,
    bar_boundary,
    check_d_squared,
    koszul_cohomology,
    koszul_dual,
)
