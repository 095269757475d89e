"""
Path algebra subpackage: truncated path algebras over the rationals and
their finite-dimensional quotients.

Composition is right to left: ``x * y`` runs along ``y`` first, and an
element's text ``"a1 a1*"`` is the path that starts with ``a1*``.
"""

__all__ = [
    "PathWord",
    "WordSpace",
    "TruncatedElement",
    "multiply",
    "linear_combination",
    "parse_element",
    "format_element",
    "RelationSet",
    "BasisLabel",
    "FinDimAlgebra",
    "cartan_matrix",
    "corner_algebra",
    "Module",
    "simple_module",
    "projective_module",
    "restrict_module",
    "quotient_algebra",
    "ideal_span",
    "saturated_span",
    "minimal_relations_defect",
]

from .algebra import (
    BasisLabel,
    FinDimAlgebra,
    Module,
    cartan_matrix,
    corner_algebra,
    projective_module,
    restrict_module,
    simple_module,
)
from .elements import (
    TruncatedElement,
    format_element,
    linear_combination,
    multiply,
    parse_element,
)
from .quotient import (
    ideal_span,
    minimal_relations_defect,
    quotient_algebra,
    saturated_span,
)
from .relations import RelationSet
from .words import PathWord, WordSpace
