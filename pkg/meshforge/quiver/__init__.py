"""
Quiver subpackage: graded quivers, translation quivers and the ADE generators.

Everything here is immutable.  Paths are composed right to left: the
juxtaposition ``x y`` runs along ``y`` first.  Translation quivers are read
from and written to JSON with :func:`parse_quiver` / :func:`export_quiver`,
checked with :func:`validate_translation_quiver` and compared up to
isomorphism through :func:`canonical_form`.
"""

__all__ = [
    "Arrow",
    "Vertex",
    "GradedQuiver",
    "TranslationQuiver",
    "Violation",
    "ValidationReport",
    "validate_translation_quiver",
    "validate_graded_quiver",
    "parse_quiver",
    "load_quiver",
    "quiver_from_dict",
    "quiver_to_dict",
    "dump_quiver",
    "export_quiver",
    "canonical_form",
    "ade_translation_quiver",
    "curve_fixture",
    "dynkin_edges",
    "dynkin_cartan_matrix",
    "load_fixture",
    "list_fixtures",
]

from .canonical import canonical_form
from .export import export_quiver
from .families import (
    ade_translation_quiver,
    curve_fixture,
    dynkin_cartan_matrix,
    dynkin_edges,
)
from .fixtures import list_fixtures, load_fixture
from .graded import Arrow, GradedQuiver, Vertex
from .io import dump_quiver, load_quiver, parse_quiver, quiver_from_dict, quiver_to_dict
from .translation import (
    TranslationQuiver,
    ValidationReport,
    Violation,
    validate_graded_quiver,
    validate_translation_quiver,
)
