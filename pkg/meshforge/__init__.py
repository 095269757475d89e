"""Package to build and check dg Auslander algebras of ADE singularities."""
__all__ = [
    "ade_translation_quiver",
    "load_fixture",
    "dg_auslander",
    "h0",
    "auslander_algebra",
    "stable_algebra",
    "ext_table",
    "koszul_dual",
    "run_suite",
    "__version__",
    "__version_info__",
]

from .dg import dg_auslander, h0
from .homology import auslander_algebra, ext_table, stable_algebra
from .koszul import koszul_dual
from .quiver import ade_translation_quiver, load_fixture
from .suite import run_suite
from .version import __version__, __version_info__
