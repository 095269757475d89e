"""
Complexes subpackage: bounded complexes over the rationals, their cohomology
and the standard and brutal truncations.
"""

__all__ = [
    "Complex",
    "cohomology_dims",
    "std_truncate",
    "brutal_truncate",
    "random_complex",
]

from .complex import Complex, cohomology_dims
from .generators import random_complex
from .truncations import brutal_truncate, std_truncate
