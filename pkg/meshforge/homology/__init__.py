"""
Homology subpackage: Auslander algebras of full translation quivers, their
stable quotients, resolutions of simples and Ext tables.
"""

__all__ = [
    "AuslanderPresentation",
    "auslander_algebra",
    "mesh_relations",
    "stable_algebra",
    "stable_presentation",
    "k0_rank",
    "Resolution",
    "mesh_resolution",
    "min_proj_resolution",
    "ExtTable",
    "ext_table",
    "cy_duality_check",
    "cy_fraction",
    "serre_image",
    "serre_orbit_check",
    "euler_form",
]

from .auslander import (
    AuslanderPresentation,
    auslander_algebra,
    k0_rank,
    mesh_relations,
    stable_algebra,
    stable_presentation,
)
from .ext import (
    ExtTable,
    cy_duality_check,
    cy_fraction,
    euler_form,
    ext_table,
    serre_image,
    serre_orbit_check,
)
from .resolutions import Resolution, mesh_resolution, min_proj_resolution
