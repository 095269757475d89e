"""
dg subpackage: dg Auslander algebras of stable translation quivers, their
differential, cohomology and perturbations.
"""

__all__ = [
    "DgPresentation",
    "mesh_relation",
    "dg_auslander",
    "apply_differential",
    "check_d_squared",
    "rebase",
    "h0",
    "dg_cohomology_dims",
    "CohomologyDim",
    "perturb_gamma",
    "load_perturbations",
    "Perturbation",
    "PaddingTerm",
    "PerturbationCase",
]

from .cohomology import CohomologyDim, dg_cohomology_dims, h0
from .perturbations import (
    PaddingTerm,
    Perturbation,
    PerturbationCase,
    load_perturbations,
    perturb_gamma,
)
from .presentation import (
    DgPresentation,
    apply_differential,
    check_d_squared,
    dg_auslander,
    mesh_relation,
    rebase,
)
