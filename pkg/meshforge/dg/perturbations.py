"""
Perturbations of the mesh differential.

Replacing ``d(rho_i)`` by ``c_i d(rho_i) + sum p d(rho_j) q`` with ``c_i``
nonzero and ``p`` or ``q`` in the arrow ideal gives an isomorphic dg
algebra, so every dimension computed from it must be unchanged.
"""
import json
import os
from typing import Dict, List, NamedTuple, Sequence, Tuple

from meshforge.exceptions import (
    DgPresentationError,
    IncompatibleEndpointsError,
    NonUnitScalarError,
)
from meshforge.path_algebra import TruncatedElement, parse_element
from meshforge.utils import parse_rational

from .presentation import DgPresentation

DATA_FILE = os.path.join(
    os.path.dirname(os.path.dirname(__file__)), "data", "perturbations.json"
)


class PaddingTerm(NamedTuple):
    """``p d(rho_j) q`` with ``q: i -> j`` and ``p: tau^-1(j) -> tau^-1(i)``."""

    p: str
    j: str
    q: str


class Perturbation(NamedTuple):
    """New differential of ``rho_<vertex>``."""

    vertex: str
    scalar: object = 1
    terms: Tuple[PaddingTerm, ...] = ()


class PerturbationCase(NamedTuple):
    """A named list of perturbations for one ADE generator."""

    name: str
    family: str
    index: int
    krull_dim: int
    perturbations: Tuple[Perturbation, ...]


def perturb_gamma(dg: DgPresentation, perturbations: Sequence[Perturbation]) -> DgPresentation:
    """
    Presentation with the differentials of the listed ``rho_i`` perturbed.

    All padding terms use the unperturbed differentials.

    Raises
    ------
    NonUnitScalarError
        A scalar is zero.
    IncompatibleEndpointsError
        ``p`` or ``q`` runs between the wrong vertices, or both have a
        trivial word.
    DgPresentationError
        A vertex has no degree -1 generator.
    """
    quiver = dg.quiver
    bound = dg.bound
    diff: Dict[str, TruncatedElement] = dict(dg.diff)

    for item in perturbations:
        item = Perturbation(*item)
        g = _rho(dg, item.vertex)
        c = parse_rational(item.scalar)
        if c == 0:
            raise NonUnitScalarError(f"Scalar for vertex '{item.vertex}' is zero")

        new = dg.differential_of(g).scale(c)
        for term in item.terms:
            p_text, j, q_text = PaddingTerm(*term)
            rho_j = _rho(dg, j)
            p = parse_element(quiver, p_text, bound)
            q = parse_element(quiver, q_text, bound)
            _check_term(dg, item.vertex, j, p, q)
            new = new + p * dg.differential_of(rho_j) * q
        diff[g] = new

    return dg.replace(diff=diff)


def _rho(dg, vertex_id):
    try:
        return dg.rho[vertex_id]
    except KeyError as e:
        raise DgPresentationError(f"No degree -1 generator at '{vertex_id}'") from e


def _check_term(dg, i, j, p, q):
    target_i = dg.quiver.arrow(dg.rho[i]).tgt
    target_j = dg.quiver.arrow(dg.rho[j]).tgt
    if q.is_zero() or q.endpoints != {(i, j)}:
        raise IncompatibleEndpointsError(f"q must run {i} -> {j}")
    if p.is_zero() or p.endpoints != {(target_j, target_i)}:
        raise IncompatibleEndpointsError(f"p must run {target_j} -> {target_i}")
    if p.min_length + q.min_length < 1:
        raise IncompatibleEndpointsError("p or q must lie in the arrow ideal")


def load_perturbations(path=None) -> List[PerturbationCase]:
    """Perturbation cases shipped in ``meshforge/data/perturbations.json``."""
    with open(path or DATA_FILE, "r", encoding="utf-8") as f:
        data = json.load(f)
    cases = []
    for case in data:
        perturbations = tuple(
            Perturbation(
                str(item["vertex"]),
                item.get("scalar", 1),
                tuple(PaddingTerm(t["p"], str(t["j"]), t["q"]) for t in item.get("terms", [])),
            )
            for item in case["perturbations"]
        )
        cases.append(
            PerturbationCase(
                case["name"], case["family"], case["index"], case["krull_dim"], perturbations
            )
        )
    return cases
