"""Cohomology of dg path algebras: H^0 and truncated windows."""
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from meshforge.complexes import Complex, cohomology_dims
from meshforge.constants import SOLID
from meshforge.exceptions import MeshforgeValueError
from meshforge.linalg import domain_matrix
from meshforge.logging import get_logger
from meshforge.path_algebra import (
    FinDimAlgebra,
    RelationSet,
    TruncatedElement,
    WordSpace,
    quotient_algebra,
)

from .presentation import DgPresentation, apply_differential, rebase

logger = get_logger(__name__)


class CohomologyDim(NamedTuple):
    """``dim H^n`` at the bound and whether it agreed with the bound below."""

    dim: int
    stabilized: bool


def h0(dg: DgPresentation, L_max: int, window: int = 2, budget=None) -> FinDimAlgebra:
    """
    ``H^0`` as the quotient of the degree 0 path algebra by the images
    ``d(rho)`` of the degree -1 generators.
    """
    solid = dg.quiver.degree_part(SOLID)
    relations = RelationSet(
        (g, rebase(x, solid))
        for g, x in dg.diff.items()
        if dg.quiver.arrow(g).degree == -1
    )
    return quotient_algebra(solid, relations, L_max, window=window, budget=budget)


def _truncated_window(dg, degrees, bound, budget) -> Dict[int, int]:
    """
    ``H^n`` of the quotient complex of words of length at most `bound`.

    Words longer than the bound form a subcomplex because no generator's
    differential shortens words, so the truncation is a complex; it splits
    into one complex per ``(src, tgt)`` block.
    """
    low, high = min(degrees) - 1, max(degrees) + 1
    space = WordSpace(dg.quiver, bound, budget)
    blocks: Dict[Tuple[str, str], Dict[int, List]] = {}
    for w in space:
        deg = w.degree
        if low <= deg <= high:
            blocks.setdefault((w.src, w.tgt), {}).setdefault(deg, []).append(w)

    totals = {n: 0 for n in degrees}
    for by_degree in blocks.values():
        index = {n: {w: k for k, w in enumerate(ws)} for n, ws in by_degree.items()}
        components = {n: len(ws) for n, ws in by_degree.items()}
        diffs = {}
        for n in range(low, high):
            sources = by_degree.get(n, [])
            targets = index.get(n + 1, {})
            if not sources or not targets:
                continue
            rows: Dict[int, Dict[int, object]] = {}
            for col, w in enumerate(sources):
                image = apply_differential(dg, TruncatedElement.from_word(w, bound))
                for v, c in image.terms.items():
                    rows.setdefault(targets[v], {})[col] = c
            diffs[n] = domain_matrix(rows, (len(targets), len(sources)))
        dims = cohomology_dims(Complex(components, diffs))
        for n in degrees:
            totals[n] += dims.get(n, 0)
    return totals


def dg_cohomology_dims(
    dg: DgPresentation,
    degrees: Iterable[int],
    L: Optional[int] = None,
    budget=None,
) -> Dict[int, CohomologyDim]:
    """
    Dimensions of ``H^n`` for ``n`` in `degrees`, computed on words of
    length at most ``L`` and compared with ``L - 1``.

    Parameters
    ----------
    dg : :class:`DgPresentation`
    degrees : iterable of int
        Subset of ``[-4, 0]``.
    L : int, optional
        Defaults to the presentation's bound.
    """
    degrees = sorted(set(degrees))
    if not degrees or degrees[0] < -4 or degrees[-1] > 0:
        raise MeshforgeValueError(f"Degrees must lie in [-4, 0], got {degrees}")
    bound = dg.bound if L is None else L
    if bound < 1 or bound > dg.bound:
        raise MeshforgeValueError(f"Bound {bound} outside [1, {dg.bound}]")

    current = _truncated_window(dg, degrees, bound, budget)
    previous = _truncated_window(dg, degrees, bound - 1, budget)
    result = {n: CohomologyDim(current[n], current[n] == previous[n]) for n in degrees}
    for n, entry in result.items():
        if not entry.stabilized:
            logger.warning("H^%d has not stabilized at L=%d", n, bound)
    return result
