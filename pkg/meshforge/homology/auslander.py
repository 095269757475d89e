"""
Auslander algebras of full translation quivers and their stable quotients.
"""
from typing import Optional, Tuple

from meshforge.dg.presentation import mesh_relation, rebase
from meshforge.exceptions import NotStabilizedError, ValidationFailedError
from meshforge.logging import get_logger
from meshforge.path_algebra import (
    FinDimAlgebra,
    RelationSet,
    TruncatedElement,
    quotient_algebra,
)
from meshforge.quiver import TranslationQuiver, validate_translation_quiver
from meshforge.utils import dataclass

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class AuslanderPresentation:
    """
    The full translation quiver, its mesh relations and the truncated quotient.

    Attributes
    ----------
    full_tq : :class:`~meshforge.quiver.TranslationQuiver`
    relations : :class:`~meshforge.path_algebra.RelationSet`
        One relation ``m<i>`` per vertex with ``tau^{-1}(i)`` defined and a
        nonempty mesh.
    algebra : :class:`~meshforge.path_algebra.FinDimAlgebra`
    e : tuple of str
        The projective vertices.
    d : int
        Depth of the almost split sequences.
    """

    full_tq: TranslationQuiver
    relations: RelationSet
    algebra: FinDimAlgebra
    e: Tuple[str, ...]
    d: int = 1

    @property
    def non_projective_vertices(self) -> Tuple[str, ...]:
        return self.full_tq.non_projective_vertices


def mesh_relations(tq: TranslationQuiver, bound=2, quiver=None) -> RelationSet:
    """Mesh relations ``m<i>`` of every vertex where the mesh is nonempty."""
    relations = []
    for v in tq.vertex_ids:
        if tq.tau_inverse(v) is None:
            continue
        r = mesh_relation(tq, v, bound, quiver)
        if r.is_zero():
            logger.debug("Empty mesh at vertex %s", v)
            continue
        relations.append((f"m{v}", r))
    return RelationSet(relations)


def auslander_algebra(
    full_tq: TranslationQuiver,
    L_max: int,
    window: int = 2,
    budget: Optional[int] = None,
) -> AuslanderPresentation:
    """
    Path algebra of the full translation quiver modulo the mesh relations.

    Surface-type quivers give infinite-dimensional algebras; their truncation
    comes back with ``algebra.stabilized`` False.

    Raises
    ------
    ValidationFailedError
        The translation quiver breaks its laws.
    """
    report = validate_translation_quiver(full_tq)
    if not report.ok:
        raise ValidationFailedError(
            "; ".join(f"{v.rule}: {v.message}" for v in report.violations)
        )
    relations = mesh_relations(full_tq)
    algebra = quotient_algebra(
        full_tq.quiver, relations, L_max, window=window, budget=budget
    )
    logger.debug(
        "Auslander algebra: %d relations, dim %d, stabilized=%s",
        len(relations),
        algebra.dim,
        algebra.stabilized,
    )
    return AuslanderPresentation(
        full_tq,
        relations,
        algebra,
        tuple(full_tq.projective_vertices),
        full_tq.depth,
    )


def stable_presentation(ap: AuslanderPresentation):
    """
    Quiver and relations presenting ``A / AeA``.

    Returns
    -------
    quiver : :class:`~meshforge.quiver.GradedQuiver`
        Full subquiver on the non-projective vertices.
    relations : :class:`~meshforge.path_algebra.RelationSet`
        Mesh relations with every word through a projective vertex removed;
        relations that vanish are dropped.
    """
    tq = ap.full_tq
    keep = set(tq.non_projective_vertices)
    quiver = tq.quiver.full_subquiver(keep)
    relations = []
    for rel_id, r in ap.relations:
        if r.src not in keep or r.tgt not in keep:
            continue
        terms = {
            w: c for w, c in r.terms.items() if all(quiver.has_arrow(a) for a in w.arrows)
        }
        reduced = rebase(TruncatedElement(r.quiver, terms, r.bound), quiver)
        if not reduced.is_zero():
            relations.append((rel_id, reduced))
    return quiver, RelationSet(relations)


def stable_algebra(
    ap: AuslanderPresentation,
    L_max: Optional[int] = None,
    window: int = 2,
    budget: Optional[int] = None,
) -> FinDimAlgebra:
    """
    ``A / AeA`` for ``e`` the sum of the projective vertices.

    Computed as the quotient of the path algebra of the non-projective full
    subquiver by the mesh relations with every word through ``e`` removed.

    Parameters
    ----------
    ap : :class:`AuslanderPresentation`
    L_max : int, optional
        Defaults to the bound of ``ap.algebra`` (at least 2).

    Raises
    ------
    NotStabilizedError
    """
    quiver, relations = stable_presentation(ap)
    if L_max is None:
        L_max = max(2, ap.algebra.bound or 2)
    algebra = quotient_algebra(
        quiver, relations, L_max, window=window, budget=budget
    )
    if not algebra.stabilized:
        raise NotStabilizedError(
            f"Stable algebra did not stabilize up to L={L_max}; raise the bound"
        )
    return algebra


def k0_rank(ap) -> int:
    """Rank of the Grothendieck group of the singularity category: non-projective vertices."""
    tq = ap.full_tq if isinstance(ap, AuslanderPresentation) else ap
    return len(tq.non_projective_vertices)
