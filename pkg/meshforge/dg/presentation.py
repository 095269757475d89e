"""
dg Auslander algebras of stable translation quivers.

The graded quiver is the stable quiver plus one degree -1 arrow
``rho_i: i -> tau^{-1}(i)`` per vertex; the differential sends ``rho_i`` to
the mesh relation starting at ``i`` and every degree 0 arrow to zero.  It
extends to paths by the graded Leibniz rule
``d(xy) = d(x) y + (-1)^{|x|} x d(y)``.
"""
import json
from typing import Dict, Mapping, Optional

from gmpy2 import mpq

from meshforge.constants import DASHED, SOLID
from meshforge.exceptions import (
    BoundMismatchError,
    DgPresentationError,
    MeshUndefinedError,
    NotStableError,
    PairingMissingError,
    QuiverMismatchError,
    ValidationFailedError,
)
from meshforge.logging import get_logger
from meshforge.path_algebra import PathWord, TruncatedElement, format_element
from meshforge.quiver import (
    Arrow,
    GradedQuiver,
    TranslationQuiver,
    quiver_to_dict,
    validate_translation_quiver,
)

logger = get_logger(__name__)


class DgPresentation:
    """
    A dg path algebra: graded quiver, differential on generators, bound.

    Parameters
    ----------
    quiver : :class:`~meshforge.quiver.GradedQuiver`
    diff : mapping
        Arrow id -> :class:`~meshforge.path_algebra.TruncatedElement` over
        `quiver`; arrows not listed have zero differential.
    bound : int
        Word-length truncation of every element.
    tq : :class:`~meshforge.quiver.TranslationQuiver`, optional
        The stable translation quiver the presentation was built from.
    rho : mapping, optional
        Vertex id -> id of its degree -1 arrow.
    strict : bool, default=True
        Only allow arrow degrees 0 and -1.

    Raises
    ------
    DgPresentationError
        An image is not homogeneous of degree ``deg(g) + 1`` or runs between
        other endpoints than its generator.
    """

    __slots__ = ["quiver", "diff", "bound", "tq", "rho", "strict"]

    def __init__(
        self,
        quiver: GradedQuiver,
        diff: Mapping[str, TruncatedElement],
        bound: int,
        tq: Optional[TranslationQuiver] = None,
        rho: Optional[Mapping[str, str]] = None,
        strict: bool = True,
    ):
        self.quiver = quiver
        self.bound = bound
        self.tq = tq
        self.rho: Dict[str, str] = dict(rho or {})
        self.strict = strict
        self.diff: Dict[str, TruncatedElement] = {
            g: x.truncate(bound) for g, x in diff.items() if not x.is_zero()
        }
        _validate_presentation(self)

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} vertices={len(self.quiver.vertices)} "
            f"arrows={len(self.quiver.arrows)} L={self.bound}>"
        )

    def differential_of(self, arrow_id) -> TruncatedElement:
        """``d(g)`` for a generator, zero when none is stored."""
        self.quiver.arrow(arrow_id)
        if arrow_id in self.diff:
            return self.diff[arrow_id]
        return TruncatedElement.zero(self.quiver, self.bound)

    def solid_quiver(self) -> GradedQuiver:
        return self.quiver.degree_part(SOLID)

    def replace(self, **changes) -> "DgPresentation":
        fields = {
            "quiver": self.quiver,
            "diff": self.diff,
            "bound": self.bound,
            "tq": self.tq,
            "rho": self.rho,
            "strict": self.strict,
        }
        fields.update(changes)
        return DgPresentation(**fields)

    def to_dict(self) -> dict:
        data = quiver_to_dict(self.tq if self.tq is not None else self.quiver)
        data["arrows"] = quiver_to_dict(self.quiver)["arrows"]
        data["diff"] = {
            a.id: format_element(self.diff[a.id])
            for a in self.quiver.arrows
            if a.id in self.diff
        }
        return data

    def to_json(self) -> str:
        """Quiver JSON plus ``{"diff": {arrow id: element text}}``."""
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def _validate_presentation(dg):
    quiver = dg.quiver
    if dg.strict:
        for a in quiver.arrows:
            if a.degree not in (SOLID, DASHED):
                raise DgPresentationError(f"Arrow '{a.id}' has degree {a.degree}")
    for g, x in dg.diff.items():
        arrow = quiver.arrow(g)
        if x.quiver is not quiver and x.quiver != quiver:
            raise QuiverMismatchError(f"d({g}) lives over another quiver")
        if x.degrees() != {arrow.degree + 1}:
            raise DgPresentationError(
                f"d({g}) must be homogeneous of degree {arrow.degree + 1}"
            )
        if x.endpoints != {(arrow.src, arrow.tgt)}:
            raise DgPresentationError(
                f"d({g}) must run {arrow.src} -> {arrow.tgt}, got {sorted(x.endpoints)}"
            )
    for v, g in dg.rho.items():
        arrow = quiver.arrow(g)
        if arrow.src != v or arrow.degree != DASHED:
            raise DgPresentationError(f"'{g}' is not a degree -1 arrow out of '{v}'")


def rebase(x: TruncatedElement, quiver, bound=None) -> TruncatedElement:
    """The same combination of words, read over another quiver with the same arrows."""
    terms = {
        PathWord(w.arrows, w.src, w.tgt, quiver): c for w, c in x.terms.items()
    }
    return TruncatedElement(quiver, terms, x.bound if bound is None else bound)


def mesh_relation(tq: TranslationQuiver, i, bound=2, quiver=None) -> TruncatedElement:
    """
    ``sum over a: i -> m of coeff(a) sigma(a) a``, a combination of paths
    ``i -> tau^{-1}(i)``; zero when no solid arrow leaves ``i``.

    Parameters
    ----------
    tq : :class:`~meshforge.quiver.TranslationQuiver`
    i : str
    bound : int, default=2
    quiver : :class:`~meshforge.quiver.GradedQuiver`, optional
        Quiver to express the element over; defaults to ``tq.quiver``.

    Raises
    ------
    MeshUndefinedError
        ``tau^{-1}(i)`` is undefined.
    PairingMissingError
        An arrow out of ``i`` has no sigma partner.
    """
    quiver = tq.quiver if quiver is None else quiver
    if tq.tau_inverse(i) is None:
        raise MeshUndefinedError(f"tau^-1({i}) is undefined")

    terms: Dict[PathWord, mpq] = {}
    for a in tq.quiver.arrows_from(i, SOLID):
        if a.id not in tq.sigma:
            raise PairingMissingError(f"Arrow '{a.id}' has no sigma partner")
        word = PathWord.of(quiver, [tq.sigma[a.id], a.id])
        terms[word] = terms.get(word, 0) + tq.coeff(a.id)
    return TruncatedElement(quiver, terms, bound)


def rho_id(vertex_id) -> str:
    return f"r{vertex_id}"


def dg_auslander(tq: TranslationQuiver, L: int) -> DgPresentation:
    """
    The dg Auslander algebra of a stable translation quiver.

    Adds ``rho_i: i -> tau^{-1}(i)`` (id ``r<i>``, label ``\\rho_{i}``) for
    every vertex and sets ``d(rho_i)`` to the mesh relation at ``i``.

    Raises
    ------
    NotStableError
        Projective vertices present or ``tau`` not a bijection.
    ValidationFailedError
        The translation quiver breaks its laws.
    """
    if tq.projective_vertices or not tq.is_stable():
        raise NotStableError("dg Auslander algebras need a stable translation quiver")
    report = validate_translation_quiver(tq)
    if not report.ok:
        raise ValidationFailedError(
            "; ".join(f"{v.rule}: {v.message}" for v in report.violations)
        )

    base = tq.quiver
    dashed = []
    rho = {}
    for v in base.vertex_ids:
        arrow_id = rho_id(v)
        if base.has_arrow(arrow_id):
            raise DgPresentationError(f"Arrow id '{arrow_id}' is already taken")
        dashed.append(Arrow(arrow_id, rf"\rho_{{{v}}}", v, tq.tau_inverse(v), DASHED))
        rho[v] = arrow_id
    quiver = base.with_arrows(dashed)

    diff = {rho[v]: mesh_relation(tq, v, L, quiver) for v in base.vertex_ids}
    logger.debug("dg Auslander algebra with %d generators", len(quiver.arrows))
    return DgPresentation(quiver, diff, L, tq=tq, rho=rho)


def apply_differential(dg: DgPresentation, x: TruncatedElement) -> TruncatedElement:
    """
    ``d(x)`` by linearity and the graded Leibniz rule.

    The letter ``a_k`` of a word ``a_1 ... a_n`` contributes
    ``(-1)^{|a_1| + ... + |a_{k-1}|} a_1 ... d(a_k) ... a_n``.

    Raises
    ------
    BoundMismatchError
        ``x`` is truncated above the presentation's bound.
    QuiverMismatchError
    """
    if x.bound > dg.bound:
        raise BoundMismatchError(f"Element bound {x.bound} exceeds L={dg.bound}")
    if x.quiver is not dg.quiver and x.quiver != dg.quiver:
        raise QuiverMismatchError("Element lives over another quiver")

    quiver = dg.quiver
    bound = x.bound
    terms: Dict[PathWord, mpq] = {}
    for word, c in x.terms.items():
        sign = 1
        for k, g in enumerate(word.arrows):
            image = dg.diff.get(g)
            if image is not None:
                left, right = word.arrows[:k], word.arrows[k + 1:]
                rest = len(left) + len(right)
                for w, cw in image.terms.items():
                    if w.length + rest > bound:
                        continue
                    arrows = left + w.arrows + right
                    if arrows:
                        new = PathWord(arrows, word.src, word.tgt, quiver)
                    else:
                        new = PathWord.trivial(quiver, word.src)
                    terms[new] = terms.get(new, 0) + sign * c * cw
            if quiver.arrow(g).degree % 2:
                sign = -sign
    return TruncatedElement(quiver, terms, bound)


def check_d_squared(dg: DgPresentation) -> bool:
    """True iff ``d(d(g)) = 0`` for every generator ``g``."""
    for g, image in dg.diff.items():
        if not apply_differential(dg, image).is_zero():
            logger.debug("d^2(%s) != 0", g)
            return False
    return True
