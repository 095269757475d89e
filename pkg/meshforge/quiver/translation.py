"""
Translation quivers and their structural laws.

A translation quiver is a quiver with a partial injection ``tau`` (defined
exactly on the non-projective vertices) and a mesh pairing ``sigma`` that
sends every arrow ``a: i -> m`` with ``tau^{-1}(i)`` defined to an arrow
``m -> tau^{-1}(i)``.  Products are read right to left: ``sigma(a) a`` is
the length-2 path that first runs along ``a``.
"""
from types import MappingProxyType
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

from gmpy2 import mpq

from meshforge.constants import DASHED, SOLID
from meshforge.exceptions import QuiverError, UndeclaredVertexError
from meshforge.utils import parse_rational

from .graded import GradedQuiver


class TranslationQuiver:
    """
    Immutable translation quiver.

    Parameters
    ----------
    quiver : :class:`~meshforge.quiver.GradedQuiver`
        Degree-0 arrows only; dashed arrows are added by the dg construction.
    tau : mapping
        Vertex id -> vertex id, defined on the non-projective vertices.
    sigma : mapping
        Arrow id -> arrow id (the mesh pairing).
    mesh_coeff : mapping, optional
        Arrow id -> nonzero rational; arrows not listed have coefficient 1.
    depth : int, default=1
        The ``d`` of the d-almost split sequences this quiver encodes.
    middle_terms : mapping, optional
        Vertex id -> list of ``depth`` vertex lists, the middle terms of the
        resolution of the simple at that vertex (only needed when depth > 1).
    """

    __slots__ = [
        "quiver",
        "tau",
        "sigma",
        "mesh_coeff",
        "depth",
        "middle_terms",
        "_tau_inv",
    ]

    def __init__(
        self,
        quiver: GradedQuiver,
        tau: Mapping[str, str],
        sigma: Mapping[str, str],
        mesh_coeff: Optional[Mapping[str, object]] = None,
        depth: int = 1,
        middle_terms: Optional[Mapping[str, List[List[str]]]] = None,
    ):
        self.quiver = quiver
        self.tau = MappingProxyType(dict(tau))
        self.sigma = MappingProxyType(dict(sigma))
        self.mesh_coeff = MappingProxyType(
            {a: parse_rational(c) for a, c in (mesh_coeff or {}).items()}
        )
        self.depth = int(depth)
        self.middle_terms = MappingProxyType(
            {
                v: tuple(tuple(step) for step in steps)
                for v, steps in (middle_terms or {}).items()
            }
        )
        _validate_references(self)

        tau_inv: Dict[str, str] = {}
        for v, w in self.tau.items():
            tau_inv.setdefault(w, v)
        self._tau_inv = tau_inv

    def __eq__(self, other):
        if not isinstance(other, TranslationQuiver):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and dict(self.tau) == dict(other.tau)
            and dict(self.sigma) == dict(other.sigma)
            and dict(self.mesh_coeff) == dict(other.mesh_coeff)
            and self.depth == other.depth
            and dict(self.middle_terms) == dict(other.middle_terms)
        )

    def __hash__(self):
        return hash((self.quiver, tuple(sorted(self.tau.items()))))

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} vertices={len(self.quiver.vertices)} "
            f"arrows={len(self.quiver.arrows)} depth={self.depth}>"
        )

    @property
    def vertex_ids(self) -> Tuple[str, ...]:
        return self.quiver.vertex_ids

    @property
    def projective_vertices(self) -> Tuple[str, ...]:
        return self.quiver.projective_vertices

    @property
    def non_projective_vertices(self) -> Tuple[str, ...]:
        return tuple(v.id for v in self.quiver.vertices if not v.projective)

    def tau_inverse(self, vertex_id) -> Optional[str]:
        return self._tau_inv.get(vertex_id)

    def coeff(self, arrow_id) -> mpq:
        return self.mesh_coeff.get(arrow_id, mpq(1))

    def is_stable(self):
        """No projective vertices and tau a bijection of the vertex set."""
        vertices = set(self.vertex_ids)
        return (
            not self.projective_vertices
            and set(self.tau) == vertices
            and set(self.tau.values()) == vertices
        )

    def replace(self, **changes) -> "TranslationQuiver":
        """Copy with some fields replaced, e.g. ``tq.replace(sigma=...)``."""
        fields = {
            "quiver": self.quiver,
            "tau": self.tau,
            "sigma": self.sigma,
            "mesh_coeff": self.mesh_coeff,
            "depth": self.depth,
            "middle_terms": self.middle_terms,
        }
        fields.update(changes)
        return TranslationQuiver(**fields)

    def stable_part(self) -> "TranslationQuiver":
        """Full translation subquiver on the non-projective vertices."""
        keep = set(self.non_projective_vertices)
        quiver = self.quiver.full_subquiver(keep)
        sigma = {
            a: b
            for a, b in self.sigma.items()
            if quiver.has_arrow(a) and quiver.has_arrow(b)
        }
        coeff = {a: c for a, c in self.mesh_coeff.items() if quiver.has_arrow(a)}
        tau = {v: w for v, w in self.tau.items() if v in keep and w in keep}
        middle = {v: s for v, s in self.middle_terms.items() if v in keep}
        return TranslationQuiver(quiver, tau, sigma, coeff, self.depth, middle)


def _validate_references(tq):
    quiver = tq.quiver
    for v, w in tq.tau.items():
        for end in (v, w):
            if not quiver.has_vertex(end):
                raise UndeclaredVertexError(f"tau uses undeclared vertex '{end}'")
    for a, b in tq.sigma.items():
        for arrow_id in (a, b):
            if not quiver.has_arrow(arrow_id):
                raise QuiverError(f"sigma uses unknown arrow '{arrow_id}'")
    for a in tq.mesh_coeff:
        if not quiver.has_arrow(a):
            raise QuiverError(f"mesh_coeff uses unknown arrow '{a}'")
    for v, steps in tq.middle_terms.items():
        if not quiver.has_vertex(v):
            raise UndeclaredVertexError(f"middle_terms uses undeclared vertex '{v}'")
        for step in steps:
            for w in step:
                if not quiver.has_vertex(w):
                    raise UndeclaredVertexError(
                        f"middle_terms uses undeclared vertex '{w}'"
                    )


class Violation(NamedTuple):
    """A single broken law: rule id, offending vertex/arrow id, message."""

    rule: str
    subject: str
    message: str


class ValidationReport:
    """Outcome of :func:`validate_translation_quiver`; ``ok`` iff no violations."""

    __slots__ = ["violations"]

    def __init__(self, violations=()):
        self.violations: Tuple[Violation, ...] = tuple(violations)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"<{self.__class__.__name__} ok={self.ok} violations={len(self.violations)}>"

    def rules(self):
        """Set of violated rule ids."""
        return {v.rule for v in self.violations}

    def to_dict(self):
        return {"ok": self.ok, "violations": [v._asdict() for v in self.violations]}


def validate_translation_quiver(tq: TranslationQuiver) -> ValidationReport:
    """
    Check every structural law of a translation quiver.

    Violations are collected, never raised.  Rule ids:

    - ``degree``: an arrow of degree other than 0 or -1;
    - ``solid-only``: a dashed arrow (dashed arrows belong to the dg quiver);
    - ``tau-domain``: tau missing on a non-projective vertex or defined on a
      projective one;
    - ``tau-image``: tau takes a projective value;
    - ``tau-injective``: two vertices share a tau image;
    - ``sigma-domain``: sigma missing where the mesh needs it, or defined on an
      arrow whose source has no tau inverse;
    - ``mesh-target``: sigma(a) is not an arrow ``m -> tau^{-1}(src a)``;
    - ``sigma-injective`` / ``sigma-surjective``: the pairing at a vertex is not
      a bijection onto the arrows into ``tau^{-1}(i)`` from the middle vertices;
    - ``mesh-coeff``: a zero mesh coefficient.
    """
    quiver = tq.quiver
    violations: List[Violation] = list(validate_graded_quiver(quiver).violations)

    for arrow in quiver.arrows:
        if arrow.degree == DASHED:
            violations.append(
                Violation("solid-only", arrow.id, "translation quivers carry solid arrows")
            )

    for vertex in quiver.vertices:
        if vertex.projective and vertex.id in tq.tau:
            violations.append(
                Violation("tau-domain", vertex.id, "tau defined on a projective vertex")
            )
        if not vertex.projective and vertex.id not in tq.tau:
            violations.append(
                Violation("tau-domain", vertex.id, "tau missing on a non-projective vertex")
            )

    seen: Dict[str, str] = {}
    for v, w in tq.tau.items():
        if quiver.vertex(w).projective:
            violations.append(Violation("tau-image", v, f"tau({v}) = {w} is projective"))
        if w in seen:
            violations.append(
                Violation("tau-injective", v, f"tau({v}) = tau({seen[w]}) = {w}")
            )
        else:
            seen[w] = v

    for a, c in tq.mesh_coeff.items():
        if c == 0:
            violations.append(Violation("mesh-coeff", a, "mesh coefficient is zero"))

    for vertex in quiver.vertices:
        violations.extend(_mesh_violations(tq, vertex.id))

    return ValidationReport(violations)


def _mesh_violations(tq, i) -> List[Violation]:
    quiver = tq.quiver
    target = tq.tau_inverse(i)
    out_arrows = quiver.arrows_from(i, SOLID)
    found = []

    if target is None:
        for a in out_arrows:
            if a.id in tq.sigma:
                found.append(
                    Violation("sigma-domain", a.id, f"no tau inverse at source '{i}'")
                )
        return found

    images = []
    for a in out_arrows:
        if a.id not in tq.sigma:
            found.append(Violation("sigma-domain", a.id, "sigma missing"))
            continue
        b = quiver.arrow(tq.sigma[a.id])
        if b.src != a.tgt or b.tgt != target or b.degree != SOLID:
            found.append(
                Violation(
                    "mesh-target",
                    a.id,
                    f"sigma({a.id}) = {b.id} runs {b.src}->{b.tgt}, "
                    f"expected {a.tgt}->{target}",
                )
            )
            continue
        if b.id in images:
            found.append(Violation("sigma-injective", a.id, f"{b.id} paired twice"))
            continue
        images.append(b.id)

    middle = {a.tgt for a in out_arrows}
    expected = {b.id for m in middle for b in quiver.arrows_between(m, target, SOLID)}
    missing = sorted(expected - set(images), key=quiver.arrow_position)
    for b in missing:
        found.append(
            Violation("sigma-surjective", b, f"no arrow out of '{i}' is paired with {b}")
        )
    return found


def validate_graded_quiver(quiver: GradedQuiver) -> ValidationReport:
    """Report arrows whose degree is neither 0 (solid) nor -1 (dashed)."""
    return ValidationReport(
        Violation("degree", arrow.id, f"degree {arrow.degree} not in {{0, -1}}")
        for arrow in quiver.arrows
        if arrow.degree not in (SOLID, DASHED)
    )
