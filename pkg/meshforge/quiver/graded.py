"""Graded quivers: vertices, arrows with degrees, and adjacency lookups."""

from typing import Dict, Iterable, List, Optional, Tuple

from meshforge.exceptions import DuplicateIdError, QuiverError, UndeclaredVertexError
from meshforge.utils import dataclass


@dataclass(frozen=True, slots=True)
class Vertex:
    """A quiver vertex; projective vertices play the role of the ring summand."""

    id: str
    projective: bool = False


@dataclass(frozen=True, slots=True)
class Arrow:
    """
    An arrow ``src -> tgt`` of the given cohomological degree.

    Degree 0 arrows are drawn solid, degree -1 arrows dashed.
    """

    id: str
    label: str
    src: str
    tgt: str
    degree: int = 0


class GradedQuiver:
    """
    Immutable graded quiver.

    Vertices and arrows keep their declaration order, which fixes the
    lexicographic order used for normal forms and exports.

    Parameters
    ----------
    vertices : iterable of :class:`Vertex`
    arrows : iterable of :class:`Arrow`

    Raises
    ------
    DuplicateIdError
        If a vertex id or an arrow id is repeated.
    UndeclaredVertexError
        If an arrow endpoint is not a declared vertex.
    """

    __slots__ = [
        "vertices",
        "arrows",
        "_vertex_pos",
        "_arrow_pos",
        "_out",
        "_in",
        "_labels",
    ]

    def __init__(self, vertices: Iterable[Vertex], arrows: Iterable[Arrow]):
        self.vertices: Tuple[Vertex, ...] = tuple(vertices)
        self.arrows: Tuple[Arrow, ...] = tuple(arrows)

        self._vertex_pos: Dict[str, int] = {}
        for pos, vertex in enumerate(self.vertices):
            if vertex.id in self._vertex_pos:
                raise DuplicateIdError(f"Duplicate vertex id: '{vertex.id}'")
            self._vertex_pos[vertex.id] = pos

        self._arrow_pos: Dict[str, int] = {}
        self._out: Dict[str, List[Arrow]] = {v.id: [] for v in self.vertices}
        self._in: Dict[str, List[Arrow]] = {v.id: [] for v in self.vertices}
        self._labels: Dict[str, str] = {}
        for pos, arrow in enumerate(self.arrows):
            if arrow.id in self._arrow_pos:
                raise DuplicateIdError(f"Duplicate arrow id: '{arrow.id}'")
            for end in (arrow.src, arrow.tgt):
                if end not in self._vertex_pos:
                    raise UndeclaredVertexError(
                        f"Arrow '{arrow.id}' uses undeclared vertex '{end}'"
                    )
            self._arrow_pos[arrow.id] = pos
            self._out[arrow.src].append(arrow)
            self._in[arrow.tgt].append(arrow)
            self._labels.setdefault(arrow.label, arrow.id)

    def __eq__(self, other):
        if not isinstance(other, GradedQuiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} vertices={len(self.vertices)} "
            f"arrows={len(self.arrows)}>"
        )

    @property
    def vertex_ids(self) -> Tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @property
    def projective_vertices(self) -> Tuple[str, ...]:
        return tuple(v.id for v in self.vertices if v.projective)

    def is_empty(self):
        return not self.vertices

    def has_vertex(self, vertex_id):
        return vertex_id in self._vertex_pos

    def has_arrow(self, arrow_id):
        return arrow_id in self._arrow_pos

    def vertex(self, vertex_id) -> Vertex:
        try:
            return self.vertices[self._vertex_pos[vertex_id]]
        except KeyError as e:
            raise UndeclaredVertexError(f"Unknown vertex: '{vertex_id}'") from e

    def arrow(self, arrow_id) -> Arrow:
        try:
            return self.arrows[self._arrow_pos[arrow_id]]
        except KeyError as e:
            raise QuiverError(f"Unknown arrow: '{arrow_id}'") from e

    def resolve_arrow(self, token) -> Arrow:
        """Look an arrow up by id, falling back to its label."""
        if token in self._arrow_pos:
            return self.arrow(token)
        if token in self._labels:
            return self.arrow(self._labels[token])
        raise QuiverError(f"Unknown arrow: '{token}'")

    def vertex_position(self, vertex_id) -> int:
        return self._vertex_pos[vertex_id]

    def arrow_position(self, arrow_id) -> int:
        return self._arrow_pos[arrow_id]

    def arrows_from(self, vertex_id, degree: Optional[int] = None) -> List[Arrow]:
        arrows = self._out[vertex_id]
        if degree is None:
            return list(arrows)
        return [a for a in arrows if a.degree == degree]

    def arrows_to(self, vertex_id, degree: Optional[int] = None) -> List[Arrow]:
        arrows = self._in[vertex_id]
        if degree is None:
            return list(arrows)
        return [a for a in arrows if a.degree == degree]

    def arrows_between(self, src, tgt, degree: Optional[int] = None) -> List[Arrow]:
        return [a for a in self.arrows_from(src, degree) if a.tgt == tgt]

    def degree_part(self, degree: int) -> "GradedQuiver":
        """Same vertices, only the arrows of the given degree."""
        return GradedQuiver(self.vertices, [a for a in self.arrows if a.degree == degree])

    def full_subquiver(self, vertex_ids: Iterable[str]) -> "GradedQuiver":
        """Full subquiver on the given vertices, in declaration order."""
        keep = set(vertex_ids)
        for v in keep:
            self.vertex(v)
        return GradedQuiver(
            [v for v in self.vertices if v.id in keep],
            [a for a in self.arrows if a.src in keep and a.tgt in keep],
        )

    def with_arrows(self, arrows: Iterable[Arrow]) -> "GradedQuiver":
        """A new quiver with extra arrows appended."""
        return GradedQuiver(self.vertices, self.arrows + tuple(arrows))

    def arrow_counts(self, degree: Optional[int] = None) -> Dict[Tuple[str, str], int]:
        """Number of arrows per (src, tgt) pair, omitting zero entries."""
        counts: Dict[Tuple[str, str], int] = {}
        for a in self.arrows:
            if degree is None or a.degree == degree:
                counts[(a.src, a.tgt)] = counts.get((a.src, a.tgt), 0) + 1
        return counts
