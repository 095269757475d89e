"""Sets of relations for path algebra quotients."""
from typing import Iterable, List, Tuple

from meshforge.exceptions import RelationError

from .elements import TruncatedElement, parse_element


class RelationSet:
    """
    Named relations, each in ``e_j (J^2) e_i`` for a single pair ``(i, j)``.

    Parameters
    ----------
    relations : iterable of (str, :class:`TruncatedElement`)

    Raises
    ------
    RelationError
        A relation is zero, mixes endpoints or contains a word of length < 2.
    """

    __slots__ = ["relations"]

    def __init__(self, relations: Iterable[Tuple[str, TruncatedElement]] = ()):
        self.relations: Tuple[Tuple[str, TruncatedElement], ...] = tuple(relations)
        ids = set()
        for rel_id, r in self.relations:
            if rel_id in ids:
                raise RelationError(f"Duplicate relation id: '{rel_id}'")
            ids.add(rel_id)
            _validate_relation(rel_id, r)

    @classmethod
    def parse(cls, quiver, texts, bound):
        """From a mapping id -> element text."""
        return cls((k, parse_element(quiver, t, bound)) for k, t in texts.items())

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __repr__(self):
        return f"<{self.__class__.__name__} {[rel_id for rel_id, _ in self.relations]}>"

    @property
    def ids(self) -> List[str]:
        return [rel_id for rel_id, _ in self.relations]

    def elements(self) -> List[TruncatedElement]:
        return [r for _, r in self.relations]

    def get(self, rel_id) -> TruncatedElement:
        for k, r in self.relations:
            if k == rel_id:
                return r
        raise KeyError(rel_id)

    @property
    def max_length(self) -> int:
        """Longest word over all relations (0 when empty)."""
        return max((r.max_length for _, r in self.relations), default=0)

    def block(self, src, tgt) -> List[Tuple[str, TruncatedElement]]:
        """Relations running from `src` to `tgt`."""
        return [(k, r) for k, r in self.relations if (r.src, r.tgt) == (src, tgt)]

    def truncate(self, bound) -> "RelationSet":
        return RelationSet((k, r.truncate(bound)) for k, r in self.relations)


def _validate_relation(rel_id, r):
    if r.is_zero():
        raise RelationError(f"Relation '{rel_id}' is zero")
    if len(r.endpoints) != 1:
        raise RelationError(f"Relation '{rel_id}' mixes endpoints {sorted(r.endpoints)}")
    if r.min_length < 2:
        raise RelationError(f"Relation '{rel_id}' has a word of length < 2")
