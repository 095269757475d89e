"""Path words in a graded quiver and their enumeration."""
from dataclasses import field
from itertools import takewhile
from typing import Dict, Iterator, List, Optional, Tuple

from meshforge.exceptions import OutOfMemoryBudgetError, PathAlgebraError
from meshforge.quiver import GradedQuiver
from meshforge.utils import dataclass, get_env_var

DEFAULT_WORD_BUDGET = 200_000


def word_budget(budget: Optional[int] = None) -> int:
    """Explicit budget, else ``MESHFORGE_WORD_BUDGET``, else the default."""
    if budget is not None:
        return int(budget)
    return int(get_env_var("MESHFORGE_WORD_BUDGET", DEFAULT_WORD_BUDGET))


@dataclass(frozen=True, slots=True)
class PathWord:
    """
    A path in a quiver, written right to left.

    ``arrows`` is in written order, so ``arrows[-1]`` is traversed first:
    ``src`` is the source of the last arrow and ``tgt`` the target of the
    first.  The empty word at ``v`` is the trivial path ``e(v)``.
    """

    arrows: Tuple[str, ...]
    src: str
    tgt: str
    quiver: GradedQuiver = field(compare=False, repr=False, hash=False)

    @classmethod
    def trivial(cls, quiver, vertex_id) -> "PathWord":
        quiver.vertex(vertex_id)
        return cls((), vertex_id, vertex_id, quiver)

    @classmethod
    def of(cls, quiver, tokens) -> "PathWord":
        """
        Word from arrow ids or labels in written order.

        Raises
        ------
        PathAlgebraError
            If consecutive arrows do not compose.
        """
        arrows = [quiver.resolve_arrow(t) for t in tokens]
        if not arrows:
            raise PathAlgebraError("Use PathWord.trivial for the empty word")
        for left, right in zip(arrows, arrows[1:]):
            if right.tgt != left.src:
                raise PathAlgebraError(
                    f"Arrows '{left.id}' and '{right.id}' do not compose"
                )
        return cls(tuple(a.id for a in arrows), arrows[-1].src, arrows[0].tgt, quiver)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def degree(self) -> int:
        return sum(self.quiver.arrow(a).degree for a in self.arrows)

    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self):
        """``(length, arrow positions)``; trivial words order by vertex position."""
        if not self.arrows:
            return (0, (self.quiver.vertex_position(self.src),))
        return (len(self.arrows), tuple(self.quiver.arrow_position(a) for a in self.arrows))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def compose(self, other) -> Optional["PathWord"]:
        """``self * other`` (``other`` first), or None if not composable."""
        if other.tgt != self.src:
            return None
        if not other.arrows:
            return self
        if not self.arrows:
            return other
        return PathWord(self.arrows + other.arrows, other.src, self.tgt, self.quiver)

    def __str__(self):
        if not self.arrows:
            return f"e({self.src})"
        return " ".join(self.arrows)


class WordSpace:
    """
    All words of length at most ``bound``, grouped by length and endpoints.

    Raises
    ------
    OutOfMemoryBudgetError
        If more than ``budget`` words would be enumerated.
    """

    __slots__ = ["quiver", "bound", "by_length", "_by_src", "_by_tgt"]

    def __init__(self, quiver: GradedQuiver, bound: int, budget: Optional[int] = None):
        self.quiver = quiver
        self.bound = bound
        limit = word_budget(budget)

        layer = [PathWord.trivial(quiver, v) for v in quiver.vertex_ids]
        self.by_length: List[List[PathWord]] = [layer]
        total = len(layer)
        for _ in range(bound):
            nxt = []
            for w in layer:
                for a in quiver.arrows_from(w.tgt):
                    nxt.append(PathWord((a.id,) + w.arrows, w.src, a.tgt, quiver))
            total += len(nxt)
            if total > limit:
                raise OutOfMemoryBudgetError(
                    f"More than {limit} words of length <= {bound}; "
                    "raise MESHFORGE_WORD_BUDGET or lower the bound"
                )
            self.by_length.append(nxt)
            layer = nxt

        self._by_src: Dict[str, List[PathWord]] = {v: [] for v in quiver.vertex_ids}
        self._by_tgt: Dict[str, List[PathWord]] = {v: [] for v in quiver.vertex_ids}
        for w in self:
            self._by_src[w.src].append(w)
            self._by_tgt[w.tgt].append(w)

    def __len__(self):
        return sum(len(layer) for layer in self.by_length)

    def __iter__(self) -> Iterator[PathWord]:
        for layer in self.by_length:
            yield from layer

    def starting_at(self, vertex_id, max_length) -> List[PathWord]:
        """Words with ``src == vertex_id``, up to ``max_length`` arrows."""
        return list(takewhile(lambda w: w.length <= max_length, self._by_src[vertex_id]))

    def ending_at(self, vertex_id, max_length) -> List[PathWord]:
        return list(takewhile(lambda w: w.length <= max_length, self._by_tgt[vertex_id]))

    def index(self) -> Dict[Tuple[str, str], List[PathWord]]:
        """Words grouped by ``(src, tgt)`` block."""
        blocks: Dict[Tuple[str, str], List[PathWord]] = {}
        for w in self:
            blocks.setdefault((w.src, w.tgt), []).append(w)
        return blocks
