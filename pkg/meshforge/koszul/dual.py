"""
The Koszul dual ``E(A) = D(BA)`` through the reduced bar construction.

A bar word ``[a_1 | ... | a_n]`` is a tensor of basis elements of ``A-bar``
that compose over ``K`` (``a_k`` starts where ``a_{k+1}`` ends); it runs from
the source of ``a_n`` to the target of ``a_1`` and has degree
``sum (|a_k| - 1)``.  The generator of ``E(A)`` dual to ``a: s -> t`` is an
arrow ``s -> t`` of degree ``1 - |a|``, and the words of ``E(A)`` are dual
to the bar words, so ``H^n(E(A))`` in block ``(i, j)`` has the dimension of
the bar homology in degree ``-n``, which is ``Ext^n_A(S_i, S_j)``.
"""
from typing import Dict, List, NamedTuple, Tuple

from gmpy2 import mpq

from meshforge.exceptions import MeshforgeValueError, OutOfMemoryBudgetError
from meshforge.linalg import domain_matrix, rank
from meshforge.logging import get_logger
from meshforge.path_algebra.words import word_budget
from meshforge.quiver import Arrow, GradedQuiver, Vertex

from .augmented import AugmentedDgAlgebra

logger = get_logger(__name__)

BarWord = Tuple[int, ...]


class Generator(NamedTuple):
    """Generator of ``E(A)`` dual to the basis element ``basis[index]``."""

    id: str
    index: int
    src: str
    tgt: str
    degree: int


class KoszulCohomology(NamedTuple):
    dim: int
    blocks: Dict[Tuple[str, str], int]
    stabilized: bool


def bar_boundary(algebra: AugmentedDgAlgebra, word: BarWord) -> Dict[BarWord, mpq]:
    """
    The bar differential of one bar word; every sign of the construction is here.

    With ``|s a| = |a| - 1`` and ``e_k = |s a_1| + ... + |s a_k|``::

        D[a_1|...|a_n] = sum_k -(-1)^{e_{k-1}} [.. | d a_k | ..]
                       + sum_k (-1)^{e_{k-1} + |a_k|} [.. | a_k a_{k+1} | ..]

    Components of products on an idempotent are dropped; they vanish in a
    closed augmentation ideal.
    """
    basis = algebra.basis
    trivial = algebra.augmentation
    out: Dict[BarWord, mpq] = {}
    shift = 0
    for k, a in enumerate(word):
        sign = -1 if shift % 2 else 1
        for b, c in algebra.differential(a).items():
            new = word[:k] + (b,) + word[k + 1:]
            out[new] = out.get(new, 0) - sign * c
        if k + 1 < len(word):
            sign2 = sign if basis[a].degree % 2 == 0 else -sign
            for b, c in algebra.product(a, word[k + 1]).items():
                if b in trivial:
                    continue
                new = word[:k] + (b,) + word[k + 2:]
                out[new] = out.get(new, 0) + sign2 * c
        shift += basis[a].degree - 1
    return {w: c for w, c in out.items() if c != 0}


class KoszulPresentation:
    """
    ``E(A)``: generators dual to ``A-bar[1]``, word bound ``W`` and the
    differential of each generator.

    ``diff[g]`` maps words of generator indices (length 1 or 2) to
    coefficients, ``d(f)(x) = f(D x)`` for the bar differential ``D``.
    """

    __slots__ = ["algebra", "generators", "W", "diff", "_by_index"]

    def __init__(self, algebra: AugmentedDgAlgebra, generators, W: int, diff):
        self.algebra = algebra
        self.generators: Tuple[Generator, ...] = tuple(generators)
        self.W = W
        self.diff: Dict[str, Dict[Tuple[str, ...], mpq]] = diff
        self._by_index = {g.index: g for g in self.generators}

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} generators={len(self.generators)} W={self.W}>"
        )

    def generator(self, index) -> Generator:
        return self._by_index[index]

    def quiver(self) -> GradedQuiver:
        """The graded quiver of the generators on the vertices of ``K``."""
        return GradedQuiver(
            [Vertex(v) for v in self.algebra.vertices],
            [Arrow(g.id, str(self.algebra.basis[g.index]), g.src, g.tgt, g.degree)
             for g in self.generators],
        )

    def arrow_counts(self, degree=None) -> Dict[Tuple[str, str], int]:
        counts: Dict[Tuple[str, str], int] = {}
        for g in self.generators:
            if degree is None or g.degree == degree:
                counts[(g.src, g.tgt)] = counts.get((g.src, g.tgt), 0) + 1
        return counts


def koszul_dual(algebra: AugmentedDgAlgebra, W: int) -> KoszulPresentation:
    """
    Generators of ``E(A)`` and their differentials, paired against ``b_1``
    and ``b_2``.

    Raises
    ------
    MeshforgeValueError
        ``W < 2``.
    """
    if W < 2:
        raise MeshforgeValueError(f"Word bound must be at least 2, got {W}")
    basis = algebra.basis
    generators = [
        Generator(f"f{k}", k, basis[k].src, basis[k].tgt, 1 - basis[k].degree)
        for k in algebra.augmentation_ideal()
    ]
    ids = {g.index: g.id for g in generators}

    diff: Dict[str, Dict[Tuple[str, ...], mpq]] = {g.id: {} for g in generators}
    for word in _bar_words(algebra, 2, None):
        if not word:
            continue
        for target, c in bar_boundary(algebra, word).items():
            if len(target) != 1:
                continue
            image = diff[ids[target[0]]]
            key = tuple(ids[a] for a in word)
            image[key] = image.get(key, 0) + c
    diff = {g: {w: c for w, c in image.items() if c != 0} for g, image in diff.items()}
    logger.debug("Koszul dual with %d generators, W=%d", len(generators), W)
    return KoszulPresentation(algebra, generators, W, diff)


def _bar_words(algebra, max_length, budget, min_degree=None):
    """
    Bar words of length at most `max_length`, the empty word per vertex first.

    Words of bar degree below `min_degree` are pruned; extending a word only
    lowers its degree.
    """
    basis = algebra.basis
    ideal = algebra.augmentation_ideal()
    limit = word_budget(budget)
    words: List[BarWord] = [()] * len(algebra.vertices)
    layer: List[BarWord] = [(a,) for a in ideal]
    if min_degree is not None:
        layer = [w for w in layer if _degree(algebra, w) >= min_degree]
    length = 1
    while layer and length <= max_length:
        words.extend(layer)
        if len(words) > limit:
            raise OutOfMemoryBudgetError(
                f"Bar construction needs more than {limit} words"
            )
        length += 1
        layer = [
            w + (a,) for w in layer for a in ideal if basis[w[-1]].src == basis[a].tgt
        ]
        if min_degree is not None:
            layer = [w for w in layer if _degree(algebra, w) >= min_degree]
    return words


def _endpoints(algebra, word, slot):
    if not word:
        v = algebra.vertices[slot]
        return v, v
    basis = algebra.basis
    return basis[word[-1]].src, basis[word[0]].tgt


def _degree(algebra, word):
    return sum(algebra.basis[a].degree - 1 for a in word)


def _graded_blocks(algebra, W, budget, min_degree=None):
    """``{(bar degree, (src, tgt)): [words]}`` for bar words of length at most W."""
    blocks: Dict[Tuple[int, Tuple[str, str]], List[BarWord]] = {}
    slot = 0
    for word in _bar_words(algebra, W, budget, min_degree):
        key = (_degree(algebra, word), _endpoints(algebra, word, slot))
        if not word:
            slot += 1
        blocks.setdefault(key, []).append(word)
    return blocks


def _bar_rank(algebra, sources, targets):
    if not sources or not targets:
        return 0
    index = {w: n for n, w in enumerate(targets)}
    entries: Dict[int, Dict[int, mpq]] = {}
    for col, word in enumerate(sources):
        for target, c in bar_boundary(algebra, word).items():
            entries.setdefault(index[target], {})[col] = c
    return rank(domain_matrix(entries, (len(targets), len(sources))))


def _cohomology_at(algebra, blocks, n):
    pairs = [(s, t) for s in algebra.vertices for t in algebra.vertices]
    dims = {}
    for pair in pairs:
        here = blocks.get((-n, pair), [])
        above = blocks.get((-n - 1, pair), [])
        below = blocks.get((-n + 1, pair), [])
        dim = len(here) - _bar_rank(algebra, here, below) - _bar_rank(algebra, above, here)
        if dim:
            dims[pair] = dim
    return dims


def koszul_cohomology(E: KoszulPresentation, degrees, W=None, budget=None):
    """
    ``H^n(E(A))`` per degree and per vertex pair ``(i, j)``.

    Each degree is computed with word bounds ``W`` and ``W - 1``; it is
    reported stabilized when both agree.

    Parameters
    ----------
    E : :class:`KoszulPresentation`
    degrees : iterable of int
        Within ``[0, W - 1]``.
    W : int, optional
        Defaults to ``E.W``.

    Returns
    -------
    dict
        degree -> :class:`KoszulCohomology`
    """
    W = E.W if W is None else W
    degrees = sorted(set(degrees))
    if degrees and (degrees[0] < 0 or degrees[-1] > W - 1):
        raise MeshforgeValueError(f"Degrees must lie in [0, {W - 1}]")

    result = {}
    if not degrees:
        return result
    algebra = E.algebra
    floor = -degrees[-1] - 1
    blocks = _graded_blocks(algebra, W, budget, floor)
    shorter = _graded_blocks(algebra, W - 1, budget, floor)
    for n in degrees:
        dims = _cohomology_at(algebra, blocks, n)
        previous = _cohomology_at(algebra, shorter, n)
        stabilized = dims == previous
        if not stabilized:
            logger.warning("H^%d of the Koszul dual not stable at W=%d", n, W)
        result[n] = KoszulCohomology(sum(dims.values()), dims, stabilized)
    return result


def check_d_squared(E: KoszulPresentation, budget=None) -> bool:
    """True iff the bar differential squares to zero on all words up to ``E.W``."""
    algebra = E.algebra
    for word in _bar_words(algebra, E.W, budget):
        first = bar_boundary(algebra, word)
        total: Dict[BarWord, mpq] = {}
        for w, c in first.items():
            for w2, c2 in bar_boundary(algebra, w).items():
                total[w2] = total.get(w2, 0) + c * c2
        if any(c != 0 for c in total.values()):
            logger.debug("d^2 != 0 on bar word %s", word)
            return False
    return True
