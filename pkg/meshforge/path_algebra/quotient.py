"""
Truncated quotients ``kQ / (R)`` as finite-dimensional algebras.

At a bound ``L`` the ideal generated by ``R`` in ``kQ / J^{L+1}`` is the
span of the truncated products ``u r v``.  Its semi-echelon basis has the
largest word of each row as pivot, so the remaining (smallest) words form
the normal-form basis of the quotient.
"""
from typing import Dict, List, Optional, Tuple

from gmpy2 import mpq

from meshforge.exceptions import BoundTooSmallError, MeshforgeValueError
from meshforge.linalg import EchelonBasis
from meshforge.logging import get_logger

from .algebra import FinDimAlgebra
from .relations import RelationSet
from .words import PathWord, WordSpace

logger = get_logger(__name__)

METHODS = ("span", "saturation")


def _sandwich(u, r, v, bound) -> Dict[PathWord, mpq]:
    """Word vector of ``u r v`` truncated at `bound`."""
    vec: Dict[PathWord, mpq] = {}
    for w, c in r.terms.items():
        if u.length + w.length + v.length > bound:
            continue
        word = u.compose(w.compose(v))
        vec[word] = vec.get(word, 0) + c
    return {w: c for w, c in vec.items() if c != 0}


def _products(space, relations, bound, predicate=None):
    """Yield ``(u, v, vector)`` for every product ``u r v`` within the bound."""
    for _, r in relations:
        shortest = r.min_length
        for v in space.ending_at(r.src, bound - shortest):
            for u in space.starting_at(r.tgt, bound - shortest - v.length):
                if predicate is not None and not predicate(u, v):
                    continue
                vec = _sandwich(u, r, v, bound)
                if vec:
                    yield u, v, vec


def ideal_span(space: WordSpace, relations: RelationSet) -> EchelonBasis:
    """Span of ``{u r v}`` inside the words of `space`."""
    span = EchelonBasis(key=PathWord.sort_key)
    for _, _, vec in _products(space, relations, space.bound):
        span.insert(vec)
    return span


def saturated_span(space: WordSpace, relations: RelationSet) -> EchelonBasis:
    """
    Same ideal, computed as the fixed point of multiplying by arrows.

    Starts from the relations and multiplies every newly added vector by each
    arrow on both sides until nothing new appears.
    """
    bound = space.bound
    quiver = space.quiver
    arrow_words = [PathWord((a.id,), a.src, a.tgt, quiver) for a in quiver.arrows]

    span = EchelonBasis(key=PathWord.sort_key)
    pending = []
    for _, r in relations:
        vec = {w: c for w, c in r.terms.items() if w.length <= bound}
        if vec and span.insert(vec):
            pending.append(vec)

    while pending:
        vec = pending.pop()
        for a in arrow_words:
            for side in ("left", "right"):
                out: Dict[PathWord, mpq] = {}
                for w, c in vec.items():
                    if w.length + 1 > bound:
                        continue
                    word = a.compose(w) if side == "left" else w.compose(a)
                    if word is not None:
                        out[word] = out.get(word, 0) + c
                out = {w: c for w, c in out.items() if c != 0}
                if out and span.insert(out):
                    pending.append(out)
    return span


def _dims(space, span, vertices) -> Tuple[int, ...]:
    counts = {(s, t): 0 for s in vertices for t in vertices}
    pivots = span.pivots
    for w in space:
        if w not in pivots:
            counts[(w.src, w.tgt)] += 1
    return tuple(counts[(s, t)] for s in vertices for t in vertices)


def _build(space, span, stabilized, history) -> FinDimAlgebra:
    pivots = span.pivots
    normal = sorted((w for w in space if w not in pivots), key=PathWord.sort_key)
    index = {w: k for k, w in enumerate(normal)}
    bound = space.bound

    mult = {}
    for i, left in enumerate(normal):
        for j, right in enumerate(normal):
            if right.tgt != left.src or left.length + right.length > bound:
                continue
            word = left.compose(right)
            reduced = span.reduce({word: mpq(1)})
            if reduced:
                mult[(i, j)] = {index[w]: c for w, c in reduced.items()}

    return FinDimAlgebra(
        space.quiver.vertex_ids,
        normal,
        mult,
        stabilized=stabilized,
        bound=bound,
        dims_history=history,
    )


def quotient_algebra(
    quiver,
    relations: RelationSet,
    L_max: int,
    window: int = 2,
    method: str = "span",
    budget: Optional[int] = None,
) -> FinDimAlgebra:
    """
    Quotient of the path algebra by the ideal generated by `relations`.

    Bounds ``L`` from ``max(2, longest relation)`` up to `L_max` are tried in
    turn; the algebra is returned at the first ``L`` where the block
    dimensions agree over `window` consecutive bounds.  If that never
    happens the `L_max` truncation is returned with ``stabilized=False``.

    Parameters
    ----------
    quiver : :class:`~meshforge.quiver.GradedQuiver`
    relations : :class:`RelationSet`
    L_max : int
    window : int, default=2
    method : {"span", "saturation"}
        How the ideal is computed at each bound.
    budget : int, optional
        Word budget, defaults to ``MESHFORGE_WORD_BUDGET``.

    Raises
    ------
    BoundTooSmallError
        ``L_max < 2`` or shorter than the longest relation.
    OutOfMemoryBudgetError
    """
    if method not in METHODS:
        raise MeshforgeValueError(f"Unknown quotient method: '{method}'")
    if window < 1:
        raise MeshforgeValueError("window must be positive")
    start = max(2, relations.max_length)
    if L_max < start:
        raise BoundTooSmallError(f"L_max={L_max} is below the starting bound {start}")

    make_span = ideal_span if method == "span" else saturated_span
    vertices = quiver.vertex_ids
    history: List[Tuple[int, ...]] = []
    space = span = None
    for bound in range(start, L_max + 1):
        space = WordSpace(quiver, bound, budget)
        span = make_span(space, relations.truncate(bound))
        dims = _dims(space, span, vertices)
        history.append(dims)
        logger.debug("Quotient at L=%d: dim %d (%d words)", bound, sum(dims), len(space))
        if len(history) >= window and len(set(history[-window:])) == 1:
            logger.debug("Quotient stabilized at L=%d", bound)
            return _build(space, span, True, history)

    logger.warning("Quotient did not stabilize up to L=%d", L_max)
    return _build(space, span, False, history)


def minimal_relations_defect(quiver, relations: RelationSet, i, j, L: int):
    """
    Minimality test for the relations from `i` to `j`.

    Returns
    -------
    count : int
        Number of relations with source `i` and target `j`.
    dim : int
        ``dim e_j (I / (IJ + JI)) e_i`` at truncation `L`; ``count == dim``
        means the relations of this block are minimal.

    Raises
    ------
    BoundTooSmallError
        ``L`` below the longest relation plus two.
    """
    if L < relations.max_length + 2:
        raise BoundTooSmallError(
            f"L={L} is below the longest relation plus two ({relations.max_length + 2})"
        )
    quiver.vertex(i)
    quiver.vertex(j)
    space = WordSpace(quiver, L)
    rels = relations.truncate(L)

    def in_block(u, v):
        return v.src == i and u.tgt == j

    def in_block_decomposable(u, v):
        return in_block(u, v) and (u.length > 0 or v.length > 0)

    whole = EchelonBasis(key=PathWord.sort_key)
    whole.extend(vec for _, _, vec in _products(space, rels, L, in_block))
    smaller = EchelonBasis(key=PathWord.sort_key)
    smaller.extend(vec for _, _, vec in _products(space, rels, L, in_block_decomposable))

    count = len(relations.block(i, j))
    return count, len(whole) - len(smaller)
