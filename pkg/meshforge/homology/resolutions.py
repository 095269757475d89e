"""
Projective resolutions of simple modules.

Modules are left modules and ``P_v = A e_v``.  For an Auslander algebra the
resolution of ``S_i`` is read off the almost split sequence starting at
``i``; over a finite-dimensional algebra it is computed by iterating
projective covers of syzygies.
"""
from collections import Counter
from typing import Dict, List, Tuple

from gmpy2 import mpq

from meshforge.constants import SOLID
from meshforge.exceptions import (
    HomologyError,
    MeshforgeValueError,
    MissingMiddleTermsError,
    NotStabilizedError,
    ProjectiveVertexError,
)
from meshforge.linalg import EchelonBasis, domain_matrix, kernel_basis
from meshforge.logging import get_logger
from meshforge.path_algebra import FinDimAlgebra
from meshforge.quiver import TranslationQuiver
from meshforge.utils import dataclass

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Resolution:
    """
    Multiplicities of the indecomposable projectives in each step.

    ``steps[l]`` maps a vertex ``v`` to the multiplicity of ``P_v`` in the
    ``l``-th term; ``steps[0]`` is ``{vertex: 1}``.
    """

    vertex: str
    steps: Tuple[Dict[str, int], ...]

    def __len__(self):
        return len(self.steps)

    def multiplicity(self, l, v) -> int:
        if l < 0 or l >= len(self.steps):
            return 0
        return self.steps[l].get(v, 0)

    def ext_dims(self) -> Dict[Tuple[int, str], int]:
        """``(l, j) -> dim Ext^l(S_vertex, S_j)``, nonzero entries only."""
        return {
            (l, v): m for l, step in enumerate(self.steps) for v, m in step.items() if m
        }

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "steps": [
                [{"projective": v, "mult": m} for v, m in step.items()]
                for step in self.steps
            ],
        }


def _translation_quiver(source) -> TranslationQuiver:
    return source if isinstance(source, TranslationQuiver) else source.full_tq


def mesh_resolution(source, i) -> Resolution:
    """
    Resolution of ``S_i`` from the almost split sequence at ``i``.

    Step 0 is ``P_i``, the last step ``P_{tau(i)}``; for depth 1 the middle
    step has one ``P_m`` for every arrow ``i -> m``, for larger depth the
    middle steps come from the quiver's ``middle_terms``.

    Parameters
    ----------
    source : :class:`~meshforge.homology.AuslanderPresentation` or :class:`~meshforge.quiver.TranslationQuiver`
    i : str

    Raises
    ------
    ProjectiveVertexError
    MissingMiddleTermsError
    """
    tq = _translation_quiver(source)
    if tq.quiver.vertex(i).projective:
        raise ProjectiveVertexError(f"Vertex '{i}' is projective")
    if i not in tq.tau:
        raise HomologyError(f"tau({i}) is undefined")

    if tq.depth == 1:
        middle = [dict(Counter(a.tgt for a in tq.quiver.arrows_from(i, SOLID)))]
    else:
        if i not in tq.middle_terms:
            raise MissingMiddleTermsError(
                f"Depth {tq.depth} needs middle terms for vertex '{i}'"
            )
        middle = [dict(Counter(step)) for step in tq.middle_terms[i]]
        if len(middle) != tq.depth:
            raise MissingMiddleTermsError(
                f"Vertex '{i}' needs {tq.depth} middle terms, got {len(middle)}"
            )
    steps = [{i: 1}] + middle + [{tq.tau[i]: 1}]
    return Resolution(i, tuple(steps))


class _FreeModule:
    """``P_{v_1} + ... + P_{v_n}`` with coordinates ``(slot, basis index)``."""

    __slots__ = ["algebra", "slots", "coords", "index"]

    def __init__(self, algebra, slots):
        self.algebra = algebra
        self.slots = tuple(slots)
        self.coords = [
            (s, k)
            for s, v in enumerate(self.slots)
            for k, b in enumerate(algebra.basis)
            if b.src == v
        ]
        self.index = {c: n for n, c in enumerate(self.coords)}

    def vertex_of(self, coord):
        return self.algebra.basis[coord[1]].tgt

    def act(self, b, vector):
        """``basis[b] . vector`` for a vector keyed by coordinates."""
        out = {}
        for (s, k), c in vector.items():
            for k2, c2 in self.algebra.product(b, k).items():
                key = (s, k2)
                out[key] = out.get(key, 0) + c * c2
        return {key: c for key, c in out.items() if c != 0}


def _top(algebra, module, syzygy):
    """Generators of the syzygy modulo its radical, grouped by vertex."""
    radical = EchelonBasis(key=module.index.get)
    for b in algebra.radical():
        for vec in syzygy:
            image = module.act(b, vec)
            if image:
                radical.insert(image)

    generators: List[Tuple[str, dict]] = []
    for vec in syzygy:
        if radical.insert(vec):
            generators.append((module.vertex_of(next(iter(vec))), vec))
    return generators


def _syzygy(algebra, target, generators):
    """Kernel of ``P -> target`` sending the ``s``-th idempotent to generator ``s``."""
    cover = _FreeModule(algebra, [v for v, _ in generators])
    kernel = []
    for v in algebra.vertices:
        columns = [c for c in cover.coords if cover.vertex_of(c) == v]
        if not columns:
            continue
        rows = [c for c in target.coords if target.vertex_of(c) == v]
        row_index = {c: n for n, c in enumerate(rows)}
        entries: Dict[int, Dict[int, mpq]] = {}
        for n, (s, k) in enumerate(columns):
            for c, value in target.act(k, generators[s][1]).items():
                entries.setdefault(row_index[c], {})[n] = value
        matrix = domain_matrix(entries, (len(rows), len(columns)))
        basis, _ = kernel_basis(matrix)
        kernel.extend({columns[n]: c for n, c in vec.items()} for vec in basis)
    return cover, kernel


def min_proj_resolution(algebra: FinDimAlgebra, i, n: int) -> Resolution:
    """
    Minimal projective resolution of the simple ``S_i`` up to step `n`.

    Each syzygy is covered by projectives on a basis of its top
    ``K / rad K``, so the multiplicity of ``P_j`` in step ``l`` is
    ``dim Ext^l_A(S_i, S_j)``.

    Raises
    ------
    NotStabilizedError
        The algebra is a truncation that did not stabilize.
    """
    if not algebra.stabilized:
        raise NotStabilizedError("Resolution over an algebra that did not stabilize")
    if n < 0:
        raise MeshforgeValueError("n must be non-negative")
    if i not in algebra.vertices:
        raise HomologyError(f"Unknown vertex: '{i}'")

    module = _FreeModule(algebra, [i])
    syzygy = [
        {c: mpq(1)}
        for c in module.coords
        if not algebra.basis[c[1]].is_trivial()
    ]
    steps = [{i: 1}]
    for l in range(1, n + 1):
        generators = _top(algebra, module, syzygy)
        if not generators:
            break
        steps.append(dict(Counter(v for v, _ in generators)))
        logger.debug("Step %d of the resolution of S_%s: %s", l, i, steps[-1])
        if l < n:
            module, syzygy = _syzygy(algebra, module, generators)

    steps.extend({} for _ in range(n + 1 - len(steps)))
    return Resolution(i, tuple(steps))
