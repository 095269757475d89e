"""
Finite-dimensional algebras given by structure constants.

Basis elements carry their endpoints: ``b = e_tgt b e_src``.  Products follow
the path convention, ``b_i * b_j`` runs along ``b_j`` first, and are stored
sparsely as ``mult[(i, j)] = {k: c}``.
"""
import json
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from gmpy2 import mpq

from meshforge.exceptions import (
    EmptyIdempotentError,
    NotStabilizedError,
    PathAlgebraError,
)
from meshforge.utils import dataclass, format_rational

Vector = Dict[int, mpq]


@dataclass(frozen=True, slots=True)
class BasisLabel:
    """Abstract basis element ``label: src -> tgt`` of the given degree."""

    label: str
    src: str
    tgt: str
    degree: int = 0
    trivial: bool = False

    def is_trivial(self):
        return self.trivial

    def __str__(self):
        return self.label


class FinDimAlgebra:
    """
    Basic finite-dimensional algebra with one idempotent per vertex.

    Parameters
    ----------
    vertices : sequence of str
    basis : sequence
        :class:`~meshforge.path_algebra.PathWord` or :class:`BasisLabel`;
        anything with ``src``, ``tgt``, ``degree`` and ``is_trivial()``.
        The trivial elements are the idempotents, the others span the radical.
    mult : dict
        ``(i, j) -> {k: c}`` for nonzero products ``basis[i] * basis[j]``.
    stabilized : bool, default=True
        False when the algebra is a truncation that did not stabilize.
    bound : int, optional
        Word-length bound the algebra was computed at.
    dims_history : sequence, optional
        Block-dimension vectors seen for the bounds that were tried.
    embedding : sequence of int, optional
        For corner algebras, the index of each basis element in the parent.
    """

    __slots__ = [
        "vertices",
        "basis",
        "mult",
        "idempotents",
        "stabilized",
        "bound",
        "dims_history",
        "embedding",
        "_index",
    ]

    def __init__(
        self,
        vertices: Sequence[str],
        basis: Sequence,
        mult: Dict[Tuple[int, int], Vector],
        stabilized=True,
        bound: Optional[int] = None,
        dims_history: Iterable = (),
        embedding: Optional[Sequence[int]] = None,
    ):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.basis = tuple(basis)
        self.mult = {
            key: {k: mpq(c) for k, c in vec.items() if c != 0}
            for key, vec in mult.items()
        }
        self.mult = {key: vec for key, vec in self.mult.items() if vec}
        self.stabilized = bool(stabilized)
        self.bound = bound
        self.dims_history = tuple(dims_history)
        self.embedding = tuple(embedding) if embedding is not None else None

        self.idempotents: Dict[str, int] = {}
        for k, b in enumerate(self.basis):
            if b.is_trivial():
                self.idempotents[b.src] = k
        self._index = {str(b): k for k, b in enumerate(self.basis)}
        _validate_structure(self)

    @classmethod
    def semisimple(cls, vertices) -> "FinDimAlgebra":
        """``k x ... x k``, one copy per vertex."""
        basis = [BasisLabel(f"e({v})", v, v, trivial=True) for v in vertices]
        mult = {(k, k): {k: 1} for k in range(len(basis))}
        return cls(vertices, basis, mult)

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} dim={self.dim} "
            f"vertices={len(self.vertices)} stabilized={self.stabilized}>"
        )

    def __len__(self):
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label) -> int:
        """Position of the basis element printed as `label`."""
        try:
            return self._index[label]
        except KeyError as e:
            raise PathAlgebraError(f"No basis element '{label}'") from e

    def labels(self) -> List[str]:
        return [str(b) for b in self.basis]

    def radical(self) -> List[int]:
        """Indices of the basis elements spanning the Jacobson radical."""
        return [k for k, b in enumerate(self.basis) if not b.is_trivial()]

    def block(self, src, tgt) -> List[int]:
        """Indices of the basis of ``e_tgt A e_src``."""
        return [k for k, b in enumerate(self.basis) if b.src == src and b.tgt == tgt]

    def block_dims(self) -> Dict[Tuple[str, str], int]:
        """``(src, tgt) -> dim e_tgt A e_src`` for every vertex pair."""
        dims = {(s, t): 0 for s in self.vertices for t in self.vertices}
        for b in self.basis:
            dims[(b.src, b.tgt)] += 1
        return dims

    def dims_vector(self) -> Tuple[int, ...]:
        """Block dimensions flattened in vertex order."""
        dims = self.block_dims()
        return tuple(dims[(s, t)] for s in self.vertices for t in self.vertices)

    def product(self, i, j) -> Vector:
        return self.mult.get((i, j), {})

    def multiply(self, x: Vector, y: Vector) -> Vector:
        """Bilinear product of coordinate vectors."""
        out: Vector = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, c in self.mult.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + ci * cj * c
        return {k: c for k, c in out.items() if c != 0}

    def unit(self) -> Vector:
        return {k: mpq(1) for k in self.idempotents.values()}

    def associativity_defects(self, samples=None, seed=0) -> List[Tuple[int, int, int]]:
        """
        Basis triples with ``(xy)z != x(yz)``.

        Every triple is checked when `samples` is None, otherwise `samples`
        random triples drawn with ``numpy.random.default_rng(seed)``.
        """
        n = self.dim
        if n == 0:
            return []
        if samples is None:
            triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
        else:
            rng = np.random.default_rng(seed)
            triples = (tuple(int(t) for t in row) for row in rng.integers(0, n, (samples, 3)))

        defects = []
        for i, j, k in triples:
            x, y, z = {i: mpq(1)}, {j: mpq(1)}, {k: mpq(1)}
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                defects.append((i, j, k))
        return defects

    def to_dict(self) -> dict:
        dims = self.block_dims()
        return {
            "dim": self.dim,
            "stabilized": self.stabilized,
            "bound": self.bound,
            "vertices": list(self.vertices),
            "basis": [
                {"label": str(b), "src": b.src, "tgt": b.tgt, "degree": b.degree}
                for b in self.basis
            ],
            "block_dims": [
                {"src": s, "tgt": t, "dim": dims[(s, t)]}
                for s in self.vertices
                for t in self.vertices
            ],
            "mult": [
                {
                    "left": i,
                    "right": j,
                    "terms": {str(k): format_rational(c) for k, c in sorted(vec.items())},
                }
                for (i, j), vec in sorted(self.mult.items())
            ],
        }

    def to_json(self) -> str:
        """Basis labels, block dims and structure constants as rational strings."""
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def _validate_structure(algebra):
    basis = algebra.basis
    vertices = set(algebra.vertices)
    for b in basis:
        if b.src not in vertices or b.tgt not in vertices:
            raise PathAlgebraError(f"Basis element '{b}' has an unknown endpoint")
    for (i, j), vec in algebra.mult.items():
        left, right = basis[i], basis[j]
        if right.tgt != left.src:
            raise PathAlgebraError(f"'{left}' * '{right}' must vanish")
        for k in vec:
            if (basis[k].src, basis[k].tgt) != (right.src, left.tgt):
                raise PathAlgebraError(f"'{left}' * '{right}' leaves its block")


def cartan_matrix(algebra: FinDimAlgebra) -> np.ndarray:
    """
    Integer matrix with entry ``(j, i) = dim e_j A e_i``, vertex order.

    Raises
    ------
    NotStabilizedError
        For a truncation that has not stabilized.
    """
    if not algebra.stabilized:
        raise NotStabilizedError("Cartan matrix of an algebra that did not stabilize")
    pos = {v: k for k, v in enumerate(algebra.vertices)}
    n = len(algebra.vertices)
    c = np.zeros((n, n), dtype=np.int64)
    for b in algebra.basis:
        c[pos[b.tgt], pos[b.src]] += 1
    return c


def corner_algebra(algebra: FinDimAlgebra, e: Iterable[str]) -> FinDimAlgebra:
    """
    The corner ``eAe`` for the idempotent ``e`` = sum of the given vertices.

    Raises
    ------
    EmptyIdempotentError
    """
    keep = set(e)
    if not keep:
        raise EmptyIdempotentError("Corner algebra needs at least one vertex")
    unknown = keep - set(algebra.vertices)
    if unknown:
        raise PathAlgebraError(f"Unknown vertices: {sorted(unknown)}")

    parent = [
        k for k, b in enumerate(algebra.basis) if b.src in keep and b.tgt in keep
    ]
    new = {p: k for k, p in enumerate(parent)}
    mult = {}
    for (i, j), vec in algebra.mult.items():
        if i in new and j in new:
            mult[(new[i], new[j])] = {new[k]: c for k, c in vec.items()}
    return FinDimAlgebra(
        [v for v in algebra.vertices if v in keep],
        [algebra.basis[p] for p in parent],
        mult,
        stabilized=algebra.stabilized,
        bound=algebra.bound,
        embedding=parent,
    )


class Module:
    """
    Finite-dimensional left module over a :class:`FinDimAlgebra`.

    Coordinates are indexed ``0 .. dim-1`` and each lives at one vertex
    (``vertex_of``).  ``action[b][col] = {row: c}`` means
    ``basis[b] . m_col = sum c m_row``.  Idempotents act as the projections
    onto their vertex and need not be listed.
    """

    __slots__ = ["algebra", "vertex_of", "action"]

    def __init__(self, algebra, vertex_of, action=None):
        self.algebra = algebra
        self.vertex_of: Tuple[str, ...] = tuple(vertex_of)
        act = {}
        for b, columns in (action or {}).items():
            cleaned = {
                col: {r: mpq(c) for r, c in rows.items() if c != 0}
                for col, rows in columns.items()
            }
            act[b] = {col: rows for col, rows in cleaned.items() if rows}
        for v, b in algebra.idempotents.items():
            act[b] = {
                col: {col: mpq(1)} for col, w in enumerate(self.vertex_of) if w == v
            }
        self.action = act

    def __repr__(self):
        return f"<{self.__class__.__name__} dims={self.dims()}>"

    @property
    def dim(self):
        return len(self.vertex_of)

    def dims(self) -> Dict[str, int]:
        out = {v: 0 for v in self.algebra.vertices}
        for v in self.vertex_of:
            out[v] += 1
        return out

    def coordinates_at(self, vertex_id) -> List[int]:
        return [k for k, v in enumerate(self.vertex_of) if v == vertex_id]

    def act(self, b: int, vector: Vector) -> Vector:
        out: Vector = {}
        columns = self.action.get(b, {})
        for col, c in vector.items():
            for row, a in columns.get(col, {}).items():
                out[row] = out.get(row, 0) + c * a
        return {k: c for k, c in out.items() if c != 0}

    def act_element(self, x: Vector, vector: Vector) -> Vector:
        out: Vector = {}
        for b, c in x.items():
            for k, v in self.act(b, vector).items():
                out[k] = out.get(k, 0) + c * v
        return {k: c for k, c in out.items() if c != 0}

    def is_module(self) -> bool:
        """Check ``b.(c.m) = (bc).m`` on all basis elements and coordinates."""
        algebra = self.algebra
        n = algebra.dim
        for col in range(self.dim):
            m = {col: mpq(1)}
            if self.act_element(algebra.unit(), m) != m:
                return False
            for j in range(n):
                cm = self.act(j, m)
                for i in range(n):
                    lhs = self.act(i, cm)
                    rhs = self.act_element(algebra.product(i, j), m)
                    if lhs != rhs:
                        return False
        return True


def simple_module(algebra: FinDimAlgebra, vertex_id) -> Module:
    """The simple ``S_v``: one dimension at `vertex_id`, radical acting by zero."""
    if vertex_id not in algebra.vertices:
        raise PathAlgebraError(f"Unknown vertex: '{vertex_id}'")
    return Module(algebra, [vertex_id])


def projective_module(algebra: FinDimAlgebra, vertex_id) -> Module:
    """The indecomposable projective ``A e_v`` with coordinates the basis of ``A e_v``."""
    coords = [k for k, b in enumerate(algebra.basis) if b.src == vertex_id]
    pos = {k: c for c, k in enumerate(coords)}
    action = {}
    for (i, j), vec in algebra.mult.items():
        if j in pos:
            action.setdefault(i, {})[pos[j]] = {pos[k]: c for k, c in vec.items()}
    return Module(algebra, [algebra.basis[k].tgt for k in coords], action)


def restrict_module(module: Module, e: Iterable[str]) -> Module:
    """
    ``e M`` as a module over the corner ``eAe``.

    The coordinates kept are those at vertices in `e`; restriction is exact
    because ``M`` splits as ``eM + (1-e)M`` as a vector space.
    """
    corner = corner_algebra(module.algebra, e)
    keep = set(corner.vertices)
    coords = [k for k, v in enumerate(module.vertex_of) if v in keep]
    pos = {k: c for c, k in enumerate(coords)}
    action = {}
    for new_b, parent_b in enumerate(corner.embedding):
        columns = module.action.get(parent_b, {})
        action[new_b] = {
            pos[col]: {pos[r]: c for r, c in rows.items()}
            for col, rows in columns.items()
            if col in pos
        }
    return Module(corner, [module.vertex_of[k] for k in coords], action)
