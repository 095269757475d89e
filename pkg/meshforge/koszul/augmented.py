"""
Augmented dg algebras: finite-dimensional, non-positively graded, split as
``K + A-bar`` with ``K`` one copy of the base field per vertex.
"""
import json
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from meshforge.exceptions import (
    InfiniteDimensionalError,
    KoszulError,
    NotAugmentedError,
)
from meshforge.path_algebra import BasisLabel, FinDimAlgebra
from meshforge.utils import format_rational, parse_rational

Vector = Dict[int, mpq]


class AugmentedDgAlgebra:
    """
    A finite-dimensional dg algebra with multiplication and differential only.

    Parameters
    ----------
    vertices : sequence of str
    basis : sequence
        Basis elements with ``src``, ``tgt``, ``degree`` and ``is_trivial()``;
        exactly one trivial element per vertex (the augmentation ``K``), the
        rest spanning ``A-bar``.
    mult : dict
        ``(i, j) -> {k: c}`` for ``basis[i] * basis[j]``, right factor first.
    diff : dict, optional
        ``i -> {k: c}`` for ``d(basis[i])``, of degree +1.

    Raises
    ------
    NotAugmentedError
        A vertex has no idempotent, or ``A-bar`` is not closed under the
        product or the differential.
    KoszulError
        A basis element has positive degree or ``d`` does not raise degree by 1.
    """

    __slots__ = ["vertices", "basis", "mult", "diff", "idempotents", "augmentation"]

    def __init__(
        self,
        vertices: Sequence[str],
        basis: Sequence,
        mult: Dict[Tuple[int, int], Vector],
        diff: Optional[Dict[int, Vector]] = None,
    ):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.basis = tuple(basis)
        self.mult = {
            key: {k: mpq(c) for k, c in vec.items() if c != 0} for key, vec in mult.items()
        }
        self.mult = {key: vec for key, vec in self.mult.items() if vec}
        self.diff = {
            i: {k: mpq(c) for k, c in vec.items() if c != 0}
            for i, vec in (diff or {}).items()
        }
        self.diff = {i: vec for i, vec in self.diff.items() if vec}
        self.idempotents: Dict[str, int] = {}
        for k, b in enumerate(self.basis):
            if b.is_trivial():
                self.idempotents[b.src] = k
        self.augmentation = {k: v for v, k in self.idempotents.items()}
        _validate_augmented(self)

    @classmethod
    def from_algebra(cls, algebra: FinDimAlgebra) -> "AugmentedDgAlgebra":
        """
        An algebra concentrated in degree 0, augmented by its radical.

        Raises
        ------
        InfiniteDimensionalError
            The algebra is a truncation that did not stabilize.
        """
        if not algebra.stabilized:
            raise InfiniteDimensionalError(
                "Koszul duals need a stabilized finite-dimensional algebra"
            )
        basis = [
            BasisLabel(str(b), b.src, b.tgt, 0, b.is_trivial()) for b in algebra.basis
        ]
        return cls(algebra.vertices, basis, algebra.mult)

    @classmethod
    def from_dict(cls, data) -> "AugmentedDgAlgebra":
        basis = [
            BasisLabel(
                b["label"], str(b["src"]), str(b["tgt"]), int(b.get("degree", 0)),
                bool(b.get("trivial", False)),
            )
            for b in data["basis"]
        ]
        mult = {
            (int(m["left"]), int(m["right"])): {
                int(k): parse_rational(c) for k, c in m["terms"].items()
            }
            for m in data.get("mult", [])
        }
        diff = {
            int(i): {int(k): parse_rational(c) for k, c in terms.items()}
            for i, terms in data.get("diff", {}).items()
        }
        return cls([str(v) for v in data["vertices"]], basis, mult, diff)

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} dim={self.dim} "
            f"vertices={len(self.vertices)}>"
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def augmentation_ideal(self) -> List[int]:
        """Indices of the basis of ``A-bar``."""
        return [k for k, b in enumerate(self.basis) if not b.is_trivial()]

    def product(self, i, j) -> Vector:
        return self.mult.get((i, j), {})

    def differential(self, i) -> Vector:
        return self.diff.get(i, {})

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "basis": [
                {
                    "label": str(b),
                    "src": b.src,
                    "tgt": b.tgt,
                    "degree": b.degree,
                    "trivial": b.is_trivial(),
                }
                for b in self.basis
            ],
            "mult": [
                {
                    "left": i,
                    "right": j,
                    "terms": {str(k): format_rational(c) for k, c in sorted(vec.items())},
                }
                for (i, j), vec in sorted(self.mult.items())
            ],
            "diff": {
                str(i): {str(k): format_rational(c) for k, c in sorted(vec.items())}
                for i, vec in sorted(self.diff.items())
            },
            "augmentation": {str(k): v for k, v in sorted(self.augmentation.items())},
        }

    def to_json(self) -> str:
        """Graded basis, structure constants as rational strings, augmentation map."""
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def _validate_augmented(algebra):
    basis = algebra.basis
    n = len(basis)
    missing = set(algebra.vertices) - set(algebra.idempotents)
    if missing:
        raise NotAugmentedError(f"No idempotent at vertices {sorted(missing)}")
    for k, b in enumerate(basis):
        if b.degree > 0:
            raise KoszulError(f"Basis element '{b}' has positive degree {b.degree}")
        if b.is_trivial() and b.degree != 0:
            raise NotAugmentedError(f"Idempotent '{b}' must have degree 0")

    trivial = set(algebra.augmentation)
    for (i, j), vec in algebra.mult.items():
        if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in vec):
            raise KoszulError(f"Structure constant ({i}, {j}) out of range")
        if i not in trivial and j not in trivial and trivial.intersection(vec):
            raise NotAugmentedError(
                f"'{basis[i]}' * '{basis[j]}' leaves the augmentation ideal"
            )
        for k in vec:
            if basis[k].degree != basis[i].degree + basis[j].degree:
                raise KoszulError(f"'{basis[i]}' * '{basis[j]}' is not homogeneous")
    for i, vec in algebra.diff.items():
        if i in trivial:
            raise NotAugmentedError(f"Idempotent '{basis[i]}' has nonzero differential")
        for k in vec:
            if k in trivial:
                raise NotAugmentedError(f"d('{basis[i]}') leaves the augmentation ideal")
            if basis[k].degree != basis[i].degree + 1:
                raise KoszulError(f"d('{basis[i]}') does not raise degree by 1")
