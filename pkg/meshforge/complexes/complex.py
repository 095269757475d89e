"""Bounded cochain complexes of finite-dimensional vector spaces over QQ."""
import json
from typing import Dict, List, Mapping, Optional

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from meshforge.exceptions import ComplexError, NotAComplexError
from meshforge.linalg import domain_matrix, is_zero_matrix, matmul, rank, to_dod
from meshforge.utils import format_rational


class Complex:
    """
    Finite cochain complex ``... -> C^j --d^j--> C^{j+1} -> ...``.

    Parameters
    ----------
    components : mapping
        Degree -> dimension; zero dimensions may be omitted.
    differentials : mapping, optional
        Degree ``j`` -> ``DomainMatrix`` over ``QQ`` of shape
        ``(dim C^{j+1}, dim C^j)``, or a dict-of-dicts of rationals.
        Missing degrees are zero maps.
    labels : mapping, optional
        Degree -> basis labels of that component.
    periodicity : int, optional
        Reporting tag for a window cut out of a periodic complex.

    Raises
    ------
    ComplexError
        Wrong matrix shape or label count.
    NotAComplexError
        ``d^{j+1} d^j != 0`` for some ``j``.
    """

    __slots__ = ["components", "differentials", "labels", "periodicity"]

    def __init__(
        self,
        components: Mapping[int, int],
        differentials: Optional[Mapping[int, object]] = None,
        labels: Optional[Mapping[int, List[str]]] = None,
        periodicity: Optional[int] = None,
    ):
        self.components: Dict[int, int] = {
            int(j): int(n) for j, n in components.items() if n
        }
        self.periodicity = periodicity
        self.labels = {int(j): list(v) for j, v in (labels or {}).items()}

        diffs = {}
        for j, d in (differentials or {}).items():
            shape = (self.dim(j + 1), self.dim(j))
            if not isinstance(d, DomainMatrix):
                d = domain_matrix(d, shape)
            if d.shape != shape:
                raise ComplexError(f"d^{j} has shape {d.shape}, expected {shape}")
            if not is_zero_matrix(d):
                diffs[int(j)] = d.convert_to(QQ)
        self.differentials = diffs

        for j, names in self.labels.items():
            if len(names) != self.dim(j):
                raise ComplexError(f"Component {j} has {self.dim(j)} dims, {len(names)} labels")
        _validate_d_squared(self)

    def __repr__(self):
        return f"<{self.__class__.__name__} components={self.components}>"

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self.components == other.components and self.to_dict()[
            "differentials"
        ] == other.to_dict()["differentials"]

    def dim(self, j) -> int:
        return self.components.get(j, 0)

    def differential(self, j) -> DomainMatrix:
        """``d^j``, a zero matrix where none was given."""
        if j in self.differentials:
            return self.differentials[j]
        return DomainMatrix({}, (self.dim(j + 1), self.dim(j)), QQ)

    @property
    def support(self) -> List[int]:
        """Degrees from the lowest to the highest nonzero component."""
        if not self.components:
            return []
        return list(range(min(self.components), max(self.components) + 1))

    def is_zero(self):
        return not self.components

    def to_dict(self) -> dict:
        data = {
            "components": {str(j): n for j, n in sorted(self.components.items())},
            "differentials": {
                str(j): _matrix_strings(d) for j, d in sorted(self.differentials.items())
            },
        }
        if self.periodicity is not None:
            data["periodicity"] = self.periodicity
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _matrix_strings(d):
    nrows, ncols = d.shape
    dod = to_dod(d)
    return [
        [format_rational(dod.get(i, {}).get(j, 0)) for j in range(ncols)]
        for i in range(nrows)
    ]


def _validate_d_squared(m):
    for j in m.differentials:
        if j + 1 in m.differentials:
            product = matmul(m.differentials[j + 1], m.differentials[j])
            if not is_zero_matrix(product):
                raise NotAComplexError(f"d^{j + 1} d^{j} != 0")


def cohomology_dims(m: Complex) -> Dict[int, int]:
    """``dim H^j = dim C^j - rank d^j - rank d^{j-1}`` over the support."""
    return {
        j: m.dim(j) - rank(m.differential(j)) - rank(m.differential(j - 1))
        for j in m.support
    }
