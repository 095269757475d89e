"""
Ext tables between simple modules and their Calabi-Yau bookkeeping.

The maps in a mesh resolution lie in the radical, so applying
``Hom(-, S_j)`` kills every differential and ``dim Ext^l(S_i, S_j)`` is the
multiplicity of ``P_j`` in step ``l``.
"""
import json
from typing import Dict, Tuple

import numpy as np
import pandas as pd

from meshforge.exceptions import HomologyError, ProjectiveVertexError
from meshforge.logging import get_logger
from meshforge.utils import dataclass

from .resolutions import _translation_quiver, mesh_resolution

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class ExtTable:
    """
    ``dims[(l, i, j)] = dim Ext^l(S_i, S_j)`` for non-projective ``i, j`` and
    ``0 <= l <= d + 1``; missing entries are zero.

    Attributes
    ----------
    d : int
    pi : dict
        The Serre permutation of the non-projective vertices, equal to tau.
    dims : dict
    vertices : tuple of str
    """

    d: int
    pi: Dict[str, str]
    dims: Dict[Tuple[int, str, str], int]
    vertices: Tuple[str, ...]

    def dim(self, l, i, j) -> int:
        return self.dims.get((l, i, j), 0)

    def matrix(self, l) -> np.ndarray:
        """Integer matrix with entry ``(i, j) = dim Ext^l(S_i, S_j)``."""
        n = len(self.vertices)
        out = np.zeros((n, n), dtype=np.int64)
        for a, i in enumerate(self.vertices):
            for b, j in enumerate(self.vertices):
                out[a, b] = self.dim(l, i, j)
        return out

    def to_frame(self) -> pd.DataFrame:
        """One row per ``(l, i, j)``, zeros included."""
        rows = [
            {"l": l, "i": i, "j": j, "dim": self.dim(l, i, j)}
            for l in range(self.d + 2)
            for i in self.vertices
            for j in self.vertices
        ]
        return pd.DataFrame(rows, columns=["l", "i", "j", "dim"])

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "pi": dict(self.pi),
            "dims": self.to_frame().to_dict("records"),
        }

    def to_json(self) -> str:
        data = self.to_dict()
        data["dims"] = [{k: _plain(v) for k, v in row.items()} for row in data["dims"]]
        return json.dumps(data, indent=2, ensure_ascii=False)


def _plain(value):
    return value.item() if hasattr(value, "item") else value


def ext_table(source) -> ExtTable:
    """
    Ext dimensions between the simples at non-projective vertices.

    Parameters
    ----------
    source : :class:`~meshforge.homology.AuslanderPresentation` or :class:`~meshforge.quiver.TranslationQuiver`
    """
    tq = _translation_quiver(source)
    vertices = tuple(tq.non_projective_vertices)
    keep = set(vertices)
    dims = {}
    for i in vertices:
        resolution = mesh_resolution(tq, i)
        for l, step in enumerate(resolution.steps):
            for j, m in step.items():
                if j in keep and m:
                    dims[(l, i, j)] = dims.get((l, i, j), 0) + m
    pi = {i: tq.tau[i] for i in vertices}
    logger.debug("Ext table over %d simples, depth %d", len(vertices), tq.depth)
    return ExtTable(tq.depth, pi, dims, vertices)


def cy_duality_check(table: ExtTable) -> bool:
    """True iff ``dim Ext^l(S_i, S_j) = dim Ext^{d+1-l}(S_j, S_{pi(i)})`` everywhere."""
    top = table.d + 1
    for l in range(top + 1):
        for i in table.vertices:
            for j in table.vertices:
                if table.dim(l, i, j) != table.dim(top - l, j, table.pi[i]):
                    logger.debug("Duality fails at l=%d, i=%s, j=%s", l, i, j)
                    return False
    return True


def _orbit_length(tau, i) -> int:
    n, v = 1, tau.get(i)
    while v != i:
        if v is None or n > len(tau):
            raise HomologyError(f"tau-orbit of '{i}' does not close")
        v = tau.get(v)
        n += 1
    return n


def cy_fraction(tq, i, d=None) -> Tuple[int, int]:
    """
    Fractional Calabi-Yau dimension ``((d + 1) n_i, n_i)`` of ``S_i``.

    ``n_i`` is the length of the tau-orbit of ``i``; the fraction is not
    reduced.

    Raises
    ------
    ProjectiveVertexError
    """
    tq = _translation_quiver(tq)
    if tq.quiver.vertex(i).projective:
        raise ProjectiveVertexError(f"Vertex '{i}' is projective")
    d = tq.depth if d is None else d
    n = _orbit_length(dict(tq.tau), i)
    return (d + 1) * n, n


def serre_image(table: ExtTable, i) -> Tuple[str, int]:
    """The Serre functor sends ``S_i`` to ``S_{pi(i)}`` shifted by ``d + 1``."""
    return table.pi[i], table.d + 1


def serre_orbit_check(table: ExtTable) -> bool:
    """
    ``pi`` permutes the simples, every orbit returns with total shift
    ``n_i (d + 1)``, and the Ext dimensions are invariant under ``pi``.
    """
    if sorted(table.pi.values()) != sorted(table.vertices):
        return False
    for i in table.vertices:
        n = _orbit_length(table.pi, i)
        v, shift = i, 0
        for _ in range(n):
            v, step = serre_image(table, v)
            shift += step
        if v != i or shift != n * (table.d + 1):
            return False
    return all(
        table.dim(l, i, j) == table.dim(l, table.pi[i], table.pi[j])
        for l in range(table.d + 2)
        for i in table.vertices
        for j in table.vertices
    )


def euler_form(table: ExtTable) -> np.ndarray:
    """``chi(S_i, S_j) = sum_l (-1)^l dim Ext^l(S_i, S_j)`` as an integer matrix."""
    out = np.zeros((len(table.vertices),) * 2, dtype=np.int64)
    for l in range(table.d + 2):
        out += (-1) ** l * table.matrix(l)
    return out
