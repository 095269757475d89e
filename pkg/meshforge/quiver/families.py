"""
Stable translation quivers of the simply-laced ADE singularities.

By Knoerrer periodicity the stable category of an ADE singularity only
depends on the parity of its Krull dimension, so each Dynkin type has two
generators.  Even dimension: the doubled Dynkin quiver with ``tau = id``.
Odd dimension: the quivers below, with ``tau`` an involution.

Arrow ids are ASCII (``a1``, ``a1*``, ``g``); labels carry TeX.
"""
import os
from typing import Dict, List, Tuple

import numpy as np

from meshforge.constants import Family, Parity
from meshforge.exceptions import InvalidDynkinIndexError
from meshforge.logging import get_logger
from meshforge.utils import cache

from .graded import Arrow, GradedQuiver, Vertex
from .io import load_quiver
from .translation import TranslationQuiver

logger = get_logger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "quivers")

_E_RANKS = (6, 7, 8)


def _check_dynkin(family, n) -> Family:
    try:
        family = Family(str(family).upper())
    except ValueError as e:
        raise InvalidDynkinIndexError(f"Unknown Dynkin family: '{family}'") from e
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InvalidDynkinIndexError(f"Dynkin index must be an integer, got {n!r}")
    valid = {
        Family.A: n >= 1,
        Family.D: n >= 4,
        Family.E: n in _E_RANKS,
    }[family]
    if not valid:
        raise InvalidDynkinIndexError(f"{family}_{n} is not a simply-laced Dynkin type")
    return family


def dynkin_edges(family, n) -> List[Tuple[int, int]]:
    """
    Oriented edges ``(i, j)`` of the Dynkin diagram on vertices ``1..n``.

    A_n is the chain; D_n has the fork ``1 -> 3 <- 2``; E_n hangs vertex 1
    off vertex 4 of the chain ``2 .. n``.
    """
    family = _check_dynkin(family, n)
    if family == Family.A:
        return [(j, j + 1) for j in range(1, n)]
    if family == Family.D:
        return [(1, 3), (2, 3)] + [(j, j + 1) for j in range(3, n)]
    return [(1, 4)] + [(j, j + 1) for j in range(2, n)]


def dynkin_cartan_matrix(family, n) -> np.ndarray:
    """Symmetric Cartan matrix ``2I - adjacency`` of the Dynkin diagram."""
    c = 2 * np.eye(n, dtype=np.int64)
    for i, j in dynkin_edges(family, n):
        c[i - 1, j - 1] -= 1
        c[j - 1, i - 1] -= 1
    return c


@cache
def ade_translation_quiver(family, index, krull_dim) -> TranslationQuiver:
    """
    Stable translation quiver of the ADE singularity of the given type.

    Parameters
    ----------
    family : {"A", "D", "E"}
    index : int
    krull_dim : int
        Only its parity matters.

    Returns
    -------
    :class:`TranslationQuiver`
        Degree 0 part only; the dashed arrows are added by
        :func:`meshforge.dg.dg_auslander`.

    Raises
    ------
    InvalidDynkinIndexError
    """
    family = _check_dynkin(family, index)
    if isinstance(krull_dim, bool) or not isinstance(krull_dim, int) or krull_dim < 0:
        raise InvalidDynkinIndexError(f"Krull dimension must be >= 0, got {krull_dim!r}")

    parity = Parity.of(krull_dim)
    logger.debug("Building %s_%s for parity %s", family, index, parity)

    if parity == Parity.EVEN:
        return _even_quiver(family, index)
    if family == Family.A:
        return _odd_a(index)
    if family == Family.D:
        return _odd_d(index)
    return load_quiver(os.path.join(DATA_DIR, f"odd_e{index}.json"))


def curve_fixture(n) -> TranslationQuiver:
    """
    Full translation quiver of an A_n curve-type category.

    The doubled chain on ``1 .. n+1`` with ``n+1`` projective and ``tau``
    fixing ``1 .. n``.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidDynkinIndexError(f"curve fixture needs n >= 1, got {n!r}")
    builder = _Builder()
    for j in range(1, n + 2):
        builder.vertex(j, projective=j == n + 1)
    for j in range(1, n + 1):
        builder.pair(j, j, j + 1)
    for j in range(1, n + 1):
        builder.tau[str(j)] = str(j)
    for j in range(1, n + 1):
        builder.sigma[f"a{j}"] = f"a{j}*"
        if j < n:
            builder.sigma[f"a{j}*"] = f"a{j}"
    return builder.build()


def _even_quiver(family, n):
    builder = _Builder()
    for v in range(1, n + 1):
        builder.vertex(v)
        builder.tau[str(v)] = str(v)
    for k, (i, j) in enumerate(dynkin_edges(family, n), start=1):
        builder.pair(k, i, j)
        builder.sigma[f"a{k}"] = f"a{k}*"
        builder.sigma[f"a{k}*"] = f"a{k}"
    return builder.build()


def _odd_a(n):
    builder = _Builder()
    if n == 1:
        builder.vertex(1)
        builder.vertex(2)
        builder.tau.update({"1": "2", "2": "1"})
        return builder.build()

    if n % 2 == 0:
        m = n // 2
        for v in range(1, m + 1):
            builder.vertex(v)
            builder.tau[str(v)] = str(v)
        for j in range(1, m):
            builder.pair(j, j, j + 1)
            builder.sigma[f"a{j}"] = f"a{j}*"
            builder.sigma[f"a{j}*"] = f"a{j}"
        builder.arrow("g", r"\gamma", m, m)
        builder.sigma["g"] = "g"
        return builder.build()

    m = (n + 1) // 2
    for v in range(1, m + 2):
        builder.vertex(v)
    builder.pair(1, 1, 3)
    builder.pair(2, 2, 3)
    for j in range(3, m + 1):
        builder.pair(j, j, j + 1)
    builder.tau.update({"1": "2", "2": "1"})
    for v in range(3, m + 2):
        builder.tau[str(v)] = str(v)
    builder.sigma.update({"a1": "a2*", "a2": "a1*", "a1*": "a1", "a2*": "a2"})
    for j in range(3, m + 1):
        builder.sigma[f"a{j}"] = f"a{j}*"
        builder.sigma[f"a{j}*"] = f"a{j}"
    return builder.build()


def _odd_d(n):
    """
    Odd-dimensional D_n on vertices ``0 .. 4m-2`` (n = 2m+1) or ``0 .. 4m-1``
    (n = 2m).

    Both share a ladder of rows ``j``: ``a_j: j -> j+2`` and
    ``a_j*: j+1 -> j`` (j odd) or ``j+3 -> j`` (j even), with
    ``sigma(a_j) = a_{j+1}*`` (j even), ``a_{j-1}*`` (j odd) and
    ``sigma(a_j*) = a_j``.  Only the tail differs.
    """
    builder = _Builder()
    odd = n % 2 == 1
    m = (n - 1) // 2 if odd else n // 2
    top = 4 * m - 2 if odd else 4 * m - 1
    rows = 4 * m - 4 if odd else 4 * m - 6

    for v in range(top + 1):
        builder.vertex(v)
    for v in range(0, top, 2):
        builder.tau.update({str(v): str(v + 1), str(v + 1): str(v)})
    if odd:
        builder.tau[str(top)] = str(top)

    for j in range(rows):
        builder.arrow(f"a{j}", rf"\alpha_{{{j}}}", j, j + 2)
        builder.sigma[f"a{j}"] = f"a{j + 1}*" if j % 2 == 0 else f"a{j - 1}*"
    for j in range(rows):
        src = j + 1 if j % 2 else j + 3
        builder.arrow(f"a{j}*", rf"\alpha^*_{{{j}}}", src, j)
        builder.sigma[f"a{j}*"] = f"a{j}"

    if odd:
        k = 4 * m - 4
        tail = [
            (f"a{k}", k + 2, k, f"a{k}*"),
            (f"a{k}*", k, k + 2, f"a{k + 1}*"),
            (f"a{k + 1}*", k + 2, k + 1, f"a{k + 1}"),
            (f"a{k + 1}", k + 1, k + 2, f"a{k}"),
        ]
    else:
        k = 4 * m
        tail = [
            (f"a{k - 4}*", k - 5, k - 4, f"a{k - 4}"),
            (f"a{k - 1}*", k - 6, k - 1, f"a{k - 1}"),
            (f"a{k - 4}", k - 4, k - 6, f"a{k - 6}"),
            (f"a{k - 6}", k - 6, k - 3, f"a{k - 3}"),
            (f"a{k - 5}", k - 5, k - 2, f"a{k - 2}"),
            (f"a{k - 1}", k - 1, k - 5, f"a{k - 5}"),
            (f"a{k - 2}", k - 2, k - 6, f"a{k - 1}*"),
            (f"a{k - 3}", k - 3, k - 5, f"a{k - 4}*"),
        ]
    for arrow_id, src, tgt, partner in tail:
        builder.arrow(arrow_id, _label(arrow_id), src, tgt)
        builder.sigma[arrow_id] = partner
    return builder.build()


def _label(arrow_id):
    index = arrow_id[1:].rstrip("*")
    if arrow_id.endswith("*"):
        return rf"\alpha^*_{{{index}}}"
    return rf"\alpha_{{{index}}}"


class _Builder:
    def __init__(self):
        self.vertices: List[Vertex] = []
        self.arrows: List[Arrow] = []
        self.tau: Dict[str, str] = {}
        self.sigma: Dict[str, str] = {}

    def vertex(self, v, projective=False):
        self.vertices.append(Vertex(str(v), projective))

    def arrow(self, arrow_id, label, src, tgt):
        self.arrows.append(Arrow(arrow_id, label, str(src), str(tgt)))

    def pair(self, k, i, j):
        """Add ``a_k: i -> j`` and ``a_k*: j -> i``."""
        self.arrow(f"a{k}", _label(f"a{k}"), i, j)
        self.arrow(f"a{k}*", _label(f"a{k}*"), j, i)

    def build(self):
        quiver = GradedQuiver(self.vertices, self.arrows)
        return TranslationQuiver(quiver, self.tau, self.sigma)
