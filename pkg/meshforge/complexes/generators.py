"""Random complexes for property checks of the truncations."""
from typing import Dict

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from meshforge.linalg import domain_matrix, matmul

from .complex import Complex


def random_complex(rng: np.random.Generator, min_degree=-4, max_degree=4, max_dim=5):
    """
    A random complex with ``d^2 = 0`` built from elementary pieces.

    Each degree gets some cohomology summands ``k`` and some acyclic pieces
    ``k --1--> k`` into the next degree; every component is then mixed by a
    random unitriangular base change so the differentials are dense.

    Parameters
    ----------
    rng : numpy.random.Generator
    min_degree, max_degree : int
    max_dim : int
        Upper bound for every component dimension.
    """
    degrees = range(min_degree, max_degree + 1)
    pieces: Dict[int, int] = {j: 0 for j in degrees}
    homology: Dict[int, int] = {}
    for j in degrees:
        used = pieces.get(j - 1, 0)
        if j < max_degree:
            pieces[j] = int(rng.integers(0, max(1, (max_dim - used) // 2 + 1)))
        free = max_dim - used - pieces[j]
        homology[j] = int(rng.integers(0, free + 1)) if free > 0 else 0

    dims = {j: homology[j] + pieces[j] + pieces.get(j - 1, 0) for j in degrees}

    # standard basis of C^j: cohomology, then sources of pieces, then targets
    diffs = {}
    for j in degrees:
        if not pieces[j] or j == max_degree:
            continue
        start_src = homology[j]
        start_tgt = homology[j + 1] + pieces.get(j + 1, 0)
        rows = {start_tgt + k: {start_src + k: 1} for k in range(pieces[j])}
        diffs[j] = domain_matrix(rows, (dims[j + 1], dims[j]))

    change = {j: _unitriangular(rng, dims[j]) for j in degrees}
    mixed = {}
    for j, d in diffs.items():
        mixed[j] = matmul(matmul(change[j + 1], d), change[j].inv())
    return Complex(dims, mixed)


def _unitriangular(rng, n):
    if n == 0:
        return DomainMatrix({}, (0, 0), QQ)
    entries = rng.integers(-2, 3, size=(n, n))
    rows = {
        i: {j: (1 if i == j else int(entries[i, j])) for j in range(i, n)} for i in range(n)
    }
    return domain_matrix(rows, (n, n))
