"""Unit tests for augmented dg algebras and Koszul duals."""
import json

import pytest

from meshforge.exceptions import (
    InfiniteDimensionalError,
    KoszulError,
    MeshforgeValueError,
    NotAugmentedError,
)
from meshforge.homology import min_proj_resolution
from meshforge.koszul import (
    AugmentedDgAlgebra,
    bar_boundary,
    check_d_squared,
    koszul_cohomology,
    koszul_dual,
)
from meshforge.path_algebra import BasisLabel, FinDimAlgebra


def _blocks(cohomology):
    return {n: entry.blocks for n, entry in cohomology.items()}


@pytest.fixture
def a3_path_algebra():
    """Path algebra of ``1 -> 2 -> 3``; basis e1, e2, e3, alpha, beta, beta alpha."""
    basis = [
        BasisLabel("e(1)", "1", "1", trivial=True),
        BasisLabel("e(2)", "2", "2", trivial=True),
        BasisLabel("e(3)", "3", "3", trivial=True),
        BasisLabel("alpha", "1", "2"),
        BasisLabel("beta", "2", "3"),
        BasisLabel("beta alpha", "1", "3"),
    ]
    mult = {
        (0, 0): {0: 1},
        (1, 1): {1: 1},
        (2, 2): {2: 1},
        (3, 0): {3: 1},
        (1, 3): {3: 1},
        (4, 1): {4: 1},
        (2, 4): {4: 1},
        (5, 0): {5: 1},
        (2, 5): {5: 1},
        (4, 3): {5: 1},
    }
    return FinDimAlgebra(["1", "2", "3"], basis, mult)


@pytest.fixture
def acyclic_dg():
    """``x`` in degree -1 with ``d(x) = y``, all products in the ideal zero."""
    basis = [
        BasisLabel("e(1)", "1", "1", trivial=True),
        BasisLabel("x", "1", "1", -1),
        BasisLabel("y", "1", "1", 0),
    ]
    mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1}}
    return AugmentedDgAlgebra(["1"], basis, mult, {1: {2: 1}})


def test_semisimple(kxk):
    """The Koszul dual of k x k is k x k again."""
    E = koszul_dual(AugmentedDgAlgebra.from_algebra(kxk), 4)
    assert E.generators == ()
    cohomology = koszul_cohomology(E, [0, 1, 2])
    assert _blocks(cohomology) == {0: {("1", "1"): 1, ("2", "2"): 1}, 1: {}, 2: {}}
    assert all(entry.stabilized for entry in cohomology.values())


def test_dual_numbers(dual_numbers):
    """One class in every degree: the dual of k[x]/x^2 is k[t]."""
    E = koszul_dual(AugmentedDgAlgebra.from_algebra(dual_numbers), 6)
    assert [(g.id, g.degree) for g in E.generators] == [("f1", 1)]
    assert E.diff == {"f1": {}}

    cohomology = koszul_cohomology(E, range(5))
    assert [cohomology[n].dim for n in range(5)] == [1, 1, 1, 1, 1]
    assert all(entry.stabilized for entry in cohomology.values())
    assert check_d_squared(E)


def test_single_arrow(a2_path_algebra):
    E = koszul_dual(AugmentedDgAlgebra.from_algebra(a2_path_algebra), 4)
    assert E.arrow_counts() == {("1", "2"): 1}
    assert E.quiver().arrow_counts(1) == {("1", "2"): 1}

    cohomology = koszul_cohomology(E, [0, 1, 2])
    assert _blocks(cohomology) == {
        0: {("1", "1"): 1, ("2", "2"): 1},
        1: {("1", "2"): 1},
        2: {},
    }


def test_composite_is_killed(a3_path_algebra):
    """The generator dual to ``beta alpha`` has differential ``f_beta f_alpha``."""
    algebra = AugmentedDgAlgebra.from_algebra(a3_path_algebra)
    assert bar_boundary(algebra, (4, 3)) == {(5,): 1}

    E = koszul_dual(algebra, 4)
    assert E.diff["f5"] == {("f4", "f3"): 1}
    assert E.diff["f3"] == {}

    cohomology = koszul_cohomology(E, [1, 2])
    assert cohomology[1].blocks == {("1", "2"): 1, ("2", "3"): 1}
    assert cohomology[2].dim == 0
    assert check_d_squared(E)


def test_acyclic_augmentation_ideal(acyclic_dg):
    E = koszul_dual(acyclic_dg, 4)
    assert {g.id: g.degree for g in E.generators} == {"f1": 2, "f2": 1}
    assert E.diff["f2"] == {("f1",): -1}
    assert check_d_squared(E)

    cohomology = koszul_cohomology(E, [0, 1, 2])
    assert [cohomology[n].dim for n in range(3)] == [1, 0, 0]


def test_preprojective_matches_resolutions(preprojective_a2):
    """Koszul dual cohomology equals the Ext dimensions of the simples."""
    E = koszul_dual(AugmentedDgAlgebra.from_algebra(preprojective_a2), 6)
    cohomology = koszul_cohomology(E, range(4))

    expected = {n: {} for n in range(4)}
    for i in preprojective_a2.vertices:
        resolution = min_proj_resolution(preprojective_a2, i, 3)
        for (l, j), m in resolution.ext_dims().items():
            expected[l][(i, j)] = m
    assert _blocks(cohomology) == expected
    assert check_d_squared(E)


def test_from_dict_matches_to_dict(acyclic_dg):
    data = json.loads(acyclic_dg.to_json())
    assert data["augmentation"] == {"0": "1"}
    assert AugmentedDgAlgebra.from_dict(data).to_dict() == acyclic_dg.to_dict()


def test_invalid_algebras(dual_numbers):
    with pytest.raises(NotAugmentedError):
        AugmentedDgAlgebra(["1", "2"], [BasisLabel("e(1)", "1", "1", trivial=True)], {})

    basis = [BasisLabel("e(1)", "1", "1", trivial=True), BasisLabel("z", "1", "1", 1)]
    with pytest.raises(KoszulError):
        AugmentedDgAlgebra(["1"], basis, {(0, 0): {0: 1}})

    truncated = FinDimAlgebra(
        dual_numbers.vertices, dual_numbers.basis, dual_numbers.mult, stabilized=False
    )
    with pytest.raises(InfiniteDimensionalError):
        AugmentedDgAlgebra.from_algebra(truncated)

    with pytest.raises(MeshforgeValueError):
        koszul_dual(AugmentedDgAlgebra.from_algebra(dual_numbers), 1)

    E = koszul_dual(AugmentedDgAlgebra.from_algebra(dual_numbers), 3)
    with pytest.raises(MeshforgeValueError):
        koszul_cohomology(E, [3])
