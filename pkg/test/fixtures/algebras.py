import pytest

from meshforge.homology import auslander_algebra, stable_algebra
from meshforge.path_algebra import BasisLabel, FinDimAlgebra


@pytest.fixture(scope="session")
def dual_numbers():
    """``k[x] / x^2`` on a single vertex."""
    basis = [BasisLabel("e(1)", "1", "1", trivial=True), BasisLabel("x", "1", "1")]
    mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    return FinDimAlgebra(["1"], basis, mult)


@pytest.fixture(scope="session")
def kxk():
    return FinDimAlgebra.semisimple(["1", "2"])


@pytest.fixture(scope="session")
def a2_path_algebra():
    """Path algebra of ``1 -> 2``."""
    basis = [
        BasisLabel("e(1)", "1", "1", trivial=True),
        BasisLabel("e(2)", "2", "2", trivial=True),
        BasisLabel("alpha", "1", "2"),
    ]
    mult = {
        (0, 0): {0: 1},
        (1, 1): {1: 1},
        (2, 0): {2: 1},
        (1, 2): {2: 1},
    }
    return FinDimAlgebra(["1", "2"], basis, mult)


@pytest.fixture(scope="session")
def curve_a2_auslander(curve_a2):
    return auslander_algebra(curve_a2, 7)


@pytest.fixture(scope="session")
def preprojective_a2(curve_a2_auslander):
    """Stable Auslander algebra of ``curve_a2``: the preprojective algebra of A_2."""
    return stable_algebra(curve_a2_auslander)
