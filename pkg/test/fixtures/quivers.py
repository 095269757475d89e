import pytest

from meshforge.dg import dg_auslander
from meshforge.quiver import ade_translation_quiver, load_fixture


@pytest.fixture(scope="session")
def intro_a1():
    """Two-vertex quiver with one projective vertex and one mesh."""
    return load_fixture("intro_a1")


@pytest.fixture(scope="session")
def conifold():
    return load_fixture("conifold")


@pytest.fixture(scope="session")
def curve_a2():
    """Doubled chain 1 - 2 - 3 with vertex 3 projective."""
    return load_fixture("curve_a2")


@pytest.fixture(scope="session")
def even_a2():
    return ade_translation_quiver("A", 2, 2)


@pytest.fixture(scope="session")
def even_a3():
    return ade_translation_quiver("A", 3, 2)


@pytest.fixture(scope="session")
def odd_a1():
    return ade_translation_quiver("A", 1, 1)


@pytest.fixture(scope="session")
def dg_even_a2(even_a2):
    return dg_auslander(even_a2, 6)


@pytest.fixture(scope="session")
def dg_even_a3(even_a3):
    return dg_auslander(even_a3, 6)
