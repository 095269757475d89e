"""Unit tests for the ADE generators and canonical forms."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meshforge.exceptions import InvalidDynkinIndexError
from meshforge.quiver import (
    Arrow,
    GradedQuiver,
    TranslationQuiver,
    Vertex,
    ade_translation_quiver,
    canonical_form,
    curve_fixture,
    dynkin_cartan_matrix,
    validate_translation_quiver,
)


def _solid_count(tq):
    return sum(1 for a in tq.quiver.arrows if a.degree == 0)


def _expected_counts(family, n, krull_dim):
    """(vertices, solid arrows or None) for one generator."""
    if krull_dim % 2 == 0:
        return n, 2 * (n - 1)
    if family == "A":
        if n == 1:
            return 2, 0
        if n % 2 == 0:
            m = n // 2
            return m, 2 * (m - 1) + 1
        m = (n + 1) // 2
        return m + 1, 2 * m
    if family == "D":
        if n % 2:
            return 4 * ((n - 1) // 2) - 1, None
        return 4 * (n // 2), None
    return {6: 6, 7: 14, 8: 16}[n], None


GENERATORS = (
    [("A", n, d) for n in range(1, 13) for d in (1, 2)]
    + [("D", n, d) for n in range(4, 13) for d in (1, 2)]
    + [("E", n, d) for n in (6, 7, 8) for d in (1, 2)]
)


@pytest.mark.parametrize("family,index,krull_dim", GENERATORS)
def test_generator_counts_and_laws(family, index, krull_dim):
    """Vertex and arrow counts, stability and the mesh laws of every generator."""
    tq = ade_translation_quiver(family, index, krull_dim)
    vertices, arrows = _expected_counts(family, index, krull_dim)

    assert len(tq.vertex_ids) == vertices
    if arrows is not None:
        assert _solid_count(tq) == arrows
    assert tq.is_stable()
    assert validate_translation_quiver(tq).ok
    assert all(tq.tau[tq.tau[v]] == v for v in tq.vertex_ids)


def test_odd_a1():
    tq = ade_translation_quiver("A", 1, 1)
    assert tq.vertex_ids == ("1", "2")
    assert _solid_count(tq) == 0
    assert dict(tq.tau) == {"1": "2", "2": "1"}


def test_even_tau_is_identity(even_a3):
    assert all(even_a3.tau[v] == v for v in even_a3.vertex_ids)
    assert even_a3.sigma["a1"] == "a1*"
    assert even_a3.sigma["a1*"] == "a1"


def test_invalid_indices():
    with pytest.raises(InvalidDynkinIndexError):
        ade_translation_quiver("D", 3, 1)

    with pytest.raises(InvalidDynkinIndexError):
        ade_translation_quiver("E", 9, 0)

    with pytest.raises(InvalidDynkinIndexError):
        ade_translation_quiver("Z", 2, 0)

    with pytest.raises(InvalidDynkinIndexError):
        ade_translation_quiver("A", 0, 0)

    with pytest.raises(InvalidDynkinIndexError):
        ade_translation_quiver("A", 2, -1)


@given(
    index=st.integers(min_value=1, max_value=8),
    krull_dim=st.integers(min_value=0, max_value=9),
)
@settings(max_examples=30, deadline=None)
def test_knorrer_periodicity(index, krull_dim):
    """Only the parity of the Krull dimension matters."""
    tq = ade_translation_quiver("A", index, krull_dim)
    shifted = ade_translation_quiver("A", index, krull_dim + 2)
    assert canonical_form(tq) == canonical_form(shifted)


def test_parities_differ():
    odd = ade_translation_quiver("A", 3, 1)
    even = ade_translation_quiver("A", 3, 2)
    assert _solid_count(odd) == _solid_count(even) == 4
    assert canonical_form(odd) != canonical_form(even)


def test_canonical_form_ignores_names(even_a2):
    """Renaming vertices and arrows does not change the canonical form."""
    quiver = GradedQuiver(
        [Vertex("y"), Vertex("x")],
        [Arrow("g", "g", "y", "x"), Arrow("f", "f", "x", "y")],
    )
    renamed = TranslationQuiver(
        quiver, {"x": "x", "y": "y"}, {"f": "g", "g": "f"}
    )
    assert canonical_form(renamed) == canonical_form(even_a2)


def test_canonical_form_is_idempotent(conifold):
    form = canonical_form(conifold)
    assert canonical_form(form) == form
    assert form.vertex_ids == ("0", "1", "2")


def test_cartan_matrix():
    expected = np.array([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    np.testing.assert_array_equal(dynkin_cartan_matrix("A", 3), expected)
    assert dynkin_cartan_matrix("E", 8).sum() == 2 * 8 - 2 * 7


def test_curve_fixture():
    tq = curve_fixture(3)
    assert tq.vertex_ids == ("1", "2", "3", "4")
    assert tq.projective_vertices == ("4",)
    assert validate_translation_quiver(tq).ok
    assert tq.stable_part().is_stable()

    with pytest.raises(InvalidDynkinIndexError):
        curve_fixture(0)
