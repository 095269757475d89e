"""Unit tests for complexes and their truncations."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from meshforge.complexes import (
    Complex,
    brutal_truncate,
    cohomology_dims,
    random_complex,
    std_truncate,
)
from meshforge.exceptions import ComplexError, MeshforgeValueError, NotAComplexError


def _h(m, j):
    return cohomology_dims(m).get(j, 0)


def test_cohomology_of_small_complex():
    """``k --1--> k`` is acyclic; an extra summand survives."""
    m = Complex({0: 2, 1: 1}, {0: {0: {0: 1}}})
    assert cohomology_dims(m) == {0: 1, 1: 0}
    assert m.support == [0, 1]


def test_invalid_complexes():
    with pytest.raises(NotAComplexError):
        Complex({0: 1, 1: 1, 2: 1}, {0: {0: {0: 1}}, 1: {0: {0: 1}}})

    with pytest.raises(ComplexError):
        Complex({0: 1, 1: 1}, {0: DomainMatrix({}, (2, 1), QQ)})

    with pytest.raises(ComplexError):
        Complex({0: 2}, labels={0: ["x"]})


def test_zero_complex():
    m = Complex({})
    assert m.is_zero()
    assert cohomology_dims(m) == {}
    assert std_truncate(m, 0).is_zero()


def test_unknown_side():
    m = Complex({0: 1})
    with pytest.raises(MeshforgeValueError):
        std_truncate(m, 0, side="geq")

    with pytest.raises(MeshforgeValueError):
        brutal_truncate(m, 0, side="gt")


@given(seed=st.integers(min_value=0, max_value=2**32 - 1), i=st.integers(-4, 4))
@settings(max_examples=60, deadline=None)
def test_standard_truncation_cohomology(seed, i):
    """``sigma<=i`` keeps cohomology up to ``i``, ``sigma>i`` the rest."""
    m = random_complex(np.random.default_rng(seed))
    low = std_truncate(m, i, "leq")
    high = std_truncate(m, i, "gt")
    for j in range(-5, 6):
        if j <= i:
            assert _h(low, j) == _h(m, j)
            assert _h(high, j) == 0
        else:
            assert _h(low, j) == 0
            assert _h(high, j) == _h(m, j)


@given(seed=st.integers(min_value=0, max_value=2**32 - 1), i=st.integers(-4, 4))
@settings(max_examples=60, deadline=None)
def test_brutal_truncation_dims(seed, i):
    m = random_complex(np.random.default_rng(seed))
    upper = brutal_truncate(m, i, "geq")
    lower = brutal_truncate(m, i - 1, "leq")
    for j in range(-5, 6):
        assert upper.dim(j) + lower.dim(j) == m.dim(j)


@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_truncations_are_idempotent(seed):
    m = random_complex(np.random.default_rng(seed))
    once = std_truncate(m, 0, "leq")
    twice = std_truncate(once, 0, "leq")
    assert cohomology_dims(twice) == cohomology_dims(once)
    assert brutal_truncate(brutal_truncate(m, 1), 1) == brutal_truncate(m, 1)


def test_random_complex_is_deterministic():
    first = random_complex(np.random.default_rng(7))
    second = random_complex(np.random.default_rng(7))
    assert first == second
    assert first.to_json() == second.to_json()
