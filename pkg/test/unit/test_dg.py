"""Unit tests for dg Auslander algebras, their cohomology and perturbations."""
import pytest

from meshforge.dg import (
    PaddingTerm,
    Perturbation,
    apply_differential,
    check_d_squared,
    dg_auslander,
    dg_cohomology_dims,
    h0,
    load_perturbations,
    mesh_relation,
    perturb_gamma,
)
from meshforge.exceptions import (
    DgPresentationError,
    IncompatibleEndpointsError,
    MeshforgeValueError,
    MeshUndefinedError,
    NonUnitScalarError,
    NotStableError,
    ValidationFailedError,
)
from meshforge.path_algebra import PathWord, TruncatedElement, format_element
from meshforge.quiver import ade_translation_quiver


def test_mesh_relation(even_a3, intro_a1):
    assert format_element(mesh_relation(even_a3, "2")) == "a1 a1* + a2* a2"
    assert format_element(mesh_relation(even_a3, "1")) == "a1* a1"
    assert format_element(mesh_relation(intro_a1, "2")) == "p i"

    with pytest.raises(MeshUndefinedError):
        mesh_relation(intro_a1, "1")


def test_mesh_relation_with_coefficients(conifold):
    x = mesh_relation(conifold, "+")
    assert format_element(x) == "c1 a1 - c2 a2"
    assert x.endpoints == {("+", "-")}


def test_odd_a1_presentation(odd_a1):
    """Two dashed arrows swapping the vertices and no differential."""
    dg = dg_auslander(odd_a1, 4)
    dashed = dg.quiver.degree_part(-1).arrows
    assert [(a.src, a.tgt) for a in dashed] == [("1", "2"), ("2", "1")]
    assert dg.diff == {}
    assert check_d_squared(dg)


def test_even_a2_presentation(dg_even_a2):
    quiver = dg_even_a2.quiver
    assert quiver.arrow_counts(0) == {("1", "2"): 1, ("2", "1"): 1}
    assert quiver.arrow_counts(-1) == {("1", "1"): 1, ("2", "2"): 1}
    assert dg_even_a2.rho == {"1": "r1", "2": "r2"}
    assert format_element(dg_even_a2.differential_of("r1")) == "a1* a1"
    assert dg_even_a2.differential_of("a1").is_zero()


def test_dg_auslander_needs_stable_quiver(intro_a1, conifold):
    with pytest.raises(NotStableError):
        dg_auslander(intro_a1, 4)

    with pytest.raises(NotStableError):
        dg_auslander(conifold, 4)

    even = ade_translation_quiver("A", 2, 0)
    broken = even.replace(sigma={"a1": "a1*"})
    with pytest.raises(ValidationFailedError):
        dg_auslander(broken, 4)


@pytest.mark.parametrize(
    "family,index,krull_dim",
    [("A", 3, 0), ("A", 4, 1), ("A", 5, 1), ("D", 4, 0), ("D", 5, 1), ("E", 6, 1)],
)
def test_d_squared_vanishes(family, index, krull_dim):
    dg = dg_auslander(ade_translation_quiver(family, index, krull_dim), 5)
    assert check_d_squared(dg)


def test_leibniz_rule(dg_even_a2):
    """Degree -1 letters pass the differential with a sign."""
    quiver = dg_even_a2.quiver
    bound = dg_even_a2.bound

    def word(text):
        return TruncatedElement.from_word(PathWord.of(quiver, text.split()), bound)

    assert apply_differential(dg_even_a2, word("r1 a1*")) == word("a1* a1 a1*")
    assert apply_differential(dg_even_a2, word("a1 r1")) == word("a1 a1* a1")
    assert apply_differential(dg_even_a2, word("r1 r1")) == word("a1* a1 r1") - word(
        "r1 a1* a1"
    )
    assert apply_differential(dg_even_a2, word("a1")).is_zero()


def test_invalid_differential(dg_even_a2):
    """A differential must be homogeneous of degree one more than its generator."""
    quiver = dg_even_a2.quiver
    wrong = TruncatedElement.from_word(PathWord.of(quiver, ["r1"]), dg_even_a2.bound)
    with pytest.raises(DgPresentationError):
        dg_even_a2.replace(diff={"r1": wrong})


@pytest.mark.parametrize("index,dim", [(1, 1), (2, 4), (3, 10), (4, 20)])
def test_h0_even_a(index, dim):
    dg = dg_auslander(ade_translation_quiver("A", index, 2), 2 * index + 2)
    algebra = h0(dg, dg.bound)
    assert algebra.stabilized
    assert algebra.dim == dim


def test_h0_odd_a1(odd_a1):
    algebra = h0(dg_auslander(odd_a1, 4), 4)
    assert algebra.dim == 2
    assert algebra.stabilized


def test_cohomology_window_odd_a1(odd_a1):
    """Without solid arrows every word is a cocycle: two per degree."""
    dims = dg_cohomology_dims(dg_auslander(odd_a1, 5), [-3, -2, -1, 0])
    assert {n: entry.dim for n, entry in dims.items()} == {-3: 2, -2: 2, -1: 2, 0: 2}
    assert all(entry.stabilized for entry in dims.values())


def test_cohomology_window_even_a1():
    """The single dashed loop has zero differential: its powers give one class per degree."""
    dg = dg_auslander(ade_translation_quiver("A", 1, 2), 6)
    assert dg.diff == {}
    dims = dg_cohomology_dims(dg, [-2, -1, 0])
    assert {n: entry.dim for n, entry in dims.items()} == {-2: 1, -1: 1, 0: 1}
    assert all(entry.stabilized for entry in dims.values())


def test_cohomology_window_h0(dg_even_a2):
    dims = dg_cohomology_dims(dg_even_a2, [0], L=4)
    assert dims[0].dim == 4
    assert dims[0].stabilized


def test_cohomology_window_degrees(dg_even_a2):
    with pytest.raises(MeshforgeValueError):
        dg_cohomology_dims(dg_even_a2, [1])

    with pytest.raises(MeshforgeValueError):
        dg_cohomology_dims(dg_even_a2, [0], L=dg_even_a2.bound + 1)


def test_shipped_perturbations_preserve_cohomology():
    """Every shipped perturbation leaves d^2 = 0 and the cohomology unchanged."""
    cases = load_perturbations()
    assert len(cases) == 10
    for case in cases:
        tq = ade_translation_quiver(case.family, case.index, case.krull_dim)
        dg = dg_auslander(tq, 5)
        perturbed = perturb_gamma(dg, case.perturbations)

        assert check_d_squared(perturbed), case.name
        assert perturbed.diff != dg.diff, case.name
        assert h0(perturbed, 5).dim == h0(dg, 5).dim, case.name
        before = dg_cohomology_dims(dg, [-1, 0], L=4)
        after = dg_cohomology_dims(perturbed, [-1, 0], L=4)
        assert before == after, case.name


def test_scaling_perturbation(dg_even_a3):
    perturbed = perturb_gamma(dg_even_a3, [Perturbation("2", "1/2")])
    assert format_element(perturbed.differential_of("r2")) == "1/2*a1 a1* + 1/2*a2* a2"
    assert perturbed.differential_of("r1") == dg_even_a3.differential_of("r1")


def test_perturbation_errors(dg_even_a3):
    with pytest.raises(NonUnitScalarError):
        perturb_gamma(dg_even_a3, [Perturbation("1", 0)])

    with pytest.raises(IncompatibleEndpointsError):
        perturb_gamma(dg_even_a3, [Perturbation("2", 1, (PaddingTerm("a1*", "1", "a1"),))])

    with pytest.raises(IncompatibleEndpointsError):
        perturb_gamma(dg_even_a3, [Perturbation("1", 1, (PaddingTerm("e(1)", "1", "e(1)"),))])

    with pytest.raises(DgPresentationError):
        perturb_gamma(dg_even_a3, [Perturbation("7")])
