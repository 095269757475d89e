"""Unit tests for truncated path algebras and their quotients."""
import numpy as np
import pytest

from meshforge.exceptions import (
    BoundMismatchError,
    BoundTooSmallError,
    EmptyIdempotentError,
    NotStabilizedError,
    OutOfMemoryBudgetError,
    PathAlgebraError,
    QuiverSyntaxError,
    RelationError,
)
from meshforge.homology import mesh_relations
from meshforge.path_algebra import (
    PathWord,
    RelationSet,
    TruncatedElement,
    WordSpace,
    cartan_matrix,
    corner_algebra,
    format_element,
    minimal_relations_defect,
    parse_element,
    projective_module,
    quotient_algebra,
    restrict_module,
    simple_module,
)
from meshforge.quiver import ade_translation_quiver


def _word(quiver, text, bound=4):
    return TruncatedElement.from_word(PathWord.of(quiver, text.split()), bound)


def test_parse_and_format(even_a3):
    quiver = even_a3.quiver
    x = parse_element(quiver, "a1 a1* + 1/2*a2* a2", 3)
    assert x.endpoints == {("2", "2")}
    assert x.min_length == x.max_length == 2
    assert format_element(x) == "a1 a1* + 1/2*a2* a2"
    assert parse_element(quiver, format_element(x), 3) == x

    e = parse_element(quiver, "e(2) - a1 a1*", 3)
    assert e.coefficient(PathWord.trivial(quiver, "2")) == 1
    assert format_element(parse_element(quiver, "0", 3)) == "0"


def test_parse_errors(even_a3):
    quiver = even_a3.quiver
    for text in ["", "a1 +", "a1 a2", "e(9)", "b7"]:
        with pytest.raises(QuiverSyntaxError):
            parse_element(quiver, text, 3)


def test_products_compose_right_to_left(even_a2):
    """``x * y`` runs along ``y`` first."""
    quiver = even_a2.quiver
    a, a_star = _word(quiver, "a1"), _word(quiver, "a1*")

    assert str(a * a_star) == "a1 a1*"
    assert (a * a_star).endpoints == {("2", "2")}
    assert (a_star * a).endpoints == {("1", "1")}
    assert (a * a).is_zero()

    e1 = TruncatedElement.idempotent(quiver, "1", 4)
    assert a * e1 == a
    assert (e1 * a).is_zero()


def test_truncation_drops_long_words(even_a2):
    quiver = even_a2.quiver
    a, a_star = _word(quiver, "a1", 1), _word(quiver, "a1*", 1)
    assert (a * a_star).is_zero()
    assert (a + a_star).truncate(0).is_zero()

    with pytest.raises(BoundMismatchError):
        _word(quiver, "a1", 1) + _word(quiver, "a1", 2)


def test_linear_structure(even_a2):
    quiver = even_a2.quiver
    x = parse_element(quiver, "a1 a1* - 2*a1 a1*", 3)
    assert format_element(x) == "-a1 a1*"
    assert (x - x).is_zero()
    assert format_element(3 * x) == "-3*a1 a1*"


def test_word_space_budget(even_a3):
    space = WordSpace(even_a3.quiver, 2)
    # 3 trivial words, 4 arrows, 6 paths of length two
    assert len(space) == 3 + 4 + 6

    with pytest.raises(OutOfMemoryBudgetError):
        WordSpace(even_a3.quiver, 8, budget=50)


def test_relation_set_rejects_bad_relations(even_a2):
    quiver = even_a2.quiver
    with pytest.raises(RelationError):
        RelationSet.parse(quiver, {"r": "a1"}, 2)

    with pytest.raises(RelationError):
        RelationSet.parse(quiver, {"r": "a1 a1* + a1* a1"}, 2)

    with pytest.raises(RelationError):
        RelationSet([("r", TruncatedElement.zero(quiver, 2))])


def test_intro_quotient(intro_a1):
    """``e_1, e_2, p, i`` and ``i p``: the relation kills ``p i``."""
    relations = RelationSet.parse(intro_a1.quiver, {"m2": "p i"}, 2)
    algebra = quotient_algebra(intro_a1.quiver, relations, 6)

    assert algebra.dim == 5
    assert algebra.stabilized
    assert sorted(algebra.labels()) == sorted(["e(1)", "e(2)", "p", "i", "i p"])
    assert algebra.associativity_defects() == []
    np.testing.assert_array_equal(cartan_matrix(algebra), [[2, 1], [1, 1]])


def test_quotient_methods_agree(curve_a2):
    relations = mesh_relations(curve_a2)
    span = quotient_algebra(curve_a2.quiver, relations, 7)
    saturation = quotient_algebra(curve_a2.quiver, relations, 7, method="saturation")
    assert span.dim == saturation.dim == 14
    assert span.dims_vector() == saturation.dims_vector()


@pytest.mark.parametrize("index,dim", [(1, 1), (2, 4), (3, 10), (4, 20)])
def test_preprojective_dims(index, dim):
    """The even A_n mesh algebra has dimension n(n+1)(n+2)/6."""
    tq = ade_translation_quiver("A", index, 2)
    algebra = quotient_algebra(tq.quiver, mesh_relations(tq), 2 * index + 2)
    assert algebra.stabilized
    assert algebra.dim == dim


def test_quotient_bounds(intro_a1):
    relations = RelationSet.parse(intro_a1.quiver, {"m2": "p i"}, 2)
    with pytest.raises(BoundTooSmallError):
        quotient_algebra(intro_a1.quiver, relations, 1)


def test_unstabilized_quotient(conifold):
    """The conifold mesh algebra is infinite-dimensional."""
    algebra = quotient_algebra(conifold.quiver, mesh_relations(conifold), 4)
    assert not algebra.stabilized
    assert list(algebra.dims_history) == sorted(algebra.dims_history, key=sum)

    with pytest.raises(NotStabilizedError):
        cartan_matrix(algebra)


@pytest.mark.parametrize("index", [2, 3, 4, 5])
def test_mesh_relations_are_minimal(index):
    tq = ade_translation_quiver("A", index, 2)
    relations = mesh_relations(tq)
    L = relations.max_length + 2
    for v in tq.vertex_ids:
        count, dim = minimal_relations_defect(tq.quiver, relations, v, v, L)
        assert count == dim == 1


def test_minimal_relations_fixtures(intro_a1, conifold):
    for tq in (intro_a1, conifold):
        relations = mesh_relations(tq)
        for _, r in relations:
            count, dim = minimal_relations_defect(tq.quiver, relations, r.src, r.tgt, 4)
            assert count == dim

    with pytest.raises(BoundTooSmallError):
        minimal_relations_defect(conifold.quiver, mesh_relations(conifold), "+", "-", 3)


def test_corner_and_modules(intro_a1):
    relations = RelationSet.parse(intro_a1.quiver, {"m2": "p i"}, 2)
    algebra = quotient_algebra(intro_a1.quiver, relations, 6)

    corner = corner_algebra(algebra, ["1"])
    assert corner.dim == 2
    assert sorted(corner.labels()) == ["e(1)", "i p"]

    with pytest.raises(EmptyIdempotentError):
        corner_algebra(algebra, [])

    p1 = projective_module(algebra, "1")
    assert p1.dims() == {"1": 2, "2": 1}
    assert p1.is_module()
    assert simple_module(algebra, "2").is_module()

    with pytest.raises(PathAlgebraError):
        simple_module(algebra, "3")


def test_restrict_module(intro_a1):
    """``eM`` keeps the coordinates at vertices of ``e`` and is a module over ``eAe``."""
    relations = RelationSet.parse(intro_a1.quiver, {"m2": "p i"}, 2)
    algebra = quotient_algebra(intro_a1.quiver, relations, 6)

    outside = restrict_module(simple_module(algebra, "1"), ["2"])
    assert outside.dim == 0
    assert outside.algebra.vertices == ("2",)

    inside = restrict_module(simple_module(algebra, "2"), ["2"])
    assert inside.dim == 1
    assert inside.dims() == {"2": 1}
    assert inside.is_module()

    restricted = restrict_module(projective_module(algebra, "1"), ["1"])
    corner = corner_algebra(algebra, ["1"])
    assert restricted.dim == corner.dim == 2
    assert restricted.dims() == projective_module(corner, "1").dims()
    assert restricted.is_module()
