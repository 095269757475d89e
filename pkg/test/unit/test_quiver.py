"""Unit tests for graded and translation quivers, their I/O and exports."""
import json

import pytest

from meshforge.exceptions import (
    DuplicateIdError,
    QuiverError,
    QuiverSyntaxError,
    UndeclaredVertexError,
    UnsupportedFormatError,
)
from meshforge.quiver import (
    Arrow,
    GradedQuiver,
    Vertex,
    dump_quiver,
    export_quiver,
    list_fixtures,
    load_fixture,
    parse_quiver,
    quiver_to_dict,
    validate_graded_quiver,
    validate_translation_quiver,
)

INTRO_TEXT = """
{
  "vertices": [{"id": "1", "projective": true}, {"id": "2", "projective": false}],
  "arrows": [
    {"id": "p", "label": "p", "src": "1", "tgt": "2", "degree": 0},
    {"id": "i", "label": "i", "src": "2", "tgt": "1", "degree": 0}
  ],
  "tau": {"2": "2"},
  "sigma": {"i": "p"}
}
"""


def test_parse_intro_quiver():
    """Two vertices, two arrows, tau fixing the non-projective vertex."""
    tq = parse_quiver(INTRO_TEXT)
    assert tq.vertex_ids == ("1", "2")
    assert [a.id for a in tq.quiver.arrows] == ["p", "i"]
    assert tq.projective_vertices == ("1",)
    assert dict(tq.tau) == {"2": "2"}
    assert tq.tau_inverse("2") == "2"
    assert validate_translation_quiver(tq).ok


def test_parse_empty_quiver():
    tq = parse_quiver('{"vertices": [], "arrows": [], "tau": {}, "sigma": {}}')
    assert tq.quiver.is_empty()
    assert validate_translation_quiver(tq).ok


def test_parse_errors():
    """Malformed text and dangling references are reported by type."""
    with pytest.raises(QuiverSyntaxError):
        parse_quiver("{not json")

    with pytest.raises(QuiverSyntaxError):
        parse_quiver("[1, 2]")

    with pytest.raises(QuiverSyntaxError):
        parse_quiver('{"vertices": [{"projective": true}]}')

    data = json.loads(INTRO_TEXT)
    data["arrows"][0]["tgt"] = "7"
    with pytest.raises(UndeclaredVertexError):
        parse_quiver(json.dumps(data))

    data = json.loads(INTRO_TEXT)
    data["vertices"].append({"id": "1", "projective": False})
    with pytest.raises(DuplicateIdError):
        parse_quiver(json.dumps(data))


def test_graded_quiver_lookups():
    quiver = GradedQuiver(
        [Vertex("x"), Vertex("y")],
        [Arrow("f", "f", "x", "y"), Arrow("g", "g", "x", "y"), Arrow("h", "h", "y", "x", -1)],
    )
    assert [a.id for a in quiver.arrows_from("x")] == ["f", "g"]
    assert [a.id for a in quiver.arrows_to("x")] == ["h"]
    assert quiver.arrow_counts() == {("x", "y"): 2, ("y", "x"): 1}
    assert [a.id for a in quiver.degree_part(-1).arrows] == ["h"]
    assert validate_graded_quiver(quiver).ok

    with pytest.raises(QuiverError):
        quiver.arrow("k")


def test_degree_violation():
    quiver = GradedQuiver([Vertex("x")], [Arrow("f", "f", "x", "x", -2)])
    report = validate_graded_quiver(quiver)
    assert not report.ok
    assert report.rules() == {"degree"}


def test_conifold_is_valid(conifold):
    report = validate_translation_quiver(conifold)
    assert report.ok
    assert report.to_dict() == {"ok": True, "violations": []}


def test_redirected_sigma_breaks_mesh(conifold):
    """Pairing an arrow out of + with an arrow back into + is not a mesh."""
    out_of_plus = conifold.quiver.arrows_from("+")[0]
    back = next(a for a in conifold.quiver.arrows_to("+") if a.src == out_of_plus.tgt)
    sigma = dict(conifold.sigma)
    sigma[out_of_plus.id] = back.id

    report = validate_translation_quiver(conifold.replace(sigma=sigma))
    assert not report.ok
    assert "mesh-target" in report.rules()


def test_tau_not_injective(even_a2):
    report = validate_translation_quiver(even_a2.replace(tau={"1": "1", "2": "1"}))
    assert "tau-injective" in report.rules()


def test_json_roundtrip_of_fixtures():
    """Every shipped fixture re-parses from its own JSON dump."""
    for name in list_fixtures():
        name = name.replace("<n>", "3")
        tq = load_fixture(name)
        assert parse_quiver(dump_quiver(tq)) == tq
        assert quiver_to_dict(tq)["tau"] == dict(tq.tau)


def test_unknown_fixture():
    with pytest.raises(QuiverError):
        load_fixture("no_such_quiver")


def test_export_dot_of_dg_quiver(dg_even_a2):
    """Two nodes, the two solid arrows and one dashed loop per vertex."""
    text = export_quiver(dg_even_a2.quiver, "dot")
    assert text.startswith("digraph quiver {")
    assert text.count("[shape=circle]") == 2
    assert text.count("style=solid") == 2
    assert text.count("style=dashed") == 2


def test_export_tikz(even_a3):
    text = export_quiver(even_a3, "tikz")
    assert text.startswith(r"\begin{tikzpicture}")
    assert text.rstrip().endswith(r"\end{tikzpicture}")
    assert text.count(r"\node") == 3
    assert text.count(r"\draw") == 4
    assert export_quiver(even_a3, "tikz") == text


def test_export_json_reparses(curve_a2):
    assert parse_quiver(export_quiver(curve_a2, "json")) == curve_a2


def test_export_unknown_format(even_a2):
    with pytest.raises(UnsupportedFormatError):
        export_quiver(even_a2, "svg")
