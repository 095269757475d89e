"""
JSON reading and writing of quivers.

Schema::

    {"vertices": [{"id": str, "projective": bool}],
     "arrows": [{"id": str, "label": str, "src": str, "tgt": str, "degree": int}],
     "tau": {str: str}, "sigma": {str: str},
     "mesh_coeff": {str: "p/q"},            (optional)
     "depth": int,                           (optional, default 1)
     "middle_terms": {str: [[str, ...]]}}    (optional)

Products in element text elsewhere are read right to left; this module only
moves data.
"""
import json

from meshforge.exceptions import MeshforgeValueError, QuiverSyntaxError
from meshforge.utils import format_rational

from .graded import Arrow, GradedQuiver, Vertex
from .translation import TranslationQuiver


def parse_quiver(text) -> TranslationQuiver:
    """
    Read a translation quiver from JSON text.

    The mesh laws are not checked here, see
    :func:`~meshforge.quiver.validate_translation_quiver`.

    Raises
    ------
    QuiverSyntaxError
        Malformed JSON or a record of the wrong shape.
    UndeclaredVertexError
        An arrow endpoint (or tau entry) is not a declared vertex.
    DuplicateIdError
        A vertex or arrow id is declared twice.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise QuiverSyntaxError(f"Malformed quiver JSON: {e}") from e
    return quiver_from_dict(data)


def load_quiver(path) -> TranslationQuiver:
    with open(path, "r", encoding="utf-8") as f:
        return parse_quiver(f.read())


def quiver_from_dict(data) -> TranslationQuiver:
    if not isinstance(data, dict):
        raise QuiverSyntaxError("Quiver JSON must be an object")

    try:
        vertices = [
            Vertex(str(v["id"]), bool(v.get("projective", False)))
            for v in data.get("vertices", [])
        ]
        arrows = [
            Arrow(
                str(a["id"]),
                str(a.get("label", a["id"])),
                str(a["src"]),
                str(a["tgt"]),
                _as_int(a.get("degree", 0)),
            )
            for a in data.get("arrows", [])
        ]
        tau = {str(k): str(v) for k, v in _as_dict(data.get("tau", {})).items()}
        sigma = {str(k): str(v) for k, v in _as_dict(data.get("sigma", {})).items()}
        mesh_coeff = dict(_as_dict(data.get("mesh_coeff", {})))
        depth = _as_int(data.get("depth", 1))
        middle_terms = {
            str(k): [[str(w) for w in step] for step in steps]
            for k, steps in _as_dict(data.get("middle_terms", {})).items()
        }
    except (KeyError, TypeError, AttributeError) as e:
        raise QuiverSyntaxError(f"Malformed quiver record: {e!r}") from e

    quiver = GradedQuiver(vertices, arrows)
    try:
        return TranslationQuiver(quiver, tau, sigma, mesh_coeff, depth, middle_terms)
    except MeshforgeValueError as e:
        raise QuiverSyntaxError(str(e)) from e


def quiver_to_dict(q) -> dict:
    """
    Plain-data form of a :class:`GradedQuiver` or :class:`TranslationQuiver`.

    A bare graded quiver is written with empty ``tau`` and ``sigma``.
    """
    if isinstance(q, TranslationQuiver):
        quiver, tq = q.quiver, q
    else:
        quiver, tq = q, None

    data = {
        "vertices": [{"id": v.id, "projective": v.projective} for v in quiver.vertices],
        "arrows": [
            {
                "id": a.id,
                "label": a.label,
                "src": a.src,
                "tgt": a.tgt,
                "degree": a.degree,
            }
            for a in quiver.arrows
        ],
        "tau": dict(tq.tau) if tq else {},
        "sigma": dict(tq.sigma) if tq else {},
    }
    if tq is not None:
        if tq.mesh_coeff:
            data["mesh_coeff"] = {
                a: format_rational(c) for a, c in tq.mesh_coeff.items()
            }
        if tq.depth != 1:
            data["depth"] = tq.depth
        if tq.middle_terms:
            data["middle_terms"] = {
                v: [list(step) for step in steps] for v, steps in tq.middle_terms.items()
            }
    return data


def dump_quiver(q) -> str:
    """Deterministic JSON text for a quiver."""
    return json.dumps(quiver_to_dict(q), indent=2, ensure_ascii=False) + "\n"


def _as_dict(value):
    if not isinstance(value, dict):
        raise TypeError(f"expected an object, got {type(value).__name__}")
    return value


def _as_int(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected an integer, got {value!r}")
    return value
