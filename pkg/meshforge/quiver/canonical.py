"""
Canonical labelling of translation quivers.

The quiver is modelled as a typed ``networkx`` multigraph whose nodes are
both the vertices and the arrows, with edges ``src``, ``tgt``, ``tau`` and
``sigma``.  Colour refinement followed by individualization of the
smallest non-singleton class gives discrete colourings; each is turned into
a relabelled quiver and the one with the smallest JSON encoding wins.
Vertices are finally numbered by a BFS from the smallest-coloured vertex.
"""
import json
from typing import Dict, Hashable, List, Tuple

import networkx as nx

from meshforge.logging import get_logger
from meshforge.utils import format_rational

from .graded import Arrow, GradedQuiver, Vertex
from .io import quiver_to_dict
from .translation import TranslationQuiver

logger = get_logger(__name__)

Coloring = Dict[Hashable, int]


def canonical_form(tq: TranslationQuiver) -> TranslationQuiver:
    """
    Rename vertices ``"0" .. "n-1"`` and arrows ``"a0" ..`` canonically.

    Inputs related by a quiver isomorphism commuting with ``tau`` and
    ``sigma`` (and preserving degrees, mesh coefficients and projectivity)
    give equal outputs.  Arrow labels are replaced by the new ids.
    """
    graph = _typed_graph(tq)
    start = _refine(graph, _initial_coloring(graph))

    best = None
    leaves = 0
    for coloring in _discrete_colorings(graph, start):
        leaves += 1
        candidate = _relabel(tq, graph, coloring)
        key = json.dumps(quiver_to_dict(candidate), sort_keys=True)
        if best is None or key < best[0]:
            best = (key, candidate)
    logger.debug("Canonical form searched %d leaves", leaves)

    if best is None:
        return tq
    return best[1]


def _typed_graph(tq) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    for v in tq.quiver.vertices:
        graph.add_node(("v", v.id), kind="vertex", init=("v", v.projective))
    for a in tq.quiver.arrows:
        coeff = format_rational(tq.coeff(a.id))
        graph.add_node(("a", a.id), kind="arrow", init=("a", a.degree, coeff))
        graph.add_edge(("v", a.src), ("a", a.id), kind="src")
        graph.add_edge(("a", a.id), ("v", a.tgt), kind="tgt")
    for v, w in tq.tau.items():
        graph.add_edge(("v", v), ("v", w), kind="tau")
    for a, b in tq.sigma.items():
        graph.add_edge(("a", a), ("a", b), kind="sigma")
    return graph


def _initial_coloring(graph) -> Coloring:
    return _compress({n: graph.nodes[n]["init"] for n in graph.nodes})


def _compress(signatures) -> Coloring:
    # order-preserving renumbering of arbitrary comparable signatures
    ranks = {sig: k for k, sig in enumerate(sorted(set(signatures.values())))}
    return {n: ranks[sig] for n, sig in signatures.items()}


def _refine(graph, coloring: Coloring) -> Coloring:
    n_classes = len(set(coloring.values()))
    while True:
        signatures = {}
        for node in graph.nodes:
            out = sorted(
                (kind, coloring[t]) for _, t, kind in graph.out_edges(node, data="kind")
            )
            into = sorted(
                (kind, coloring[s]) for s, _, kind in graph.in_edges(node, data="kind")
            )
            signatures[node] = (coloring[node], tuple(out), tuple(into))
        refined = _compress(signatures)
        count = len(set(refined.values()))
        if count == n_classes:
            return refined
        coloring, n_classes = refined, count


def _discrete_colorings(graph, coloring: Coloring):
    classes: Dict[int, List[Hashable]] = {}
    for node, color in coloring.items():
        classes.setdefault(color, []).append(node)
    ties = [c for c, members in classes.items() if len(members) > 1]
    if not ties:
        yield coloring
        return

    target = min(ties)
    for node in sorted(classes[target]):
        # split `node` off just below its class
        individualized = {
            n: 2 * c + (0 if n == node else 1) if c == target else 2 * c
            for n, c in coloring.items()
        }
        yield from _discrete_colorings(graph, _refine(graph, individualized))


def _relabel(tq, graph, coloring: Coloring) -> TranslationQuiver:
    quiver = tq.quiver
    vertex_order = _bfs_order(quiver, coloring)
    new_vertex = {v: str(k) for k, v in enumerate(vertex_order)}

    arrow_order = sorted(
        quiver.arrows,
        key=lambda a: (
            int(new_vertex[a.src]),
            int(new_vertex[a.tgt]),
            a.degree,
            coloring[("a", a.id)],
        ),
    )
    new_arrow = {a.id: f"a{k}" for k, a in enumerate(arrow_order)}

    vertices = [
        Vertex(new_vertex[v], quiver.vertex(v).projective) for v in vertex_order
    ]
    arrows = [
        Arrow(new_arrow[a.id], new_arrow[a.id], new_vertex[a.src], new_vertex[a.tgt], a.degree)
        for a in arrow_order
    ]
    tau = {new_vertex[v]: new_vertex[w] for v, w in tq.tau.items()}
    sigma = {new_arrow[a]: new_arrow[b] for a, b in tq.sigma.items()}
    coeff = {new_arrow[a]: c for a, c in tq.mesh_coeff.items() if c != 1}
    middle = {
        new_vertex[v]: [sorted((new_vertex[w] for w in step), key=int) for step in steps]
        for v, steps in tq.middle_terms.items()
    }
    return TranslationQuiver(
        GradedQuiver(vertices, arrows),
        dict(sorted(tau.items(), key=lambda kv: int(kv[0]))),
        dict(sorted(sigma.items(), key=lambda kv: int(kv[0][1:]))),
        dict(sorted(coeff.items(), key=lambda kv: int(kv[0][1:]))),
        tq.depth,
        dict(sorted(middle.items(), key=lambda kv: int(kv[0]))),
    )


def _bfs_order(quiver, coloring) -> List[str]:
    """Vertices in BFS order over the underlying simple graph, colours break ties."""
    color = {v: coloring[("v", v)] for v in quiver.vertex_ids}
    underlying = nx.Graph()
    underlying.add_nodes_from(quiver.vertex_ids)
    underlying.add_edges_from((a.src, a.tgt) for a in quiver.arrows if a.src != a.tgt)

    order: List[str] = []
    seen = set()
    for root in sorted(quiver.vertex_ids, key=color.get):
        if root in seen:
            continue
        component: List[Tuple[str, str]] = list(
            nx.bfs_edges(
                underlying, root, sort_neighbors=lambda nbrs: sorted(nbrs, key=color.get)
            )
        )
        order.append(root)
        seen.add(root)
        for _, child in component:
            order.append(child)
            seen.add(child)
    return order
