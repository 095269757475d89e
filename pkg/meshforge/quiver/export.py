"""
Text exports of quivers: JSON, Graphviz DOT and TikZ.

All exports are deterministic: vertices and arrows are written in declaration
order and TikZ nodes are placed evenly on a circle.
"""
from math import cos, pi, sin

from meshforge.constants import DASHED, ExportFormat
from meshforge.exceptions import UnsupportedFormatError

from .io import dump_quiver
from .translation import TranslationQuiver


def export_quiver(q, format="json") -> str:  # pylint: disable=redefined-builtin
    """
    Render a quiver as text.

    Parameters
    ----------
    q : :class:`GradedQuiver` or :class:`TranslationQuiver`
    format : {"json", "dot", "tikz"}
        Degree -1 arrows are drawn dashed in ``dot`` and ``tikz``.

    Returns
    -------
    str

    Raises
    ------
    UnsupportedFormatError
    """
    try:
        fmt = ExportFormat(format)
    except ValueError as e:
        raise UnsupportedFormatError(f"Unsupported export format: '{format}'") from e

    if fmt == ExportFormat.JSON:
        return dump_quiver(q)

    quiver = q.quiver if isinstance(q, TranslationQuiver) else q
    if fmt == ExportFormat.DOT:
        return _to_dot(quiver)
    return _to_tikz(quiver)


def _to_dot(quiver):
    lines = ["digraph quiver {"]
    for v in quiver.vertices:
        shape = "box" if v.projective else "circle"
        lines.append(f'  "{_escape(v.id)}" [shape={shape}];')
    for a in quiver.arrows:
        style = "dashed" if a.degree == DASHED else "solid"
        lines.append(
            f'  "{_escape(a.src)}" -> "{_escape(a.tgt)}" '
            f'[label="{_escape(a.label)}", style={style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_tikz(quiver, radius=2.0):
    names = {v.id: f"v{k}" for k, v in enumerate(quiver.vertices)}
    n = len(quiver.vertices)

    lines = [r"\begin{tikzpicture}[>=stealth]"]
    for k, v in enumerate(quiver.vertices):
        angle = pi / 2 - 2 * pi * k / n
        x, y = radius * cos(angle), radius * sin(angle)
        lines.append(rf"  \node ({names[v.id]}) at ({x:.3f},{y:.3f}) {{${v.id}$}};")

    loops = {}
    bends = {}
    for a in quiver.arrows:
        style = "->, dashed" if a.degree == DASHED else "->"
        src, tgt = names[a.src], names[a.tgt]
        if a.src == a.tgt:
            k = loops.setdefault(a.src, 0)
            loops[a.src] += 1
            lines.append(
                rf"  \draw[{style}] ({src}) to[loop above, min distance={6 + 4 * k}mm]"
                rf" node[above] {{${a.label}$}} ({tgt});"
            )
            continue
        # parallel and antiparallel arrows fan out by bend angle
        key = frozenset((a.src, a.tgt))
        k = bends.setdefault(key, 0)
        bends[key] += 1
        lines.append(
            rf"  \draw[{style}] ({src}) to[bend left={10 + 15 * k}]"
            rf" node[midway, fill=white, inner sep=1pt] {{\scriptsize ${a.label}$}} ({tgt});"
        )
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _escape(text):
    return str(text).replace("\\", "\\\\").replace('"', '\\"')
