"""Arc diagrams of contractions (the linear representation).

Vertices sit on a line in written order and carry right-to-left labels
n..1.  Annihilators are drawn as open circles, creators as filled ones, and
each edge as an arc above the line whose height grows with its distance.
"""

from __future__ import annotations

from .contractions import Contraction
from .words import A, Word

SPACING = 40
MARGIN = 30
RADIUS = 6
ARC_UNIT = 14  # arc height per unit of distance


def render_svg(w: Word, c: Contraction) -> str:
    c.validate(w)
    n = len(w)
    max_d = max((e.distance for e in c.edges), default=0)
    base_y = MARGIN + max_d * ARC_UNIT + RADIUS
    width = 2 * MARGIN + max(n - 1, 0) * SPACING
    height = base_y + RADIUS + 24

    def x(pos: int) -> int:
        return MARGIN + (pos - 1) * SPACING

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{x(1)}" y1="{base_y}" x2="{x(max(n, 1))}" y2="{base_y}" '
        f'stroke="#bbb" stroke-width="1"/>',
    ]
    for e in c.edges:
        # control point at twice the wanted peak height gives a peak of d * ARC_UNIT
        ctrl_y = base_y - 2 * e.distance * ARC_UNIT
        mid = (x(e.left) + x(e.right)) // 2
        out.append(
            f'<path d="M {x(e.left)} {base_y} Q {mid} {ctrl_y} {x(e.right)} {base_y}" '
            f'fill="none" stroke="black" stroke-width="2"/>')
    for pos, letter in enumerate(w.letters, 1):
        fill = "white" if letter is A else "black"
        out.append(f'<circle cx="{x(pos)}" cy="{base_y}" r="{RADIUS}" fill="{fill}" '
                   f'stroke="black" stroke-width="1.5"/>')
        out.append(f'<text x="{x(pos)}" y="{base_y + RADIUS + 16}" font-family="monospace" '
                   f'font-size="12" text-anchor="middle">{n - pos + 1}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(w: Word, c: Contraction) -> str:
    """One row per edge, longest edges on top; ``o`` annihilator, ``*`` creator."""
    c.validate(w)
    n = len(w)
    cell = max(3, len(str(n)) + 2)
    width = n * cell
    edges = sorted(c.edges, key=lambda e: (-e.distance, e.left))
    rows = [[" "] * width for _ in edges]

    def col(pos: int) -> int:
        return (pos - 1) * cell + cell // 2

    for r, e in enumerate(edges):
        for k in range(col(e.left), col(e.right) + 1):
            if rows[r][k] == " ":
                rows[r][k] = "-"
        rows[r][col(e.left)] = rows[r][col(e.right)] = "+"
        for below in range(r + 1, len(rows)):
            for pos in e:
                rows[below][col(pos)] = "|"
    vertices = [" "] * width
    labels = [" "] * width
    for pos, letter in enumerate(w.letters, 1):
        vertices[col(pos)] = "o" if letter is A else "*"
        lab = str(n - pos + 1)
        start = col(pos) - (len(lab) - 1) // 2
        labels[start:start + len(lab)] = lab
    lines = ["".join(r).rstrip() for r in rows]
    lines += ["".join(vertices).rstrip(), "".join(labels).rstrip()]
    return "\n".join(lines) + "\n"


def emit_diagram(w: Word, c: Contraction, fmt: str = "svg") -> str:
    if fmt == "svg":
        return render_svg(w, c)
    if fmt == "ascii":
        return render_ascii(w, c)
    raise ValueError(f"unknown diagram format {fmt!r}")
