"""SVG drawings of diagrams and trees, DOT graphs of posets and exchange graphs.

Output depends only on the input, so repeated exports are byte-identical.
"""

from __future__ import annotations

from fractions import Fraction

from .mct import MixedCobinaryTree
from .posets import Poset
from .quiver import ExchangeGraph
from .signs import SignVector
from .strands import Diagram, LabeledDiagram, OrientedDiagram, Strand

GAP = 60
MARGIN = 40
LANE = 14


def _x(i: int) -> int:
    return MARGIN + GAP * i


def _strand_path(s: Strand, eps: SignVector, base: int) -> tuple[str, tuple[float, float]]:
    """Path through the interior points of ``s``: below ``+`` points, above ``-`` points."""
    lane = LANE * (s.b - s.a)
    pts = [(_x(s.a), base)]
    for p in range(s.a + 1, s.b):
        pts.append((_x(p), base + lane if eps.is_plus(p) else base - lane))
    pts.append((_x(s.b), base))
    if len(pts) == 2:
        # no interior point: a plain bump, above the row
        mid = ((pts[0][0] + pts[1][0]) / 2, base - lane)
        path = f"M {pts[0][0]} {base} Q {mid[0]:g} {mid[1]:g} {pts[1][0]} {base}"
        return path, mid
    parts = [f"M {pts[0][0]} {pts[0][1]}"]
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        cx = (x0 + x1) / 2
        parts.append(f"C {cx:g} {y0} {cx:g} {y1} {x1} {y1}")
    mid = pts[len(pts) // 2]
    return " ".join(parts), (float(mid[0]), float(mid[1]))


def _svg_frame(n: int, eps: SignVector, body: list[str], height: int) -> str:
    width = 2 * MARGIN + GAP * n
    base = height // 2
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse">',
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#1f4e9c"/>',
        "</marker>",
        "</defs>",
    ]
    points = []
    for i in range(n + 1):
        points.append(f'<circle cx="{_x(i)}" cy="{base}" r="4" fill="black"/>')
        points.append(f'<text x="{_x(i)}" y="{height - 8}" text-anchor="middle" font-size="12">{eps[i]}{i}</text>')
    return "\n".join(head + body + points + ["</svg>"]) + "\n"


def _height_for(n: int) -> int:
    return 2 * (LANE * n + MARGIN)


def svg_diagram(d: Diagram | LabeledDiagram | OrientedDiagram) -> str:
    eps = d.eps
    n = eps.n
    height = _height_for(n)
    base = height // 2
    body = []
    if isinstance(d, OrientedDiagram):
        items = [(o.strand, None, o.source > o.target) for o in d.strands]
        arrows = True
    elif isinstance(d, LabeledDiagram):
        items = [(s, lab, False) for s, lab in sorted(d.pairs, key=lambda p: p[0])]
        arrows = False
    else:
        items = [(s, None, False) for s in d.strands]
        arrows = False
    for s, lab, backwards in items:
        path, mid = _strand_path(s, eps, base)
        attrs = 'fill="none" stroke="#1f4e9c" stroke-width="2"'
        if arrows:
            attrs += ' marker-start="url(#arrow)"' if backwards else ' marker-end="url(#arrow)"'
        body.append(f'<path d="{path}" {attrs}/>')
        if lab is not None:
            body.append(f'<text x="{mid[0]:g}" y="{mid[1] - 4:g}" text-anchor="middle" font-size="12" fill="#b0302a">{lab}</text>')
    return _svg_frame(n, eps, body, height)


def svg_mct(T: MixedCobinaryTree) -> str:
    n = T.n
    lo, hi = min(T.heights), max(T.heights)
    span = hi - lo if hi != lo else Fraction(1)
    height = 2 * MARGIN + GAP * 4
    # map heights into the drawing box; SVG y grows downwards
    y = lambda v: MARGIN + float((hi - v) / span) * (height - 2 * MARGIN - 20)
    body = []
    for i, j in T.edges:
        a, b = (i, j) if T.heights[i] < T.heights[j] else (j, i)
        body.append(
            f'<line x1="{_x(a)}" y1="{y(T.heights[a]):.3f}" x2="{_x(b)}" y2="{y(T.heights[b]):.3f}" '
            'stroke="#1f4e9c" stroke-width="2" marker-end="url(#arrow)"/>'
        )
    for v in range(n + 1):
        body.append(f'<circle cx="{_x(v)}" cy="{y(T.heights[v]):.3f}" r="4" fill="black"/>')
        body.append(f'<text x="{_x(v)}" y="{height - 8}" text-anchor="middle" font-size="12">{T.eps[v]}{v}</text>')
    width = 2 * MARGIN + GAP * n
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto">',
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#1f4e9c"/>',
        "</marker>",
        "</defs>",
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _node_name(x) -> str:
    if isinstance(x, Strand):
        return f"c({x.a},{x.b})"
    return str(x)


def dot_poset(P: Poset, name: str = "hasse") -> str:
    order = {x: k for k, x in enumerate(P.elements)}
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in P.elements:
        lines.append(f'  "{_node_name(x)}";')
    for lo, hi in sorted(P.covers, key=lambda c: (order[c[0]], order[c[1]])):
        lines.append(f'  "{_node_name(lo)}" -> "{_node_name(hi)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_exchange_graph(G: ExchangeGraph) -> str:
    lines = ["graph exchange {", "  node [shape=box, fontname=monospace];"]
    for idx, B in enumerate(G.states):
        rows = "\\n".join(" ".join(f"{x:>2}" for x in row[B.n:]) for row in B.rows)
        lines.append(f'  s{idx} [label="{rows}"];')
    # every edge is listed from both ends; keep the copy leaving the smaller state
    for a, b, k in sorted(G.edges):
        if a < b:
            lines.append(f'  s{a} -- s{b} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
