"""SVG arc diagrams of book embeddings and subhamiltonian cycles.

Vertices sit equispaced on a horizontal spine. Each edge is a half-ellipse
whose height is proportional to its span, above the spine for the top page
and below it for the bottom page, so nested edges draw as nested arcs.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from . import kernels
from .graph import Graph
from .verify import BOTTOM, TOP, BookEmbedding, SubhamCycle

STEP = 40.0
MARGIN = 24.0
HEIGHT_RATIO = 0.5  # arc height over horizontal span
PARALLEL_SHRINK = 0.8  # second copy of a double edge is drawn flatter


def _cycle_layout(g: Graph, h: SubhamCycle):
    """Spine order and arcs for a cycle: graph edges plus augmentation pairs, paged by 2-colouring."""
    order = list(h.cycle)
    pos = {v: i for i, v in enumerate(order)}
    arcs = [(u, v, False) for _, (u, v) in sorted(g.edges.items())]
    arcs += [(u, v, True) for u, v in h.aug]
    col = kernels.two_colour_conflicts(pos, [a[0] for a in arcs], [a[1] for a in arcs])
    if col is None:  # not a valid cycle; still draw something readable
        col = [0] * len(arcs)
    return order, [(u, v, TOP if c == 0 else BOTTOM, dashed) for (u, v, dashed), c in zip(arcs, col)]


def _book_layout(g: Graph, be: BookEmbedding):
    return list(be.order), [(*g.edges[e], be.pages.get(e, TOP), False) for e in sorted(g.edges)]


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(g: Graph, emb: BookEmbedding | SubhamCycle, title: str | None = None) -> str:
    if isinstance(emb, SubhamCycle):
        order, arcs = _cycle_layout(g, emb)
    else:
        order, arcs = _book_layout(g, emb)
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)

    spans = {TOP: [0.0], BOTTOM: [0.0]}
    for u, v, page, _ in arcs:
        spans[page].append(abs(pos[u] - pos[v]) * STEP)
    up = max(spans[TOP]) * HEIGHT_RATIO
    down = max(spans[BOTTOM]) * HEIGHT_RATIO
    width = 2 * MARGIN + max(n - 1, 0) * STEP
    height = 2 * MARGIN + up + down
    y0 = MARGIN + up

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<line class="spine" x1="{_fmt(MARGIN)}" y1="{_fmt(y0)}" x2="{_fmt(width - MARGIN)}" '
               f'y2="{_fmt(y0)}" stroke="#bbb" stroke-width="1"/>')

    copies: dict[tuple[int, int, str], int] = {}
    for u, v, page, dashed in arcs:
        a, b = sorted((pos[u], pos[v]))
        key = (a, b, page)
        k = copies.get(key, 0)
        copies[key] = k + 1
        x1, x2 = MARGIN + a * STEP, MARGIN + b * STEP
        rx = (x2 - x1) / 2
        ry = rx * 2 * HEIGHT_RATIO * PARALLEL_SHRINK ** k
        # with y pointing down, a clockwise sweep from the left end passes above the spine
        sweep = 1 if page == TOP else 0
        cls = f"arc {page}" + (" aug" if dashed else "")
        dash = ' stroke-dasharray="5,4"' if dashed else ""
        colour = "#1f5fa8" if page == TOP else "#b5472a"
        out.append(f'<path class="{cls}" d="M {_fmt(x1)} {_fmt(y0)} A {_fmt(rx)} {_fmt(ry)} 0 0 {sweep} '
                   f'{_fmt(x2)} {_fmt(y0)}" fill="none" stroke="{colour}" stroke-width="1.5"{dash}/>')

    for i, v in enumerate(order):
        x = MARGIN + i * STEP
        out.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y0)}" r="4" fill="#222"/>')
        out.append(f'<text x="{_fmt(x + 5)}" y="{_fmt(y0 - 6)}" font-size="10" font-family="monospace">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
