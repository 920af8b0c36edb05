import re

from conftest import cycle_graph
from twopage.embedder import embed_two_page
from twopage.generators import grid
from twopage.graph import Graph
from twopage.render import render_svg
from twopage.verify import SubhamCycle


def _arcs(svg):
    return re.findall(r'<path class="arc (top|bottom)( aug)?" d="M ([\d.]+) ([\d.]+) A ([\d.]+) ([\d.]+) 0 0 (\d)', svg)


def test_c4_three_below_one_above():
    svg = render_svg(cycle_graph(4), embed_two_page(cycle_graph(4)))
    pages = sorted(a[0] for a in _arcs(svg))
    assert pages == ["bottom", "bottom", "bottom", "top"]


def test_one_dashed_augmentation_arc():
    g = Graph.build(4, [(0, 1), (1, 2), (2, 3)])
    svg = render_svg(g, SubhamCycle([0, 1, 2, 3], [(3, 0)]))
    assert svg.count("stroke-dasharray") == 1
    assert sum(1 for a in _arcs(svg) if a[1]) == 1


def test_vertices_equispaced_and_arcs_scale_with_span():
    g = grid(3, 3)
    svg = render_svg(g, embed_two_page(g))
    xs = [float(x) for x in re.findall(r'<circle class="vertex" cx="([\d.]+)"', svg)]
    assert len(xs) == 9
    assert len({round(b - a, 6) for a, b in zip(xs, xs[1:])}) == 1
    step = xs[1] - xs[0]
    for page, _, x1, y, rx, ry, sweep in _arcs(svg):
        assert float(ry) > 0
        assert abs(float(rx) * 2 / step - round(float(rx) * 2 / step)) < 1e-9
        assert sweep == ("1" if page == "top" else "0")


def test_parallel_copies_are_distinguishable():
    g = Graph.build(2, [(0, 1), (0, 1)])
    from twopage.verify import BookEmbedding
    svg = render_svg(g, BookEmbedding([0, 1], {0: "top", 1: "top"}))
    assert len({a[5] for a in _arcs(svg)}) == 2


def test_render_is_byte_deterministic():
    g = grid(4, 4)
    be = embed_two_page(g)
    assert render_svg(g, be, title="g<1>") == render_svg(g, be, title="g<1>")
    assert "<title>g&lt;1&gt;</title>" in render_svg(g, be, title="g<1>")
