import networkx as nx
import pytest

from conftest import cycle_graph
from twopage.embedder import Context, embed_block, embed_two_page
from twopage.frame import InvariantError, rotation_violations
from twopage.generators import from_networkx, gadget_chain, grid, prism_stack, random_4planar
from twopage.graph import Graph, GraphError
from twopage.planar import NonPlanarError, PlanarEmbedding, chordless_outerface, planar_embed
from twopage.verify import BOTTOM, TOP, BookEmbedding, verify_book_embedding

# Smallest graphs found that drive the construction through each of its
# cases: (edges, index of the outer face in planar_embed(g).faces(), last vertex).
WITNESSES = {
    "anchor-case1": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], 0, 2),
    "anchor-case2-deg3-left": ([(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4)], 0, 0),
    "anchor-case2-deg3-right": ([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], 0, 0),
    "anchor-case2-deg4-left": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)], 4, 2),
    "anchor-case2-deg4-right": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)], 0, 2),
    "anchor-leftmost": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 5), (3, 4)], 2, 4),
    "anchor-rightmost": ([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 3), (2, 4), (4, 5)], 2, 0),
    "anchored-trees": ([(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 5), (4, 5)], 0, 0),
    "ancillary-leftmost": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (5, 6),
                            (5, 7), (6, 7)], 1, 4),
    "bootstrap-case1": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 4), (2, 5)], 0, 0),
    "bootstrap-case1-mirrored": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 4), (2, 6),
                                  (5, 6)], 0, 2),
    "bootstrap-case2.1": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (1, 5), (2, 6), (2, 7), (3, 4),
                           (3, 6), (5, 7)], 0, 2),
    "bootstrap-case2.2-marked": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 5), (1, 6), (2, 5), (2, 6),
                                  (3, 4), (3, 5)], 0, 0),
    "bootstrap-case2.2-unmarked": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 5), (1, 6), (2, 5), (2, 6),
                                    (3, 5), (4, 5)], 0, 0),
    "flip": ([(0, 2), (0, 5), (0, 7), (1, 3), (1, 6), (1, 7), (2, 3), (2, 5), (2, 7), (3, 7), (4, 5), (4, 6),
              (4, 8), (5, 6), (6, 8)], 3, 3),
    "ip3-mirror": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6),
                    (5, 6), (5, 7), (6, 7)], 7, 7),
    "ip4-case1": ([(0, 2), (0, 7), (0, 8), (1, 2), (1, 3), (1, 4), (1, 10), (2, 7), (2, 8), (3, 4), (3, 7),
                   (4, 5), (4, 10), (5, 6), (5, 8), (5, 9), (6, 8), (6, 9), (6, 10), (9, 10)], 1, 0),
    "ip4-case2.1": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6),
                     (5, 6), (5, 7), (6, 7)], 7, 6),
    "ip4-case2.2": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 5), (5, 6),
                     (5, 7), (6, 7)], 6, 7),
    "nonsimple-boundary": ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 5),
                            (3, 7), (5, 6), (5, 7)], 1, 4),
    "reposition": ([(0, 2), (0, 3), (0, 4), (1, 2), (1, 8), (1, 10), (2, 5), (2, 7), (3, 4), (3, 5), (3, 6),
                    (4, 6), (4, 8), (5, 6), (6, 8), (7, 9), (9, 10)], 5, 4),
}


def _graph(edges):
    return Graph.build(1 + max(v for e in edges for v in e), edges)


@pytest.mark.parametrize("case", sorted(WITNESSES))
def test_case_witness(case):
    edges, face, last = WITNESSES[case]
    g = _graph(edges)
    emb = planar_embed(g)
    outer = PlanarEmbedding(g, emb.rot, emb.faces()[face])
    ctx = Context(audit=True)
    d = embed_block(g, outer, last=last, ctx=ctx)
    assert case in ctx.cases
    rep = verify_book_embedding(g, BookEmbedding(d.order, d.pages))
    assert rep.ok, rep.summary()
    assert d.order[-1] == last
    # the drawing realises the embedding or its mirror image
    mirror = {v: r[::-1] for v, r in outer.rot.items()}
    assert [] in (rotation_violations(g, outer.rot, d.order, d.pages),
                  rotation_violations(g, mirror, d.order, d.pages))


def test_cycle_drawn_with_one_top_edge():
    be = embed_two_page(cycle_graph(4))
    assert be.order == [0, 1, 2, 3]
    assert sorted(be.pages.values()) == [BOTTOM, BOTTOM, BOTTOM, TOP]


def test_tree_drawn_on_one_page():
    g = Graph.build(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    be = embed_two_page(g)
    assert be.order == [0, 1, 2, 3, 4]
    assert set(be.pages.values()) == {TOP}


def test_disconnected_input():
    g = Graph.build(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (3, 5)])
    assert verify_book_embedding(g, embed_two_page(g)).ok


def test_double_edges():
    g = Graph.build(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (2, 3)])
    assert verify_book_embedding(g, embed_two_page(g, audit=True)).ok


def test_degree_five_rejected():
    with pytest.raises(GraphError, match="degree"):
        embed_two_page(from_networkx(nx.star_graph(5)))


def test_nonplanar_rejected():
    with pytest.raises(NonPlanarError):
        embed_two_page(from_networkx(nx.complete_bipartite_graph(3, 3)))


def test_degree_four_last_needs_all_outer_degree_four():
    edges, face, _ = WITNESSES["anchor-case1"]
    g = _graph(edges)
    emb = planar_embed(g)
    outer = PlanarEmbedding(g, emb.rot, emb.faces()[face])
    heavy = next(v for v, _ in outer.outer if g.degree(v) == 4)
    with pytest.raises(GraphError):
        embed_block(g, outer, last=heavy)


@pytest.mark.parametrize("g", [grid(4, 4), grid(5, 9), prism_stack(6), gadget_chain(5),
                               random_4planar(60, 1), random_4planar(120, 2)],
                         ids=["grid4x4", "grid5x9", "prism6", "gadget5", "rand60", "rand120"])
def test_families_with_audit(g):
    ctx = Context(audit=True)
    be = embed_two_page(g, ctx=ctx)
    assert verify_book_embedding(g, be).ok
    assert ctx.frames > 0


def test_every_outer_face_of_octahedron(octahedron):
    emb = planar_embed(octahedron)
    for f in emb.faces():
        outer = chordless_outerface(octahedron, PlanarEmbedding(octahedron, emb.rot, f))
        for last in {v for v, _ in outer.outer}:
            d = embed_block(octahedron, outer, last=last, ctx=Context(audit=True))
            assert sorted(d.order) == list(range(6))


def test_invariant_error_is_not_an_input_error():
    assert not issubclass(InvariantError, GraphError)
