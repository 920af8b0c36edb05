import networkx as nx
import pytest

from conftest import cycle_graph
from twopage.generators import from_networkx, grid, prism_stack
from twopage.graph import Graph, GraphError
from twopage.planar import (NonPlanarError, biconnected_split, chordless_outerface, connectivity_class,
                            outer_chords, planar_embed, recompose_book_embeddings)
from twopage.verify import TOP, BookEmbedding, verify_book_embedding


def test_rotation_system_satisfies_euler(octahedron):
    emb = planar_embed(octahedron)
    assert emb.euler_ok()
    assert len(emb.faces()) == 8
    assert all(len(f) == 3 for f in emb.faces())


def test_double_edge_bounds_a_bigon():
    g = Graph.build(3, [(0, 1), (0, 1), (1, 2), (2, 0)])
    emb = planar_embed(g)
    assert emb.euler_ok()
    assert sorted(len(f) for f in emb.faces()) == [2, 3, 3]


def test_k5_rejected():
    with pytest.raises(NonPlanarError):
        planar_embed(from_networkx(nx.complete_graph(5)))


def test_mirror_keeps_outer_face(k4):
    emb = planar_embed(k4)
    m = emb.mirrored()
    assert m.euler_ok()
    assert sorted(v for v, _ in m.outer) == sorted(v for v, _ in emb.outer)


@pytest.mark.parametrize("g,expected", [
    (Graph.build(3, [(0, 1), (1, 2)]), "1"),
    (cycle_graph(5), "2"),
    (grid(3, 3), "2"),
    (prism_stack(3), ">=3"),
    (Graph.build(4, [(0, 1), (2, 3)]), "disconnected"),
])
def test_connectivity_class(g, expected):
    assert connectivity_class(g) == expected


def test_connectivity_class_matches_networkx(corpus8):
    for g in corpus8[::7]:
        h = nx.Graph(list(g.edge_multiset()))
        h.add_nodes_from(g.vertices)
        k = nx.node_connectivity(h) if g.n > 1 else 0
        want = "1" if k <= 1 else ("2" if k == 2 else ">=3")
        if g.n <= 3 and k >= 2:
            want = "2"
        assert connectivity_class(g) == want, g.edges


def test_chordless_outerface_removes_chords():
    # hexagon with two chords; the outer face must end up chordless
    g = Graph.build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 3)])
    emb = chordless_outerface(g, planar_embed(g))
    assert emb.euler_ok()
    assert outer_chords(emb) == []


def test_chordless_outerface_needs_biconnected():
    with pytest.raises(GraphError):
        chordless_outerface(Graph.build(3, [(0, 1), (1, 2)]), planar_embed(Graph.build(3, [(0, 1), (1, 2)])))


def test_biconnected_split_orders_blocks_by_cut_tree():
    g = Graph.build(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
    parts = biconnected_split(g)
    assert [sorted(p.vertices) for p, _ in parts] == [[0, 1, 2], [2, 3], [3, 4], [4, 5, 6]]
    assert [c for _, c in parts] == [[2], [2, 3], [3, 4], [4]]


def test_recompose_splices_after_cut_vertex():
    g = Graph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    parts = []
    for sub, _ in biconnected_split(g):
        order = sorted(sub.vertices, reverse=True)
        parts.append((sub, BookEmbedding(order, {e: TOP for e in sub.edges})))
    be = recompose_book_embeddings(parts)
    assert be.order == [2, 4, 3, 1, 0]
    assert verify_book_embedding(g, be).ok


def test_recompose_rejects_disconnected_blocks():
    a = Graph.build(4, [(0, 1)]).subgraph([0, 1])
    b = Graph.build(4, [(2, 3)])
    b = b.subgraph([2, 3])
    with pytest.raises(GraphError):
        recompose_book_embeddings([(a, BookEmbedding([0, 1], {0: TOP})), (b, BookEmbedding([2, 3], {0: TOP}))])
