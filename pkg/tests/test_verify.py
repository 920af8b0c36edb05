"""Checkers and oracles, pinned to values worked out by hand or by exhaustive search."""

import networkx as nx
import pytest

from conftest import cycle_graph
from twopage.generators import from_networkx, gadget_chain, prism_stack
from twopage.graph import Graph, GraphError
from twopage.planar import planar_embed
from twopage.verify import (BOTTOM, TOP, BookEmbedding, SubhamCycle, brute_force_pages, circular_orders,
                            face_crossings, oracle_hamiltonian, oracle_separating_triangles, oracle_two_page,
                            subham_from_cycle, verify_book_embedding, verify_subhamiltonian)


def test_k4_oracle_witness(k4):
    be = oracle_two_page(k4)
    assert be.order == [0, 1, 2, 3]
    # only the diagonal (1, 3) has to leave the top page
    assert be.pages == {0: TOP, 1: TOP, 2: TOP, 3: TOP, 4: BOTTOM, 5: TOP}
    assert verify_book_embedding(k4, be).ok


def test_k5_has_no_two_page_embedding():
    assert oracle_two_page(from_networkx(nx.complete_graph(5))) is None


def test_oracle_size_cap():
    with pytest.raises(GraphError):
        oracle_two_page(cycle_graph(10))


def test_circular_orders_count():
    # (n-1)!/2 circular orders up to reflection
    assert sum(1 for _ in circular_orders(range(6))) == 60
    assert list(circular_orders([4, 2])) == [[2, 4]]


def test_crossing_pair_is_reported(k4):
    be = BookEmbedding([0, 1, 2, 3], {e: TOP for e in k4.edges})
    rep = verify_book_embedding(k4, be)
    assert not rep.ok
    (v,) = rep.violations
    assert v.kind == "same-page-alternation"
    assert {v.witness[0][1], v.witness[1][1]} == {(0, 2), (1, 3)}


def test_spine_must_be_permutation(k4):
    rep = verify_book_embedding(k4, BookEmbedding([0, 1, 1, 3], {e: TOP for e in k4.edges}))
    assert [v.kind for v in rep.violations] == ["spine-not-permutation"]


def test_missing_and_unknown_pages(k4):
    pages = {e: TOP for e in k4.edges if e != 4}
    pages[99] = TOP
    kinds = sorted(v.kind for v in verify_book_embedding(k4, BookEmbedding([0, 1, 2, 3], pages)).violations)
    assert kinds == ["edge-without-page", "page-for-unknown-edge"]


def test_brute_force_pages_agrees_with_oracle(k4):
    assert brute_force_pages(k4, [0, 1, 2, 3]) is not None
    k5 = from_networkx(nx.complete_graph(5))
    assert brute_force_pages(k5, [0, 1, 2, 3, 4]) is None


def test_subhamiltonian_path_needs_one_augmentation():
    g = Graph.build(4, [(0, 1), (1, 2), (2, 3)])
    assert verify_subhamiltonian(g, SubhamCycle([0, 1, 2, 3], [(3, 0)])).ok
    rep = verify_subhamiltonian(g, SubhamCycle([0, 1, 2, 3]))
    assert [v.kind for v in rep.violations] == ["missing-augmentation"]


def test_subhamiltonian_rejects_nonplanar_augmentation():
    # K5 minus the edge (0, 1) is planar; a cycle through 0-1 puts that edge back
    g = from_networkx(nx.complete_graph(5))
    g.remove_edge(0)
    h = subham_from_cycle(g, [0, 1, 2, 3, 4])
    assert h.aug == [(0, 1)]
    kinds = {v.kind for v in verify_subhamiltonian(g, h).violations}
    assert kinds == {"augmented-graph-nonplanar", "chords-not-two-colourable"}


def test_cycle_must_span():
    rep = verify_subhamiltonian(cycle_graph(4), SubhamCycle([0, 1, 2]))
    assert [v.kind for v in rep.violations] == ["cycle-not-spanning"]


def test_face_crossings_of_square_diagonal():
    g = cycle_graph(4)
    emb = planar_embed(g)
    h = subham_from_cycle(g, [0, 2, 1, 3])
    # pairs (0,2) and (1,3) both cross the two square faces
    assert sorted(face_crossings(emb, h).values()) == [2, 2]


@pytest.mark.parametrize("g,expected", [
    (prism_stack(3), [(3, 4, 5)]),
    (prism_stack(4), [(3, 4, 5), (6, 7, 8)]),
    (gadget_chain(2), [(3, 4, 5), (9, 10, 11)]),
])
def test_oracle_separating_triangles(g, expected):
    assert oracle_separating_triangles(g) == expected


def test_octahedron_has_no_separating_triangle(octahedron):
    assert oracle_separating_triangles(octahedron) == []


def test_oracle_hamiltonian(octahedron):
    assert oracle_hamiltonian(octahedron) == [0, 1, 2, 4, 5, 3]
    assert oracle_hamiltonian(Graph.build(4, [(0, 1), (1, 2), (2, 3)])) is None
    assert oracle_hamiltonian(Graph.build(2, [(0, 1), (0, 1)])) == [0, 1]
