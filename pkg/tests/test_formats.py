import pytest

from conftest import cycle_graph
from twopage.embedder import embed_two_page
from twopage.formats import (DocumentError, EmbeddingDocument, parse_edge_list, parse_embedding,
                             serialize_edge_list, serialize_embedding)
from twopage.generators import prism_stack
from twopage.graph import Graph
from twopage.subham import subham_triconnected
from twopage.verify import BOTTOM, TOP


def test_triangle():
    g = parse_edge_list("p 3 3\n0 1\n1 2\n2 0\n")
    assert (g.n, g.m) == (3, 3)
    assert g.edges == {0: (0, 1), 1: (1, 2), 2: (2, 0)}


def test_duplicate_line_is_double_edge():
    g = parse_edge_list("# two copies\np 2 2\n0 1\n1 0\n")
    assert g.multiplicity(0, 1) == 2


def test_comments_and_blank_lines():
    g = parse_edge_list("# header follows\n\np 3 2\n0 1\n  # inner\n1 2\n")
    assert g.m == 2


@pytest.mark.parametrize("text,line,fragment", [
    ("p 2 1\n0 5\n", 2, "out of range"),
    ("q 2 1\n0 1\n", 1, "malformed header"),
    ("p 2\n0 1\n", 1, "malformed header"),
    ("p two 1\n0 1\n", 1, "integers"),
    ("p 2 3\n0 1\n0 1\n1 0\n", 4, "multiplicity"),
    ("p 3 1\n0 1\n1 2\n", 3, "announces 1"),
    ("p 3 2\n0 1\n", 2, "announces 2"),
    ("p 3 1\n0 1 2\n", 2, "expected"),
    ("p 3 1\n1 1\n", 2, "self-loop"),
    ("p 3 1\n-1 2\n", 2, "negative"),
    ("", 0, "empty"),
])
def test_positioned_errors(text, line, fragment):
    with pytest.raises(DocumentError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_edge_list_round_trip():
    g = Graph.build(4, [(2, 0), (0, 1), (1, 2), (1, 2), (3, 1)])
    text = serialize_edge_list(g)
    assert text == "p 4 5\n2 0\n0 1\n1 2\n1 2\n3 1\n"
    assert parse_edge_list(text).edges == g.edges
    assert serialize_edge_list(parse_edge_list(text)) == text


def test_edge_list_needs_dense_ids():
    g = cycle_graph(4)
    g.remove_vertex(2)
    with pytest.raises(ValueError):
        serialize_edge_list(g)


def test_book_document_round_trip():
    g = prism_stack(3)
    be = embed_two_page(g)
    doc = EmbeddingDocument.from_book(g, be)
    text = serialize_embedding(doc)
    assert text.startswith("order: ")
    assert parse_embedding(text) == doc
    assert serialize_embedding(parse_embedding(text)) == text
    back = doc.to_book(g)
    assert back.order == be.order and back.pages == be.pages


def test_parallel_edges_keep_their_pages():
    g = Graph.build(2, [(0, 1), (0, 1)])
    doc = parse_embedding("order: 0 1\npage 0 1 top\npage 1 0 bottom\n")
    assert doc.to_book(g).pages == {0: TOP, 1: BOTTOM}


def test_cycle_document_round_trip():
    g = prism_stack(3)
    h = subham_triconnected(g)
    doc = EmbeddingDocument.from_cycle(h)
    text = serialize_embedding(doc)
    assert parse_embedding(text).to_cycle().cycle == h.cycle
    doc = parse_embedding("cycle: 0 1 2 3\naug: 3 0\n")
    assert doc.aug == [(3, 0)]
    assert serialize_embedding(doc) == "cycle: 0 1 2 3\naug: 3 0\n"


@pytest.mark.parametrize("text,line", [
    ("order: 0 1\npage 0 1 left\n", 2),
    ("order: 0 1\norder: 1 0\n", 2),
    ("cycle: 0 1\ncycle: 0 1\n", 2),
    ("aug: 0\n", 1),
    ("spine 0 1\n", 1),
    ("order: 0 x\n", 1),
])
def test_embedding_parse_errors(text, line):
    with pytest.raises(DocumentError) as info:
        parse_embedding(text)
    assert info.value.line == line


def test_page_line_without_edge():
    with pytest.raises(DocumentError):
        parse_embedding("order: 0 1 2\npage 0 2 top\n").to_book(Graph.build(3, [(0, 1)]))
    with pytest.raises(DocumentError):
        EmbeddingDocument().to_book(Graph(1))
    with pytest.raises(DocumentError):
        EmbeddingDocument().to_cycle()
