"""Property-based checks over generated inputs."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from twopage import _kernels_py
from twopage.embedder import Context, embed_two_page
from twopage.formats import (EmbeddingDocument, parse_edge_list, parse_embedding, serialize_edge_list,
                             serialize_embedding)
from twopage.generators import random_4planar
from twopage.graph import Graph
from twopage.render import render_svg
from twopage.verify import TOP, BookEmbedding, verify_book_embedding

seeds = st.integers(min_value=0, max_value=10**6)


@st.composite
def multigraphs(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=30))
    g = Graph(n)
    for u, v in pairs:
        if u != v and g.multiplicity(u, v) < 2:
            g.add_edge(u, v)
    return g


def _relabelled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.build(g.n, [(perm[u], perm[v]) for _, (u, v) in sorted(g.edges.items())])


@settings(max_examples=60, deadline=None)
@given(n=st.integers(min_value=1, max_value=40), seed=seeds)
def test_random_graphs_embed_with_clean_audit(n, seed):
    g = random_4planar(n, seed)
    be = embed_two_page(g, ctx=Context(audit=True))
    assert verify_book_embedding(g, be).ok


@settings(max_examples=40, deadline=None)
@given(n=st.integers(min_value=4, max_value=30), seed=seeds)
def test_relabelling_does_not_matter(n, seed):
    g = _relabelled(random_4planar(n, seed), random.Random(seed))
    assert verify_book_embedding(g, embed_two_page(g)).ok


@settings(max_examples=40, deadline=None)
@given(a=st.integers(min_value=3, max_value=20), b=st.integers(min_value=3, max_value=20), seed=seeds)
def test_glued_graphs(a, b, seed):
    # two random graphs sharing one low-degree vertex
    ga, gb = random_4planar(a, seed), random_4planar(b, seed + 1)
    va = min(ga.vertices, key=lambda v: (ga.degree(v), v))
    vb = min(gb.vertices, key=lambda v: (gb.degree(v), v))
    if ga.degree(va) + gb.degree(vb) > 4:
        return
    shift = {v: (va if v == vb else a + v - (v > vb)) for v in gb.vertices}
    g = Graph.build(a + b - 1, list(ga.edges.values()) + [(shift[u], shift[v]) for u, v in gb.edges.values()])
    assert verify_book_embedding(g, embed_two_page(g)).ok


@given(g=multigraphs())
def test_edge_list_round_trip(g):
    text = serialize_edge_list(g)
    back = parse_edge_list(text)
    assert back.edges == g.edges and back.n == g.n
    assert serialize_edge_list(back) == text


@given(g=multigraphs(), seed=seeds)
def test_embedding_document_round_trip(g, seed):
    rng = random.Random(seed)
    order = g.vertices
    rng.shuffle(order)
    be = BookEmbedding(order, {e: rng.choice(("top", "bottom")) for e in g.edges})
    doc = EmbeddingDocument.from_book(g, be)
    text = serialize_embedding(doc)
    back = parse_embedding(text)
    assert back == doc
    assert back.to_book(g).pages == be.pages
    assert render_svg(g, be) == render_svg(g, back.to_book(g))


@given(m=st.integers(min_value=0, max_value=40), seed=seeds)
def test_crossing_kernel_matches_definition(m, seed):
    rng = random.Random(seed)
    n = 10
    pos = {v: v for v in range(n)}
    es = [tuple(rng.sample(range(n), 2)) for _ in range(m)]
    page = [rng.randrange(2) for _ in range(m)]
    got = _kernels_py.crossing_pairs(pos, [u for u, _ in es], [v for _, v in es], page)

    def alt(i, j):
        a, b = sorted(es[i])
        c, d = sorted(es[j])
        return page[i] == page[j] and (a < c < b < d or c < a < d < b)

    assert got == [(i, j) for i in range(m) for j in range(i + 1, m) if alt(i, j)]


@given(g=multigraphs())
def test_single_page_outerplanar_check(g):
    # a spine order with every edge on top passes iff no two edges alternate
    be = BookEmbedding(g.vertices, {e: TOP for e in g.edges})
    rep = verify_book_embedding(g, be)
    pos = be.positions()
    ends = [sorted((pos[u], pos[v])) for u, v in g.edges.values()]
    alternating = any(a < c < b < d for a, b in ends for c, d in ends)
    assert rep.ok == (not alternating)
