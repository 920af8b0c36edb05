import networkx as nx
import pytest

from lemma_tables import expected_reroute, merge_rows, reroute_rows
from twopage.generators import from_networkx, gadget_chain, grid, prism_stack
from twopage.graph import Graph, GraphError
from twopage.planar import connectivity_class, planar_embed
from twopage.subham import (DegenerateSideError, InvariantError, chord_hosts, find_separating_triangles,
                            hamiltonian_cycle_backend, replace_triangle, stellate, subham_no_triangles,
                            subham_triconnected)
from twopage.verify import face_crossings, oracle_separating_triangles, verify_subhamiltonian


def _cube():
    return from_networkx(nx.hypercube_graph(3))


def test_separating_triangle_sides():
    (t,) = find_separating_triangles(prism_stack(3))
    assert t.vertices == (3, 4, 5)
    assert {t.a_in, t.b_in, t.c_in} | {t.a_out, t.b_out, t.c_out} == {0, 1, 2, 6, 7, 8}
    assert len(t.inside) == len(t.outside) == 3


def test_detector_outside_triconnected_inputs():
    # two triangles sharing a vertex: the shared vertex is a cut vertex, no triangle separates
    g = Graph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert find_separating_triangles(g, strict=False) == []
    # K4 with a pendant vertex at 3: no triangle separates, 3 is a cut vertex
    g = Graph.build(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    found = sorted(t.vertices for t in find_separating_triangles(g, strict=False))
    assert found == oracle_separating_triangles(g)


def test_strict_mode_rejects_touching_triangles():
    # K4 plus a vertex joined to 0 and 3: triangles 0-1-3 and 0-2-3 both separate and share vertices
    g = Graph.build(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 0)])
    with pytest.raises(InvariantError):
        find_separating_triangles(g, strict=True, triconnected=False)


def test_backend_on_octahedron(octahedron):
    cyc = hamiltonian_cycle_backend(octahedron)
    assert sorted(cyc) == list(range(6))
    assert all(octahedron.has_edge(cyc[i], cyc[i - 1]) for i in range(6))


def test_backend_reports_failure():
    with pytest.raises(InvariantError):
        hamiltonian_cycle_backend(Graph.build(4, [(0, 1), (1, 2), (2, 3)]))


def test_stellation_vertices_are_independent():
    g = _cube()
    big, extra = stellate(g, planar_embed(g))
    assert len(extra) == 6
    assert all(not big.has_edge(x, y) for x in extra for y in extra if x != y)


@pytest.mark.parametrize("make", [_cube, lambda: grid(3, 3)])
def test_no_triangles_cycle_crosses_faces_once(make):
    g = make()
    emb = planar_embed(g)
    h = subham_no_triangles(g, emb)
    assert verify_subhamiltonian(g, h).ok
    assert max(face_crossings(emb, h).values()) <= 1
    assert set(h.hosts) == set(h.aug)


def test_chord_hosts_detects_interleaving():
    g = _cube()
    emb = planar_embed(g)
    a, b, c, d = [v for v, _ in emb.faces()[0]]
    assert chord_hosts(emb, [(a, c)]) == {tuple(sorted((a, c))): 0}
    # both diagonals of one square face would cross inside it
    assert chord_hosts(emb, [(a, c), (b, d)]) is None


def test_replace_triangle():
    g = prism_stack(4)
    t = next(t for t in find_separating_triangles(g) if t.vertices == (3, 4, 5))
    h, d = replace_triangle(g, t, "out")
    assert h.n == 4 and sorted(h.neighbors(d)) == [0, 1, 2]


def test_replace_triangle_degenerate_side():
    # K4 with one face stellated: triangle 0-1-2 has the single vertex 3 on one side
    g = Graph.build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)])
    t = next(t for t in find_separating_triangles(g, strict=False) if t.vertices == (0, 1, 2))
    with pytest.raises(DegenerateSideError):
        replace_triangle(g, t, "in" if len(t.inside) == 1 else "out")


@pytest.mark.parametrize("row", reroute_rows(), ids=lambda r: f"{r['config']}-{r['requested']}")
def test_reroute_case_table(row):
    assert expected_reroute(row), row


def test_reroute_same_face_reports_substitution():
    rows = [r for r in reroute_rows() if r["config"] == "3ii"]
    assert [r["substituted"] for r in rows] == [True, True, False]
    assert {r["achieved"] for r in rows} == {((10, 12), (11, 12))}


def test_merge_hypothesis_patterns():
    rows = merge_rows()
    assert len(rows) == 64
    for r in rows:
        assert r["outcome"] == ("merged" if r["legal"] else "rejected"), r
    assert sum(r["legal"] for r in rows) == 6


@pytest.mark.parametrize("g", [
    Graph.build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    from_networkx(nx.octahedral_graph()),
    prism_stack(2), prism_stack(3), prism_stack(7),
    gadget_chain(1), gadget_chain(4),
], ids=["k4", "octahedron", "prism2", "prism3", "prism7", "gadget1", "gadget4"])
def test_subham_triconnected(g):
    trace = []
    h = subham_triconnected(g, trace=trace)
    assert verify_subhamiltonian(g, h).ok
    assert len(trace) == len(oracle_separating_triangles(g))


def test_subham_trace_names_cases():
    trace = []
    subham_triconnected(prism_stack(5), trace=trace)
    assert len(trace) == 3
    assert all(t["in"] in ("k4", "1", "2i", "2ii", "3i", "3ii") for t in trace)


@pytest.mark.parametrize("g,msg", [
    (grid(3, 3), "triconnected"),
    (Graph.build(3, [(0, 1), (1, 2), (2, 0), (0, 1)]), "parallel"),
    (from_networkx(nx.wheel_graph(6)), "degree"),
])
def test_subham_input_contract(g, msg):
    with pytest.raises(GraphError, match=msg):
        subham_triconnected(g)


def test_prism_is_triconnected():
    assert connectivity_class(prism_stack(4)) == ">=3"
