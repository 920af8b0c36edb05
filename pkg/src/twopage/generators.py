"""Corpus generators: small exhaustive enumeration and scalable families."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import networkx as nx

from .graph import Graph, GraphError, bridges


def from_networkx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes)
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph.build(len(nodes), sorted(tuple(sorted((idx[u], idx[v]))) for u, v in h.edges))


def _ok(h: nx.Graph) -> bool:
    return (h.number_of_nodes() > 0 and nx.is_connected(h)
            and max((d for _, d in h.degree), default=0) <= 4 and nx.check_planarity(h)[0])


def _canonical_edges(h: nx.Graph) -> tuple:
    """Deterministic relabelling: BFS from a max-degree vertex, ties by original id."""
    start = min(h.nodes, key=lambda v: (-h.degree(v), v))
    order = [start]
    seen = {start}
    i = 0
    while i < len(order):
        for w in sorted(h.neighbors(order[i]), key=lambda w: (-h.degree(w), w)):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    lab = {v: k for k, v in enumerate(order)}
    return tuple(sorted(tuple(sorted((lab[u], lab[v]))) for u, v in h.edges))


@lru_cache(maxsize=None)
def _small(n: int) -> tuple[tuple, ...]:
    """Edge lists of every connected planar max-degree-4 graph on ``n`` vertices, up to isomorphism."""
    if n <= 7:
        out = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and _ok(h)]
        return tuple(_canonical_edges(h) for h in out)
    # every connected graph has a vertex whose removal keeps it connected, so
    # extending each (n-1)-vertex member by one vertex reaches all members
    buckets: dict[str, list[nx.Graph]] = {}
    found = []
    for edges in _small(n - 1):
        base = nx.Graph()
        base.add_nodes_from(range(n - 1))
        base.add_edges_from(edges)
        open_ = [v for v in range(n - 1) if base.degree(v) < 4]
        for size in range(1, 5):
            for nb in itertools.combinations(open_, size):
                h = base.copy()
                h.add_edges_from((n - 1, v) for v in nb)
                if not nx.check_planarity(h)[0]:
                    continue
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, o) for o in bucket):
                    continue
                bucket.append(h)
                found.append(h)
    return tuple(sorted(_canonical_edges(h) for h in found))


def enumerate_small(n_max: int, n_min: int = 1):
    """Yield every connected planar graph with maximum degree 4 on n_min..n_max vertices."""
    if n_max > 8:
        raise GraphError("exhaustive enumeration is limited to 8 vertices")
    for n in range(max(1, n_min), n_max + 1):
        for edges in _small(n):
            yield Graph.build(n, edges)


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise GraphError("grid dimensions must be positive")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.build(rows * cols, edges)


def prism_stack(k: int) -> Graph:
    """C3 x P_k: k nested triangles joined by matchings (k-2 separating triangles)."""
    if k < 2:
        raise GraphError("prism stack needs k >= 2")
    edges = []
    for i in range(k):
        for j in range(3):
            edges.append((3 * i + j, 3 * i + (j + 1) % 3))
            if i:
                edges.append((3 * (i - 1) + j, 3 * i + j))
    return Graph.build(3 * k, edges)


def gadget_chain(k: int) -> Graph:
    """Triconnected 4-planar graph with exactly ``k`` separating triangles.

    Start from the prism ring C_m x P_2 (m = max(k, 3)) and replace k outer
    ring vertices by a small prism: a triangle facing the ring with a second
    triangle nested inside it.
    """
    if k < 1:
        raise GraphError("gadget chain needs k >= 1")
    m = max(k, 3)
    g = Graph(0)
    inner = [g.add_vertex() for _ in range(m)]
    # ports[i] = (vertex towards i-1, vertex towards i+1, vertex towards inner ring)
    ports = []
    for i in range(m):
        if i < k:
            a, b, c = g.add_vertex(), g.add_vertex(), g.add_vertex()
            x, y, z = g.add_vertex(), g.add_vertex(), g.add_vertex()
            for u, v in ((a, b), (b, c), (c, a), (x, y), (y, z), (z, x), (a, x), (b, y), (c, z)):
                g.add_edge(u, v)
            ports.append((a, c, b))
        else:
            o = g.add_vertex()
            ports.append((o, o, o))
    for i in range(m):
        j = (i + 1) % m
        g.add_edge(inner[i], inner[j])
        g.add_edge(ports[i][1], ports[j][0])
        g.add_edge(ports[i][2], inner[i])
    return g


def random_4planar(n: int, seed: int) -> Graph:
    """Seeded random connected planar graph with maximum degree 4.

    Delaunay triangulation of random points, then edges at vertices of degree
    above four are dropped greedily (heaviest neighbour first) unless the
    edge is a bridge.
    """
    if n < 1:
        raise GraphError("need at least one vertex")
    rng = random.Random(seed)
    if n <= 3:
        return Graph.build(n, [(i, i + 1) for i in range(n - 1)])
    from scipy.spatial import Delaunay

    pts = [(rng.random(), rng.random()) for _ in range(n)]
    tri = Delaunay(pts)
    es = set()
    for s in tri.simplices:
        a, b, c = (int(x) for x in s)
        es.update({tuple(sorted(p)) for p in ((a, b), (b, c), (a, c))})
    g = Graph.build(n, sorted(es))
    for v in sorted(g.vertices, key=lambda v: (-g.degree(v), v)):
        while g.degree(v) > 4:
            br = bridges(g)
            cands = [(e, w) for e, w in g.inc[v] if e not in br]
            if not cands:
                raise GraphError("could not reduce degrees without disconnecting")  # pragma: no cover
            e, _ = max(cands, key=lambda ew: (g.degree(ew[1]), rng.random()))
            g.remove_edge(e)
    # renumber edges densely so serialisation is canonical
    return Graph.build(n, sorted(tuple(sorted(p)) for p in g.edges.values()))


FAMILIES = ("enumerate_small", "grid", "prism_stack", "gadget_chain", "random_4planar")


def gen_corpus(family: str, params: dict, seed: int = 0):
    """Stream of graphs for a named family."""
    if family == "enumerate_small":
        yield from enumerate_small(int(params.get("n", 6)), int(params.get("n_min", 1)))
    elif family == "grid":
        yield grid(int(params.get("rows", 3)), int(params.get("cols", params.get("rows", 3))))
    elif family == "prism_stack":
        yield prism_stack(int(params.get("k", 3)))
    elif family == "gadget_chain":
        yield gadget_chain(int(params.get("k", 3)))
    elif family == "random_4planar":
        count = int(params.get("count", 1))
        for i in range(count):
            yield random_4planar(int(params.get("n", 20)), seed + i)
    else:
        raise GraphError(f"unknown family {family!r}")
