"""Combinatorial planar embeddings: rotation systems, faces, connectivity, chordless outerfaces."""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .graph import Graph, GraphError


class NonPlanarError(GraphError):
    """The input graph has no planar embedding."""


Dart = tuple[int, int]  # (tail vertex, edge id)


@dataclass
class PlanarEmbedding:
    """Rotation system (clockwise edge order per vertex) plus a designated outer face.

    ``outer`` is a facial walk given as a list of darts ``(vertex, edge)``;
    following ``edge`` from ``vertex`` leads to the tail of the next dart.
    """

    graph: Graph
    rot: dict[int, list[int]]
    outer: list[Dart] = field(default_factory=list)

    def next_dart(self, dart: Dart) -> Dart:
        u, e = dart
        v = self.graph.other(e, u)
        r = self.rot[v]
        return v, r[(r.index(e) + 1) % len(r)]

    def face_of(self, dart: Dart) -> list[Dart]:
        walk = [dart]
        d = self.next_dart(dart)
        while d != dart:
            walk.append(d)
            d = self.next_dart(d)
        return walk

    def faces(self) -> list[list[Dart]]:
        seen: set[Dart] = set()
        out = []
        for v in sorted(self.rot):
            for e in self.rot[v]:
                if (v, e) in seen:
                    continue
                f = self.face_of((v, e))
                seen.update(f)
                out.append(f)
        return out

    @property
    def outer_vertices(self) -> list[int]:
        return [v for v, _ in self.outer]

    def euler_ok(self) -> bool:
        g = self.graph
        comps = g.components()
        isolated = sum(1 for c in comps if len(c) == 1 and g.degree(c[0]) == 0)
        return g.n - g.m + len(self.faces()) + isolated == 1 + len(comps)

    def copy(self) -> "PlanarEmbedding":
        return PlanarEmbedding(self.graph, {v: list(r) for v, r in self.rot.items()}, list(self.outer))

    def restricted(self, sub: Graph) -> "PlanarEmbedding":
        """Embedding of a subgraph (same ids) obtained by deleting edges from the rotations."""
        rot = {v: [e for e in self.rot[v] if e in sub.edges] for v in sub.vertices}
        emb = PlanarEmbedding(sub, rot)
        fs = emb.faces()
        if fs:
            emb.outer = max(fs, key=lambda f: (len(f), [-x for x, _ in f]))
        return emb

    def mirrored(self) -> "PlanarEmbedding":
        """Same embedding seen from the other side of the plane."""
        emb = PlanarEmbedding(self.graph, {v: r[::-1] for v, r in self.rot.items()})
        if self.outer:
            # a face traversed backwards is a face of the mirror
            target = {(self.graph.other(e, v), e) for v, e in self.outer}
            for f in emb.faces():
                if set(f) == target:
                    emb.outer = f
                    break
        return emb


def faces(emb: PlanarEmbedding) -> list[list[Dart]]:
    return emb.faces()


def face_vertices(face: list[Dart]) -> list[int]:
    return [v for v, _ in face]


def _simple_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(sorted(g.vertices))
    h.add_edges_from(sorted({tuple(sorted(p)) for p in g.edges.values()}))
    return h


def planar_embed(g: Graph) -> PlanarEmbedding:
    """Planar rotation system for ``g``; the longest face becomes the outer face.

    Parallel edges are placed next to each other so they bound a bigon.
    Raises NonPlanarError when ``g`` is not planar.
    """
    ok, nxemb = nx.check_planarity(_simple_nx(g))
    if not ok:
        raise NonPlanarError("graph is not planar")
    rot: dict[int, list[int]] = {}
    for v in g.vertices:
        by_nbr: dict[int, list[int]] = {}
        for e, w in g.inc[v]:
            by_nbr.setdefault(w, []).append(e)
        order = []
        for w in nxemb.neighbors_cw_order(v) if v in nxemb else []:
            es = sorted(by_nbr[w])
            # the two copies of a double edge are listed in opposite order at their two ends
            order.extend(es if v < w else es[::-1])
        rot[v] = order
    emb = PlanarEmbedding(g, rot)
    fs = emb.faces()
    if fs:
        emb.outer = max(fs, key=lambda f: (len(f), [-x for x, _ in f]))
    return emb


def connectivity_class(g: Graph) -> str:
    """One of ``"disconnected"``, ``"1"``, ``"2"``, ``">=3"`` (vertex connectivity bucket)."""
    if g.n == 0 or not g.is_connected():
        return "disconnected"
    if g.n <= 2:
        return "1"
    h = _simple_nx(g)
    if any(True for _ in nx.articulation_points(h)):
        return "1"
    if g.n <= 3:
        return "2"
    ok, nxemb = nx.check_planarity(h)
    if not ok:
        return _brute_triconnected(h)
    # biconnected plane graph: 3-connected iff two faces meet in nothing, a vertex or an edge
    rot = {v: list(nxemb.neighbors_cw_order(v)) for v in h.nodes}
    face_id: dict[tuple[int, int], int] = {}
    nf = 0
    for u in rot:
        for w in rot[u]:
            if (u, w) in face_id:
                continue
            a, b = u, w
            while (a, b) not in face_id:
                face_id[(a, b)] = nf
                r = rot[b]
                a, b = b, r[(r.index(a) + 1) % len(r)]
            nf += 1
    shared: dict[tuple[int, int], list[int]] = {}
    for v in rot:
        fs = sorted({face_id[(v, w)] for w in rot[v]})
        for x in range(len(fs)):
            for y in range(x + 1, len(fs)):
                shared.setdefault((fs[x], fs[y]), []).append(v)
    for (f1, f2), vs in shared.items():
        if len(vs) == 1:
            continue
        if len(vs) > 2:
            return "2"
        u, w = vs
        on1 = {face_id.get((u, w)), face_id.get((w, u))}
        if not h.has_edge(u, w) or f1 not in on1 or f2 not in on1:
            return "2"
    return ">=3"


def _brute_triconnected(h: nx.Graph) -> str:
    for v in list(h.nodes):
        rest = h.copy()
        rest.remove_node(v)
        if any(True for _ in nx.articulation_points(rest)):
            return "2"
    return ">=3"


def outer_cycle(emb: PlanarEmbedding) -> list[int]:
    vs = emb.outer_vertices
    if len(set(vs)) != len(vs):
        raise GraphError("outer face is not a simple cycle")
    return vs


def outer_chords(emb: PlanarEmbedding) -> list[int]:
    """Edges joining two outer-face vertices that are not outer-face edges."""
    cyc = outer_cycle(emb)
    on = set(cyc)
    used = {e for _, e in emb.outer}
    g = emb.graph
    return sorted(e for e, (u, v) in g.edges.items() if u in on and v in on and e not in used)


def _genus0(emb: PlanarEmbedding) -> bool:
    g = emb.graph
    return g.n - g.m + len(emb.faces()) == 2


def chordless_outerface(g: Graph, emb: PlanarEmbedding) -> PlanarEmbedding:
    """Re-embed biconnected ``g`` so that its outer face cycle has no chord.

    Repeatedly picks a chord (u_i, u_j) whose side C' = u_i..u_j has no chord,
    moves the opposite part (minus the chord) into the face of C' containing
    the chord, and makes C' the outer face.
    """
    if connectivity_class(g) not in ("2", ">=3") and g.n > 2:
        raise GraphError("chordless_outerface needs a biconnected graph")
    emb = emb.copy()
    while True:
        chords = outer_chords(emb)
        if not chords:
            return emb
        cyc = outer_cycle(emb)
        k = len(cyc)
        pos = {v: i for i, v in enumerate(cyc)}
        best = None
        for c in chords:
            a, b = g.edges[c]
            for s, t in ((a, b), (b, a)):
                span = (pos[t] - pos[s]) % k
                if best is None or (span, pos[s]) < best[0]:
                    best = ((span, pos[s]), c, s, t)
        _, chord, ui, uj = best
        arc = [cyc[(pos[ui] + d) % k] for d in range(((pos[uj] - pos[ui]) % k) + 1)]
        emb = _flip_across_chord(g, emb, chord, ui, uj, arc)


def _side_vertices(g: Graph, start_edges, ui, uj) -> set[int]:
    seen: set[int] = set()
    stack = []
    for e, w in start_edges:
        if w not in (ui, uj) and w not in seen:
            seen.add(w)
            stack.append(w)
    while stack:
        x = stack.pop()
        for _, y in g.inc[x]:
            if y not in (ui, uj) and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _flip_across_chord(g: Graph, emb: PlanarEmbedding, chord: int, ui: int, uj: int, arc: list[int]) -> PlanarEmbedding:
    inner = set(arc[1:-1])
    # components of G - {ui, uj} that touch the arc interior form G1; the rest is G2
    g1_side = _side_vertices(g, [(None, w) for w in inner], ui, uj) | inner
    g2_edges_at = {}
    for x in (ui, uj):
        g2_edges_at[x] = [e for e in emb.rot[x] if e != chord and g.other(e, x) not in g1_side
                          and g.other(e, x) not in (ui, uj)]
    target = set(arc)
    for x in (ui, uj):
        if not g2_edges_at[x]:
            raise GraphError("chord endpoints do not separate the graph")
    cands = []
    for x in (ui, uj):
        base = [e for e in emb.rot[x] if e not in g2_edges_at[x]]
        opts = []
        r = emb.rot[x]
        # keep the block in its current cyclic order, starting after the chord
        ci = r.index(chord)
        rolled = r[ci + 1:] + r[:ci]
        block = [e for e in rolled if e in g2_edges_at[x]]
        for blk in (block, block[::-1]):
            bi = base.index(chord)
            opts.append(base[:bi + 1] + blk + base[bi + 1:])
            opts.append(base[:bi] + blk + base[bi:])
        cands.append(opts)
    for ri in cands[0]:
        for rj in cands[1]:
            trial = PlanarEmbedding(g, dict(emb.rot))
            trial.rot[ui] = ri
            trial.rot[uj] = rj
            if not _genus0(trial):
                continue
            for f in trial.faces():
                vs = face_vertices(f)
                if len(vs) == len(arc) and set(vs) == target and chord in {e for _, e in f}:
                    trial.outer = f
                    return trial
    raise GraphError("could not re-embed across chord")  # pragma: no cover


def biconnected_split(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Biconnected blocks of connected ``g`` as (subgraph, cut vertices in block) pairs.

    Subgraphs keep the original vertex ids. Blocks are ordered by a DFS of the
    block-cut tree from the block containing the smallest vertex, so every
    block after the first shares exactly one cut vertex with an earlier block.
    """
    if g.n == 0:
        return []
    h = nx.MultiGraph()
    h.add_nodes_from(sorted(g.vertices))
    for e in sorted(g.edges):
        h.add_edge(*g.edges[e], key=e)
    if g.m == 0:
        return [(g.subgraph([v]), []) for v in g.vertices]
    comps = [sorted(c) for c in nx.biconnected_components(nx.Graph(h))]
    cut = set(nx.articulation_points(nx.Graph(h)))
    comps.sort()
    # order blocks by traversal of the block-cut tree
    owner: dict[int, list[int]] = {}
    for i, c in enumerate(comps):
        for v in c:
            owner.setdefault(v, []).append(i)
    order, seen = [], set()
    start = min(range(len(comps)), key=lambda i: comps[i])
    stack = [start]
    seen.add(start)
    while stack:
        i = stack.pop()
        order.append(i)
        nxt = []
        for v in comps[i]:
            for j in owner[v]:
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        stack.extend(sorted(nxt, reverse=True))
    out = []
    for i in order:
        c = comps[i]
        sub = g.subgraph(c)
        # an edge belongs to a block only if both ends are in it and it is in the nx block edge set
        out.append((sub, sorted(v for v in c if v in cut)))
    return out


def recompose_book_embeddings(parts):
    """Glue book embeddings of biconnected blocks into one for the whole graph.

    ``parts`` is a list of ``(block subgraph, BookEmbedding)`` in the order of
    ``biconnected_split``. Each block's spine is turned cyclically so that its
    cut vertex with the earlier blocks comes first, and the rest of it is
    inserted right after that vertex. Turning a spine is harmless because
    crossing on a page only depends on the cyclic order of the four ends.
    """
    from .verify import BookEmbedding

    if not parts:
        return BookEmbedding([], {})
    first = parts[0][1]
    order = list(first.order)
    pages = dict(first.pages)
    placed = set(order)
    for sub, be in parts[1:]:
        shared = [v for v in be.order if v in placed]
        if len(shared) != 1:
            raise GraphError(f"block shares {len(shared)} vertices with the earlier blocks")
        c = shared[0]
        i = be.order.index(c)
        turned = be.order[i:] + be.order[:i]
        j = order.index(c)
        order[j + 1:j + 1] = turned[1:]
        placed.update(turned)
        pages.update(be.pages)
    return BookEmbedding(order, pages)
