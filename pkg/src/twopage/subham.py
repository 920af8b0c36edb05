"""Subhamiltonian cycles of triconnected 4-planar graphs.

Separating triangles are peeled off one at a time: each side is solved with
the triangle shrunk to a dummy vertex, the cycles are rerouted through the
triangle and then merged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, GraphError
from .planar import NonPlanarError, PlanarEmbedding, connectivity_class, planar_embed
from .verify import SubhamCycle, face_crossings


class InvariantError(RuntimeError):
    """An internal invariant failed; the input escaped its contract or there is a bug."""


class DegenerateSideError(GraphError):
    """The requested side of a separating triangle is a single vertex."""


@dataclass(frozen=True)
class SeparatingTriangle:
    a: int
    b: int
    c: int
    # attachment vertex of a, b, c on each side (all equal in the degenerate case)
    a_in: int
    b_in: int
    c_in: int
    a_out: int
    b_out: int
    c_out: int
    inside: frozenset = field(default_factory=frozenset)
    outside: frozenset = field(default_factory=frozenset)

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def edges(self) -> list[tuple[int, int]]:
        a, b, c = self.vertices
        return [_pair(a, b), _pair(a, c), _pair(b, c)]

    def attachments(self, side: str) -> tuple[int, int, int]:
        if side == "in":
            return (self.a_in, self.b_in, self.c_in)
        if side == "out":
            return (self.a_out, self.b_out, self.c_out)
        raise ValueError(f"side must be 'in' or 'out', not {side!r}")

    def side_vertices(self, side: str) -> frozenset:
        return self.inside if side == "in" else self.outside


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# ------------------------------------------------------------- triangles

def _triangles(g: Graph):
    seen = set()
    for u in sorted(g.vertices):
        nu = g.neighbors(u)
        for v in nu:
            if v <= u:
                continue
            for w in g.neighbors(v):
                if w > v and w in nu:
                    t = (u, v, w)
                    if t not in seen:
                        seen.add(t)
                        yield t


def _facial_triangles(emb: PlanarEmbedding) -> set[tuple[int, int, int]]:
    out = set()
    for f in emb.faces():
        vs = [v for v, _ in f]
        if len(vs) == 3 and len(set(vs)) == 3:
            out.add(tuple(sorted(vs)))
    return out


def _split(g: Graph, tri) -> list[list[int]]:
    rest = [v for v in g.vertices if v not in tri]
    return g.subgraph(rest).components() if rest else []


def find_separating_triangles(g: Graph, emb: PlanarEmbedding | None = None, *, strict: bool = True,
                              triconnected: bool | None = None) -> list[SeparatingTriangle]:
    """All 3-cycles whose removal disconnects ``g``, annotated with their two sides.

    On triconnected inputs a triangle separates exactly when it is not a face,
    which keeps the scan linear. Elsewhere every triangle is tested directly.
    With ``strict`` the result must be pairwise vertex-disjoint and every
    triangle vertex must have one attachment per side.
    """
    if emb is None:
        emb = planar_embed(g)
    if triconnected is None:
        triconnected = g.n >= 4 and connectivity_class(g) == ">=3"
    tri3 = triconnected
    faces3 = _facial_triangles(emb) if tri3 else set()
    outer = [v for v, _ in emb.outer] if emb.outer else []
    found = []
    for t in _triangles(g):
        if tri3 and t in faces3:
            continue
        comps = _split(g, t)
        if sum(len(c) for c in comps) < 2 or len(comps) < 2:
            continue
        found.append((t, comps))
    result = []
    used: dict[int, tuple] = {}
    for t, comps in found:
        if strict:
            for v in t:
                if v in used:
                    raise InvariantError(f"separating triangles {used[v]} and {t} share vertex {v}")
                used[v] = t
        result.append(_annotate(g, t, comps, outer, strict))
    return result


def _annotate(g: Graph, t, comps, outer, strict) -> SeparatingTriangle:
    ts = set(t)
    out_comp = None
    for v in outer:
        if v not in ts:
            out_comp = next(i for i, c in enumerate(comps) if v in c)
            break
    if out_comp is None:
        # no outer vertex off the triangle: call the larger side the outside
        out_comp = max(range(len(comps)), key=lambda i: (len(comps[i]), -comps[i][0]))
    outside = frozenset(comps[out_comp])
    inside = frozenset(v for i, c in enumerate(comps) if i != out_comp for v in c)
    att = {}
    for v in t:
        ins = [w for w in g.neighbors(v) if w in inside]
        outs = [w for w in g.neighbors(v) if w in outside]
        if strict and (len(ins) != 1 or len(outs) != 1 or g.degree(v) != 4):
            raise InvariantError(f"triangle vertex {v} of {t} does not have one attachment per side")
        att[v] = (ins[0] if ins else -1, outs[0] if outs else -1)
    a, b, c = t
    tri = SeparatingTriangle(a, b, c, att[a][0], att[b][0], att[c][0], att[a][1], att[b][1], att[c][1], inside, outside)
    if strict:
        for side in ("in", "out"):
            xs = tri.attachments(side)
            if len(set(xs)) == 2:
                raise InvariantError(f"attachments {xs} of {t} are neither distinct nor identical")
    return tri


# ------------------------------------------------------------- hamiltonian backend

HamiltonianBackend = Callable[[Graph], list[int]]


def hamiltonian_cycle_backend(g: Graph) -> list[int]:
    """Hamiltonian cycle by pruned backtracking.

    Candidates are tried fewest-free-neighbours first. A branch is cut when an
    unvisited vertex can no longer get two cycle neighbours, or when the
    unvisited vertices stop being reachable from the path end. Exponential in
    the worst case, quick on 4-connected triangulations of desk size.
    """
    vs = sorted(g.vertices)
    n = len(vs)
    if n <= 2:
        if n == 2 and g.multiplicity(vs[0], vs[1]) < 2:
            raise InvariantError("no hamiltonian cycle on a simple edge")
        return vs
    nbrs = {v: g.neighbors(v) for v in vs}
    adj = {v: set(nbrs[v]) for v in vs}
    start = min(vs, key=lambda v: (len(nbrs[v]), v))
    free = {v: len(nbrs[v]) for v in vs}  # unvisited neighbours
    used: set[int] = set()
    path: list[int] = []

    def push(w):
        used.add(w)
        path.append(w)
        for y in nbrs[w]:
            free[y] -= 1

    def pop():
        w = path.pop()
        used.discard(w)
        for y in nbrs[w]:
            free[y] += 1

    def viable() -> bool:
        end = path[-1]
        left = n - len(path)
        if left == 0:
            return start in adj[end]
        if not any(w not in used for w in nbrs[start]):
            return False
        check = set(nbrs[end])
        if len(path) >= 2:
            check.update(nbrs[path[-2]])
        for y in check:
            if y in used:
                continue
            need = free[y] + (end in adj[y]) + (start in adj[y] and start != end)
            if need < 2:
                return False
        # unvisited vertices must hang together with the path end
        seen = {end}
        todo = [end]
        count = 0
        while todo:
            x = todo.pop()
            for y in nbrs[x]:
                if y not in used and y not in seen:
                    seen.add(y)
                    count += 1
                    todo.append(y)
        return count == left

    push(start)
    stack = [iter(sorted(nbrs[start], key=lambda w: (free[w], w)))]
    while stack:
        if len(path) == n:
            return list(path)
        for w in stack[-1]:
            if w in used:
                continue
            push(w)
            if viable():
                stack.append(iter(sorted((y for y in nbrs[w] if y not in used), key=lambda y: (free[y], y))))
                break
            pop()
        else:
            stack.pop()
            if len(path) > 1:
                pop()
    raise InvariantError("hamiltonian backend found no cycle; the graph is not 4-connected maximal planar")


# ------------------------------------------------------------- lemma-1 cycles

def stellate(g: Graph, emb: PlanarEmbedding) -> tuple[Graph, set[int]]:
    """Insert a vertex into every non-triangular face, adjacent to all its vertices."""
    h = g.copy()
    extra = set()
    for f in emb.faces():
        vs = [v for v, _ in f]
        if len(vs) > 3:
            x = h.add_vertex()
            extra.add(x)
            for v in dict.fromkeys(vs):
                h.add_edge(x, v)
    return h, extra


def subham_no_triangles(g: Graph, emb: PlanarEmbedding | None = None,
                        backend: HamiltonianBackend = hamiltonian_cycle_backend) -> SubhamCycle:
    """Subhamiltonian cycle crossing every face at most once (no separating triangles).

    The stellated graph is a triangulation without separating triangles, so
    it has a hamiltonian cycle; dropping the inserted vertices leaves the
    answer. Inserted vertices are pairwise non-adjacent, so no two of them
    are consecutive on the cycle.
    """
    if emb is None:
        emb = planar_embed(g)
    if g.n <= 3:
        h = SubhamCycle(sorted(g.vertices))
        h.aug = [p for p in h.pairs() if not g.has_edge(*p)]
        return h
    big, extra = stellate(g, emb)
    cyc = backend(big)
    if sorted(cyc) != sorted(big.vertices):
        raise InvariantError("backend returned a cycle that does not span the stellated graph")
    k = len(cyc)
    for i in range(k):
        if not big.has_edge(cyc[i], cyc[(i + 1) % k]):
            raise InvariantError(f"backend cycle uses a non-edge {cyc[i]}-{cyc[(i + 1) % k]}")
    real = [v for v in cyc if v not in extra]
    h = SubhamCycle(real)
    h.aug = [_pair(u, v) for u, v in h.pairs() if not g.has_edge(u, v)]
    hosts = chord_hosts(emb, h.aug)
    if hosts is None:
        raise InvariantError("lemma-1 cycle does not fit into the faces")
    h.hosts = hosts
    return h


def chord_hosts(emb: PlanarEmbedding, pairs) -> dict[tuple[int, int], int] | None:
    """Assign each non-edge pair to a face so that pairs in one face do not interleave.

    Valid for embeddings whose faces are simple cycles sharing at most an
    edge or a vertex (triconnected graphs); returns None when impossible.
    """
    fs = emb.faces()
    where: dict[int, list[int]] = {}
    pos: list[dict[int, int]] = []
    for i, f in enumerate(fs):
        p = {}
        for j, (v, _) in enumerate(f):
            p.setdefault(v, j)
            where.setdefault(v, []).append(i)
        pos.append(p)
    per_face: dict[int, list[tuple[int, int]]] = {}
    hosts = {}
    for u, v in pairs:
        common = sorted(set(where.get(u, ())) & set(where.get(v, ())))
        if len(common) != 1:
            return None
        i = common[0]
        a, b = sorted((pos[i][u], pos[i][v]))
        per_face.setdefault(i, []).append((a, b))
        hosts[_pair(u, v)] = i
    for chords in per_face.values():
        if _interleaving(chords):
            return None
    return hosts


def _interleaving(chords) -> bool:
    """True if two chords (a, b) with a < b cross inside a disk."""
    ends = sorted(chords, key=lambda ab: (ab[0], -ab[1]))
    stack: list[int] = []
    for a, b in ends:
        while stack and stack[-1] <= a:
            stack.pop()
        if stack and b > stack[-1]:
            return True
        stack.append(b)
    return False


# ------------------------------------------------------------- triangle surgery

def replace_triangle(g: Graph, t: SeparatingTriangle, side: str) -> tuple[Graph, int]:
    """Keep the triangle's ``side`` and shrink the triangle to one dummy vertex.

    The dummy is adjacent to the three attachments on that side and gets a
    fresh id; all other ids are kept.
    """
    keep = t.side_vertices(side)
    att = t.attachments(side)
    if len(keep) <= 1 or len(set(att)) == 1:
        raise DegenerateSideError(f"the {side} side of triangle {t.vertices} is a single vertex")
    h = g.subgraph(keep)
    d = h.add_vertex()
    for x in att:
        h.add_edge(d, x)
    return h, d


def side_graph(g: Graph, t: SeparatingTriangle, side: str) -> Graph:
    """The triangle together with one of its sides."""
    return g.subgraph(set(t.side_vertices(side)) | set(t.vertices))


@dataclass
class RerouteResult:
    cycle: SubhamCycle
    achieved: tuple[tuple[int, int], tuple[int, int]]
    case: str
    requested: tuple[tuple[int, int], tuple[int, int]] | None = None
    substituted: bool = False

    @property
    def report(self) -> str:
        if not self.substituted:
            return f"case {self.case}: pair {self.achieved}"
        return f"case {self.case}: requested {self.requested} unachievable, used {self.achieved}"


def _middle(pair, tri) -> int:
    (a, b), (c, d) = pair
    common = {a, b} & {c, d}
    if len(common) != 1 or not {a, b, c, d} <= set(tri):
        raise ValueError(f"{pair} is not a pair of distinct edges of triangle {tri}")
    return common.pop()


def _pair_of(mid: int, tri) -> tuple[tuple[int, int], tuple[int, int]]:
    x, z = [v for v in tri if v != mid]
    return tuple(sorted((_pair(x, mid), _pair(mid, z))))


def classify_reroute(emb: PlanarEmbedding, h: SubhamCycle, dummy: int) -> str:
    """Case label at the dummy: '1', '2i', '2ii', '3i' or '3ii'."""
    g = emb.graph
    cyc = h.cycle
    i = cyc.index(dummy)
    p, s = cyc[i - 1], cyc[(i + 1) % len(cyc)]
    ep, es = g.has_edge(p, dummy), g.has_edge(dummy, s)
    if ep and es:
        return "1"
    faces = [set(v for v, _ in f) for f in emb.faces() if any(v == dummy for v, _ in f)]
    if ep or es:
        near, far = (p, s) if ep else (s, p)
        f = [fs for fs in faces if far in fs]
        return "2i" if any(near in fs for fs in f) else "2ii"
    fp = [k for k, fs in enumerate(faces) if p in fs]
    fs_ = [k for k, fs in enumerate(faces) if s in fs]
    return "3ii" if set(fp) & set(fs_) else "3i"


def reroute_through_triangle(g_side: Graph, h: SubhamCycle, t: SeparatingTriangle, dummy: int,
                             requested=None, dummy_emb: PlanarEmbedding | None = None,
                             side_emb: PlanarEmbedding | None = None) -> RerouteResult:
    """Replace ``dummy`` on ``h`` by the triangle so that exactly two triangle edges are used.

    ``g_side`` is the triangle plus the side the dummy stood for (the dummy is
    absent). Among the two vertex orders realising a pair, the one with fewer
    new face crossings that still fits planarly into the faces is taken. If
    the requested pair cannot be realised the best other pair is returned
    and flagged as a substitution.
    """
    tri = t.vertices
    if dummy not in h.cycle:
        raise ValueError(f"dummy {dummy} is not on the cycle")
    case = "?"
    if dummy_emb is not None:
        case = classify_reroute(dummy_emb, h, dummy)
    emb = side_emb if side_emb is not None else planar_embed(g_side)
    cyc = h.cycle
    i = cyc.index(dummy)
    rest = cyc[i + 1:] + cyc[:i]  # cycle minus dummy, starting after it
    want = None if requested is None else _middle(requested, tri)
    mids = [want] if want is not None else []
    mids += [m for m in _default_mid_order(g_side, rest, tri) if m not in mids]
    for m in mids:
        best = None
        x, z = [v for v in tri if v != m]
        for seq in ((x, m, z), (z, m, x)):
            new = SubhamCycle(list(seq) + rest)
            new.aug = [_pair(u, v) for u, v in new.pairs() if not g_side.has_edge(u, v)]
            hosts = chord_hosts(emb, new.aug)
            if hosts is None:
                continue
            new.hosts = hosts
            score = len(new.aug)
            if best is None or score < best[0]:
                best = (score, new)
        if best is not None:
            req = None if requested is None else _pair_of(want, tri)
            return RerouteResult(best[1], _pair_of(m, tri), case, req, want is not None and m != want)
    raise InvariantError(f"no rerouting through triangle {tri} fits planarly")


def _default_mid_order(g_side, rest, tri):
    # prefer the order needing no augmentation edge at the two seams
    p, s = rest[-1], rest[0]
    scored = []
    for m in tri:
        x, z = [v for v in tri if v != m]
        cost = min((not g_side.has_edge(p, a)) + (not g_side.has_edge(b, s)) for a, b in ((x, z), (z, x)))
        scored.append((cost, m))
    return [m for _, m in sorted(scored)]


def cycle_edges(h: SubhamCycle) -> set[tuple[int, int]]:
    return {_pair(u, v) for u, v in h.pairs()}


def merge_cycles(h_in: SubhamCycle, h_out: SubhamCycle, t: SeparatingTriangle) -> SubhamCycle:
    """Join two side cycles that share exactly one triangle edge.

    Each cycle must contain exactly two triangle edges, one of them common to
    both. Dropping the triangle edges leaves two paths meeting at the
    triangle vertex outside the common edge; the common edge closes them up.
    """
    tri_edges = set(t.edges)
    ein = cycle_edges(h_in) & tri_edges
    eout = cycle_edges(h_out) & tri_edges
    common = ein & eout
    if len(ein) != 2 or len(eout) != 2 or len(common) != 1 or (ein | eout) != tri_edges:
        raise GraphError(
            f"merge hypothesis violated: inner cycle uses {sorted(ein)}, outer cycle uses {sorted(eout)}, "
            f"common {sorted(common)}; need two each with exactly one in common")
    (e,) = common
    (e_out,) = eout - common
    (e_in,) = ein - common
    m_out = (set(e) & set(e_out)).pop()
    m_in = (set(e) & set(e_in)).pop()
    r = (set(e_in) & set(e_out)).pop()
    p_out = _path_without(h_out.cycle, m_out, m_in, r)  # m_in ... r
    p_in = _path_without(h_in.cycle, m_in, r, m_out)    # r ... m_out
    cyc = p_out + p_in[1:]
    merged = SubhamCycle(cyc)
    keep = cycle_edges(merged)
    merged.aug = sorted({a for a in h_in.aug + h_out.aug if _pair(*a) in keep})
    return merged


def _path_without(cyc, drop, first, last):
    """The cycle with ``drop`` removed, read as a path from ``first`` to ``last``."""
    k = len(cyc)
    i = cyc.index(drop)
    path = [cyc[(i + j) % k] for j in range(1, k)]
    if path[0] == last and path[-1] == first:
        path.reverse()
    if path[0] != first or path[-1] != last:
        raise InvariantError(f"cycle does not pass {first}-{drop}-{last}")
    return path


# ------------------------------------------------------------- theorem driver

def _k4_cycle(t: SeparatingTriangle, x: int, mid: int) -> SubhamCycle:
    a, c = [v for v in t.vertices if v != mid]
    return SubhamCycle([a, mid, c, x])


def check_triconnected_4planar(g: Graph) -> PlanarEmbedding:
    if g.max_degree() > 4:
        raise GraphError("maximum degree exceeds four")
    if any(g.multiplicity(u, v) > 1 for u, v in g.edges.values()):
        raise GraphError("parallel edges are not allowed here")
    try:
        emb = planar_embed(g)
    except NonPlanarError:
        raise
    if g.n < 4 or connectivity_class(g) != ">=3":
        raise GraphError("graph is not triconnected")
    return emb


def subham_triconnected(g: Graph, backend: HamiltonianBackend = hamiltonian_cycle_backend, *,
                        trace: list | None = None) -> SubhamCycle:
    """Subhamiltonian cycle of a triconnected 4-planar graph.

    Takes an innermost separating triangle, solves the outside (with the
    triangle shrunk) recursively and the triangle-free inside directly, then
    reroutes both through the triangle and merges. ``trace`` collects one
    entry per triangle with the case labels seen.
    """
    check_triconnected_4planar(g)
    h = _solve(g, backend, trace)
    h.aug = sorted({_pair(u, v) for u, v in h.pairs() if not g.has_edge(u, v)})
    h.hosts = chord_hosts(planar_embed(g), h.aug) or {}
    return h


def _solve(g: Graph, backend, trace) -> SubhamCycle:
    emb = planar_embed(g)
    tris = find_separating_triangles(g, emb, triconnected=True)
    if not tris:
        return subham_no_triangles(g, emb, backend)
    order = _innermost_first(tris)
    # peel triangles innermost first; each outside (triangle shrunk) is the graph for the next
    stack = []
    cur, cur_emb = g, emb
    dummy_of: dict[tuple, int] = {}
    children = _children(order)
    for t0 in order:
        inside = {v for v in t0.inside if cur.has_vertex(v)} | {dummy_of[c.vertices] for c in children[t0.vertices]}
        outside = set(cur.vertices) - inside - set(t0.vertices)
        t = _reannotate(cur, t0, inside, outside)
        if len(outside) == 1:
            stack.append((cur, cur_emb, t, None, None))
            break
        gd, d = replace_triangle(cur, t, "out")
        dummy_of[t.vertices] = d
        stack.append((cur, cur_emb, t, d, gd))
        cur, cur_emb = gd, _shrunk_embedding(cur_emb, gd, t, d)
    h = None
    if stack[-1][3] is not None:
        h = subham_no_triangles(cur, cur_emb, backend)
    while stack:
        gt, emb_t, t, d, gd = stack.pop()
        if d is None:
            # single outside vertex: the outer cycle is the K4 cycle around it
            x = next(iter(t.outside))
            h_out = _k4_cycle(t, x, t.vertices[2])
            achieved = _pair_of(t.vertices[2], t.vertices)
            case_out = "k4"
        else:
            side = side_graph(gt, t, "out")
            rr = reroute_through_triangle(side, h, t, d, None, cur_emb, emb_t.restricted(side))
            h_out, achieved, case_out = rr.cycle, rr.achieved, rr.case
        e1, e2 = achieved
        third = next(e for e in t.edges if e not in achieved)
        want = tuple(sorted((e1, third)))
        if len(t.inside) == 1:
            x = next(iter(t.inside))
            h_in = _k4_cycle(t, x, _middle(want, t.vertices))
            case_in = "k4"
        else:
            gin, din = replace_triangle(gt, t, "in")
            ein = planar_embed(gin)
            hin0 = subham_no_triangles(gin, ein, backend)
            if max(face_crossings(ein, hin0).values(), default=0) > 1:
                raise InvariantError("inner cycle crosses a face twice")
            side = side_graph(gt, t, "in")
            rr = reroute_through_triangle(side, hin0, t, din, want, ein, emb_t.restricted(side))
            if rr.substituted:
                raise InvariantError(f"free choice failed on a once-crossing cycle: {rr.report}")
            h_in, case_in = rr.cycle, rr.case
        h = merge_cycles(h_in, h_out, t)
        cur_emb = emb_t
        if trace is not None:
            trace.append({"triangle": t.vertices, "out": case_out, "in": case_in})
    return h


def _shrunk_embedding(emb: PlanarEmbedding, gd: Graph, t: SeparatingTriangle, d: int) -> PlanarEmbedding:
    """Embedding of ``gd`` (outside plus dummy) inherited from the embedding before shrinking."""
    new_edge = {}
    for e, x in gd.inc[d]:
        new_edge[x] = e
    rot = {}
    for x in gd.vertices:
        if x == d:
            continue
        r = []
        for e in emb.rot[x]:
            if e in gd.edges:
                r.append(e)
            elif emb.graph.other(e, x) in t.vertices:
                r.append(new_edge[x])
        rot[x] = r
    e3 = [new_edge[x] for x in t.attachments("out")]
    for order in (e3, e3[::-1]):
        rot[d] = list(order)
        trial = PlanarEmbedding(gd, rot)
        fs = trial.faces()
        if gd.n - gd.m + len(fs) == 2:
            trial.outer = max(fs, key=lambda f: (len(f), [-x for x, _ in f]))
            return trial
    raise InvariantError(f"shrinking triangle {t.vertices} broke planarity")  # pragma: no cover


def _reannotate(g: Graph, t: SeparatingTriangle, inside: set, outside: set) -> SeparatingTriangle:
    att = {}
    for v in t.vertices:
        ins = [w for w in g.neighbors(v) if w in inside]
        outs = [w for w in g.neighbors(v) if w in outside]
        if len(ins) != 1 or len(outs) != 1:
            raise InvariantError(f"triangle vertex {v} lost its single attachment per side")
        att[v] = (ins[0], outs[0])
    a, b, c = t.vertices
    return SeparatingTriangle(a, b, c, att[a][0], att[b][0], att[c][0], att[a][1], att[b][1], att[c][1],
                              frozenset(inside), frozenset(outside))


def _innermost_first(tris: list[SeparatingTriangle]) -> list[SeparatingTriangle]:
    """Triangles ordered so that every triangle comes after all triangles nested inside it."""
    return sorted(tris, key=lambda t: (len(t.inside), t.vertices))


def _children(order: list[SeparatingTriangle]) -> dict[tuple, list[SeparatingTriangle]]:
    kids: dict[tuple, list[SeparatingTriangle]] = {t.vertices: [] for t in order}
    for i, t in enumerate(order):
        # parent: the smallest strictly larger triangle containing t
        for p in order[i + 1:]:
            if set(t.vertices) <= p.inside:
                kids[p.vertices].append(t)
                break
    return kids
