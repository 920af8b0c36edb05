"""Independent checkers and brute-force oracles.

Nothing in here calls into the embedders; spine checks go through the
alternation kernels, planarity of augmented graphs is decided both by
networkx and by conflict-graph bipartiteness along the cycle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from . import kernels
from .graph import Graph, GraphError

TOP = "top"
BOTTOM = "bottom"


@dataclass
class BookEmbedding:
    """Spine order plus a page (``"top"``/``"bottom"``) for every edge id."""

    order: list[int]
    pages: dict[int, str]

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


@dataclass
class SubhamCycle:
    """Cyclic vertex order; ``aug`` lists consecutive pairs that are not graph edges."""

    cycle: list[int]
    aug: list[tuple[int, int]] = field(default_factory=list)
    # augmentation pair -> index of the face (in some embedding's faces()) hosting it
    hosts: dict[tuple[int, int], int] = field(default_factory=dict)

    def pairs(self) -> list[tuple[int, int]]:
        c = self.cycle
        if len(c) < 2:
            return []
        if len(c) == 2:
            return [(c[0], c[1])]
        return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def subham_from_cycle(g: Graph, cycle) -> SubhamCycle:
    cycle = list(cycle)
    h = SubhamCycle(cycle)
    h.aug = [(u, v) for u, v in h.pairs() if not g.has_edge(u, v)]
    return h


@dataclass
class Violation:
    kind: str
    witness: tuple


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, *witness) -> None:
        self.violations.append(Violation(kind, tuple(witness)))

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.kind} {v.witness}" for v in self.violations[:10])


def verify_book_embedding(g: Graph, be: BookEmbedding) -> VerificationReport:
    """Spine is a permutation of V, every edge has a page, no same-page pair alternates."""
    rep = VerificationReport()
    if sorted(be.order) != sorted(g.vertices) or len(set(be.order)) != len(be.order):
        rep.add("spine-not-permutation", tuple(be.order))
        return rep
    eids = sorted(g.edges)
    for e in eids:
        if be.pages.get(e) not in (TOP, BOTTOM):
            rep.add("edge-without-page", e, g.edges[e])
    for e in be.pages:
        if e not in g.edges:
            rep.add("page-for-unknown-edge", e)
    if not rep.ok:
        return rep
    pos = be.positions()
    eu = [g.edges[e][0] for e in eids]
    ev = [g.edges[e][1] for e in eids]
    pg = [0 if be.pages[e] == TOP else 1 for e in eids]
    for i, j in kernels.crossing_pairs(pos, eu, ev, pg):
        rep.add("same-page-alternation", (eids[i], g.edges[eids[i]]), (eids[j], g.edges[eids[j]]), be.pages[eids[i]])
    return rep


def verify_subhamiltonian(g: Graph, h: SubhamCycle) -> VerificationReport:
    """``h`` visits every vertex once and G plus the augmentation edges stays planar."""
    rep = VerificationReport()
    if sorted(h.cycle) != sorted(g.vertices) or len(set(h.cycle)) != len(h.cycle):
        rep.add("cycle-not-spanning", tuple(h.cycle))
        return rep
    for u, v in h.pairs():
        if not g.has_edge(u, v) and (u, v) not in h.aug and (v, u) not in h.aug:
            rep.add("missing-augmentation", (u, v))
    aug = nx.Graph()
    aug.add_nodes_from(g.vertices)
    aug.add_edges_from(p for p in g.edges.values())
    aug.add_edges_from(h.pairs())
    if not nx.check_planarity(aug)[0]:
        rep.add("augmented-graph-nonplanar")
    # independent route: a spanning cycle plus chords is planar iff chords 2-colour
    pos = {v: i for i, v in enumerate(h.cycle)}
    eids = sorted(g.edges)
    if kernels.two_colour_conflicts(pos, [g.edges[e][0] for e in eids], [g.edges[e][1] for e in eids]) is None:
        rep.add("chords-not-two-colourable")
    return rep


def face_crossings(emb, h: SubhamCycle) -> dict[int, int]:
    """Crossing count per face index of ``emb.faces()``.

    A face is crossed when two consecutive cycle vertices both lie on it but
    are not adjacent in the graph.
    """
    g = emb.graph
    fs = emb.faces()
    on_face: dict[int, set[int]] = {}
    for i, f in enumerate(fs):
        for v, _ in f:
            on_face.setdefault(v, set()).add(i)
    count = {i: 0 for i in range(len(fs))}
    for u, v in h.pairs():
        if g.has_edge(u, v):
            continue
        for i in on_face.get(u, set()) & on_face.get(v, set()):
            count[i] += 1
    return count


# ---------------------------------------------------------------- oracles

def circular_orders(vertices):
    """Circular orders with the first vertex pinned, reflections removed."""
    vs = sorted(vertices)
    if len(vs) <= 2:
        yield list(vs)
        return
    first, rest = vs[0], vs[1:]
    for p in itertools.permutations(rest):
        if p[0] < p[-1]:
            yield [first, *p]


def oracle_two_page(g: Graph, n_cap: int = 9) -> BookEmbedding | None:
    """Exhaustive two-page embedding search; lexicographically first witness or None."""
    if g.n > n_cap:
        raise GraphError(f"oracle limited to {n_cap} vertices, got {g.n}")
    eids = sorted(g.edges)
    eu = [g.edges[e][0] for e in eids]
    ev = [g.edges[e][1] for e in eids]
    for order in circular_orders(g.vertices):
        pos = {v: i for i, v in enumerate(order)}
        col = kernels.two_colour_conflicts(pos, eu, ev)
        if col is not None:
            return BookEmbedding(order, {e: (TOP if c == 0 else BOTTOM) for e, c in zip(eids, col)})
    return None


def brute_force_pages(g: Graph, order) -> dict[int, str] | None:
    """Try all 2^m page assignments for a fixed order (tiny m only)."""
    eids = sorted(g.edges)
    pos = {v: i for i, v in enumerate(order)}
    ends = []
    for e in eids:
        a, b = sorted((pos[g.edges[e][0]], pos[g.edges[e][1]]))
        ends.append((a, b))
    conflicts = [(i, j) for i, j in itertools.combinations(range(len(eids)), 2)
                 if ends[i][0] < ends[j][0] < ends[i][1] < ends[j][1]
                 or ends[j][0] < ends[i][0] < ends[j][1] < ends[i][1]]
    for bits in itertools.product((0, 1), repeat=len(eids)):
        if all(bits[i] != bits[j] for i, j in conflicts):
            return {e: (TOP if b == 0 else BOTTOM) for e, b in zip(eids, bits)}
    return None


def oracle_separating_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cycles whose removal disconnects the rest of the graph."""
    out = []
    vs = sorted(g.vertices)
    for a, b, c in itertools.combinations(vs, 3):
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            continue
        rest = [v for v in vs if v not in (a, b, c)]
        if len(rest) >= 2 and not g.subgraph(rest).is_connected():
            out.append((a, b, c))
    return out


def oracle_hamiltonian(g: Graph) -> list[int] | None:
    """First hamiltonian cycle found by plain backtracking from the smallest vertex."""
    vs = sorted(g.vertices)
    n = len(vs)
    if n == 0:
        return None
    if n == 1:
        return [vs[0]]
    if n == 2:
        return list(vs) if g.multiplicity(vs[0], vs[1]) >= 2 else None
    nbrs = {v: g.neighbors(v) for v in vs}
    start = vs[0]
    path = [start]
    used = {start}

    def extend() -> bool:
        if len(path) == n:
            return start in nbrs[path[-1]]
        for w in nbrs[path[-1]]:
            if w not in used:
                used.add(w)
                path.append(w)
                if extend():
                    return True
                path.pop()
                used.discard(w)
        return False

    return list(path) if extend() else None
