"""Frame-level plumbing for the two-page embedder.

A frame is a simple cycle C = v_1..v_k of a graph H = C plus its interior,
together with a rotation system of H. Frames are normalised: along the
spine v_1 is leftmost and v_k rightmost, the path edges (v_i, v_{i+1}) lie
on the bottom page and (v_1, v_k) on the top page, and the rotation is
oriented so that at every v_i the interior edges follow the edge to
v_{i-1} clockwise and precede the edge to v_{i+1}.

Everything here is about reading or checking drawings; the construction
itself lives in ``embedder``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .graph import Graph
from .verify import BOTTOM, TOP


class InvariantError(RuntimeError):
    """An invariant of the construction failed; the message names it."""


def other_page(p: str) -> str:
    return BOTTOM if p == TOP else TOP


@dataclass
class Instance:
    """H = C + interior, its rotation, and the frame cycle in spine order."""

    graph: Graph
    rot: dict[int, list[int]]
    cycle: list[int]
    cedges: list[int]  # cedges[i] joins cycle[i] and cycle[i+1]; the last one closes the cycle
    outer: bool = False
    # edges (u, u_r) of degree-2 cycle vertices that must end up top-drawn with u, u_r adjacent
    flip: set[int] = field(default_factory=set)

    @property
    def k(self) -> int:
        return len(self.cycle)

    def next_edge(self, i: int) -> int:
        return self.cedges[i]

    def prev_edge(self, i: int) -> int:
        return self.cedges[i - 1]  # i = 0 wraps to the closing edge

    def interior_edges(self, i: int) -> list[int]:
        """Non-cycle edges at cycle[i] in clockwise order from the edge to cycle[i-1]."""
        v = self.cycle[i]
        r = self.rot[v]
        p, nx = self.prev_edge(i), self.next_edge(i)
        if self.k == 2:
            cyc = set(self.cedges)
            j = r.index(p)
            out = []
            for s in range(1, len(r)):
                e = r[(j + s) % len(r)]
                if e in cyc:
                    break
                out.append(e)
            return out
        j = r.index(p)
        out = []
        for s in range(1, len(r)):
            e = r[(j + s) % len(r)]
            if e == nx:
                break
            out.append(e)
        return out

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def mirrored(self) -> "Instance":
        """The same frame read right to left (rotation reversed, pages unchanged)."""
        cyc = self.cycle[::-1]
        k = self.k
        # old cedges[i] joins cycle[i], cycle[i+1]; new index of that pair is k-2-i
        ce = [self.cedges[k - 2 - i] for i in range(k - 1)] + [self.cedges[k - 1]]
        rot = {v: r[::-1] for v, r in self.rot.items()}
        return Instance(self.graph, rot, cyc, ce, self.outer, set(self.flip))


def orientation_ok(inst: Instance) -> bool:
    """At every cycle vertex the clockwise successor of the next edge is the previous edge."""
    for i, v in enumerate(inst.cycle):
        r = inst.rot[v]
        nx = inst.next_edge(i)
        p = inst.prev_edge(i)
        if r[(r.index(nx) + 1) % len(r)] != p:
            return False
    return True


# ---------------------------------------------------------------- drawing reads

def cw_key(x: int, y: int, page: str, pos: dict[int, int]) -> tuple[int, int]:
    """Sort key of edge (x, y) in the clockwise order around x, starting from the west."""
    d = pos[y] - pos[x]
    if page == TOP:
        return (0, -d) if d < 0 else (1, -d)
    return (2, d) if d > 0 else (3, d)


def drawn_cw(g: Graph, v: int, edges, pos: dict[int, int], pages: dict[int, str]) -> list[list[int]]:
    """Clockwise order of the drawn ``edges`` at ``v`` as groups of indistinguishable edges."""
    keyed = sorted((cw_key(v, g.other(e, v), pages[e], pos), e) for e in edges)
    out: list[list[int]] = []
    last = None
    for key, e in keyed:
        if key == last:
            out[-1].append(e)
        else:
            out.append([e])
            last = key
    return out


def cyclic_match(rot_v: list[int], groups: list[list[int]]) -> bool:
    """Is the grouped drawn order a cyclic rotation of ``rot_v`` restricted to the same edges?"""
    chosen = {e for grp in groups for e in grp}
    ref = [e for e in rot_v if e in chosen]
    n = len(ref)
    if n <= 2:
        return True
    for s in range(n):
        seq = ref[s:] + ref[:s]
        i = 0
        for grp in groups:
            if set(seq[i:i + len(grp)]) != set(grp):
                break
            i += len(grp)
        else:
            return True
    return False


def rotation_violations(g: Graph, rot: dict[int, list[int]], order, pages, vertices=None) -> list[int]:
    """Vertices whose drawn rotation is not a cyclic subsequence of ``rot``."""
    pos = {v: i for i, v in enumerate(order)}
    bad = []
    for v in (vertices if vertices is not None else order):
        es = [e for e in rot.get(v, []) if e in pages and g.other(e, v) in pos]
        if len(es) <= 2:
            continue
        if not cyclic_match(rot[v], drawn_cw(g, v, es, pos, pages)):
            bad.append(v)
    return bad


def crossing_witnesses(g: Graph, order, pages, edges=None):
    """Pairs of same-page alternating edges among ``edges`` (default: all paged edges)."""
    pos = {v: i for i, v in enumerate(order)}
    eids = sorted(e for e in (pages if edges is None else edges) if e in g.edges)
    eu = [g.edges[e][0] for e in eids]
    ev = [g.edges[e][1] for e in eids]
    pg = [0 if pages[e] == TOP else 1 for e in eids]
    return [(eids[i], eids[j]) for i, j in kernels.crossing_pairs(pos, eu, ev, pg)]


# ---------------------------------------------------------------- blocks

def block_outer_walk(g: Graph, rot: dict[int, list[int]], block: set[int]) -> list[tuple[int, int]]:
    """Darts (vertex, edge) of the outer boundary walk of a bridge-block, clockwise around it.

    The outer face is the face of the block's own embedding that holds its
    external edges. A single vertex gives an empty walk.
    """
    inner = {v: [e for e in rot[v] if g.other(e, v) in block] for v in block}
    start = None
    for v in sorted(block):
        r = rot[v]
        if len(inner[v]) == len(r) or not inner[v]:
            continue
        # first block edge clockwise after an external edge
        j = next(i for i, e in enumerate(r) if g.other(e, v) not in block)
        for s in range(1, len(r) + 1):
            e = r[(j + s) % len(r)]
            if g.other(e, v) in block:
                start = (v, e)
                break
        break
    if start is None:
        return []
    walk = []
    d = start
    while True:
        walk.append(d)
        u, e = d
        w = g.other(e, u)
        r = inner[w]
        d = (w, r[(r.index(e) + 1) % len(r)])
        if d == start:
            return walk


def contracted_rotation(g: Graph, rot: dict[int, list[int]], block: set[int], walk=None) -> list[int]:
    """External edges of a block in clockwise order around the contracted block-vertex."""
    if walk is None:
        walk = block_outer_walk(g, rot, block)
    if not walk:
        (v,) = tuple(block) if len(block) == 1 else (min(block),)
        return [e for e in rot[v] if g.other(e, v) not in block]
    out = []
    prev_edge = walk[-1][1]
    for v, e in walk:
        r = rot[v]
        j = r.index(prev_edge)
        s = 1
        while True:
            f = r[(j + s) % len(r)]
            if f == e:
                break
            if g.other(f, v) not in block:
                out.append(f)
            s += 1
        prev_edge = e
    return out


def split_walk(walk: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Cut a closed boundary walk into simple cycles (as dart lists) at repeated vertices."""
    cycles = []
    stack: list[tuple[int, int]] = []
    where: dict[int, int] = {}
    for d in walk:
        v = d[0]
        if v in where:
            i = where[v]
            cyc = stack[i:]
            del stack[i:]
            for x, _ in cyc:
                where.pop(x, None)
            cycles.append(cyc)
        where[v] = len(stack)
        stack.append(d)
    if stack:
        cycles.append(stack)
    return cycles
