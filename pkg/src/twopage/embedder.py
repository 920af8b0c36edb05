"""Two-page book embeddings of planar graphs with maximum degree four.

The construction works on frames (see ``frame``): a simple cycle drawn with
its vertices in spine order, path edges on the bottom page and the edge
between its extremes on the top page. The interior of a frame is handled
in one sweep: chords go to the top page, the bridge-blocks of the interior
are contracted to block-vertices, anchors (block-vertices touching the
cycle) are pinned next to the cycle vertex of their marked edge,
ancillaries (the rest) are slotted between the anchors of their tree, and
finally every block-vertex is replaced by its outer boundary, which becomes
a frame of its own. Children frames are built in their own coordinates
(pages swapped, rotation reversed) and spliced back.
"""

from __future__ import annotations

import heapq
import sys
from dataclasses import dataclass, field

from .frame import (Instance, InvariantError, block_outer_walk, contracted_rotation, crossing_witnesses,
                    cyclic_match, drawn_cw, orientation_ok, other_page, rotation_violations, split_walk)
from .graph import Graph, GraphError, bridge_block_forest
from .planar import PlanarEmbedding, biconnected_split, chordless_outerface, planar_embed, recompose_book_embeddings
from .verify import BOTTOM, TOP, BookEmbedding


@dataclass
class Drawing:
    """Spine order and pages of a frame's graph, in the frame's own coordinates."""

    order: list[int]
    pages: dict[int, str]
    flipped: set[int] = field(default_factory=set)

    def mirrored(self) -> "Drawing":
        return Drawing(self.order[::-1], dict(self.pages), set(self.flipped))

    def swapped(self) -> "Drawing":
        return Drawing(list(self.order), {e: other_page(p) for e, p in self.pages.items()}, set(self.flipped))


@dataclass
class Context:
    audit: bool = False
    cases: dict[str, int] = field(default_factory=dict)
    frames: int = 0

    def count(self, name: str) -> None:
        self.cases[name] = self.cases.get(name, 0) + 1


# ---------------------------------------------------------------- block forest state

@dataclass
class Tree:
    ancillaries: list[int]
    anchors: list[int] = field(default_factory=list)  # left to right
    label: dict[int, int] = field(default_factory=dict)
    parent: dict[int, int] = field(default_factory=dict)  # block -> parent block (root absent)
    parent_edge: dict[int, int] = field(default_factory=dict)
    children: dict[int, list[int]] = field(default_factory=dict)


@dataclass
class BlockForestState:
    """Interior of one frame at the block-vertex level.

    Tokens are cycle vertices (ids >= 0) and block-vertices (``~b``).
    """

    inst: Instance
    blocks: list[set[int]]
    block_of: dict[int, int]
    ext: list[list[int]]  # external edges per block
    crot: list[list[int]]  # contracted clockwise rotation per block
    walks: list[list[tuple[int, int]]]
    anchors: list[int] = field(default_factory=list)
    ancillaries: list[int] = field(default_factory=list)
    marked: dict[int, int] = field(default_factory=dict)  # anchor -> marked edge
    tokens: list[int] = field(default_factory=list)
    pages: dict[int, str] = field(default_factory=dict)
    trees: list[Tree] = field(default_factory=list)
    tree_of: dict[int, int] = field(default_factory=dict)
    drawn_trees: set[int] = field(default_factory=set)
    cycle_index: dict[int, int] = field(default_factory=dict)

    def token(self, x: int) -> int:
        """Token of a vertex of H."""
        return x if x in self.cycle_index else ~self.block_of[x]

    def ends(self, e: int) -> tuple[int, int]:
        u, v = self.inst.graph.edges[e]
        return self.token(u), self.token(v)

    def positions(self) -> dict[int, int]:
        return {t: i for i, t in enumerate(self.tokens)}


def _interior_state(inst: Instance) -> BlockForestState | None:
    g = inst.graph
    cyc = set(inst.cycle)
    inner = [v for v in g.vertices if v not in cyc]
    if not inner:
        return None
    sub = g.subgraph(inner)
    forest = bridge_block_forest(sub)
    blocks = [set(b) for b in forest.blocks]
    block_of = {v: b for b, members in enumerate(blocks) for v in members}
    ext, crot, walks = [], [], []
    for members in blocks:
        walk = block_outer_walk(g, inst.rot, members)
        walks.append(walk)
        crot.append(contracted_rotation(g, inst.rot, members, walk))
        ext.append(sorted(e for v in members for e, w in g.inc[v] if w not in members))
    st = BlockForestState(inst, blocks, block_of, ext, crot, walks)
    st.cycle_index = {v: i for i, v in enumerate(inst.cycle)}
    for b in range(len(blocks)):
        touches = any(g.other(e, v) in cyc for e in ext[b] for v in [_end_in(g, e, blocks[b])])
        (st.anchors if touches else st.ancillaries).append(b)
    return st


def _end_in(g: Graph, e: int, members: set[int]) -> int:
    u, v = g.edges[e]
    return u if u in members else v


# ---------------------------------------------------------------- marks and anchors

def select_marked_edges(st: BlockForestState) -> dict[int, int]:
    """One bottom-drawn edge per anchor, towards its leftmost cycle neighbour.

    A simple edge to the leftmost neighbour is marked; if that neighbour is
    joined to the anchor twice, the right edge of the neighbour is marked.
    """
    inst, g = st.inst, st.inst.graph
    for b in st.anchors:
        to_c = []
        for e in st.ext[b]:
            w = g.other(e, _end_in(g, e, st.blocks[b]))
            if w in st.cycle_index:
                to_c.append((st.cycle_index[w], e))
        i = min(i for i, _ in to_c)
        cands = [e for j, e in to_c if j == i]
        if len(cands) == 1:
            st.marked[b] = cands[0]
        else:
            right = inst.interior_edges(i)[-1]
            if right not in cands:
                raise InvariantError(f"double edge to anchor {b} does not contain the right edge of {inst.cycle[i]}")
            st.marked[b] = right
    per_vertex: dict[int, int] = {}
    for b, e in st.marked.items():
        v = g.other(e, _end_in(g, e, st.blocks[b]))
        per_vertex[v] = per_vertex.get(v, 0) + 1
        if per_vertex[v] > 2:
            raise InvariantError(f"cycle vertex {v} carries more than two marked edges")
    return st.marked


def place_anchors(st: BlockForestState, ctx: Context | None = None) -> list[int]:
    """Spine tokens for the cycle plus anchors, following the two placement cases."""
    inst, g = st.inst, st.inst.graph
    k = inst.k
    at: dict[int, list[tuple[int, int]]] = {}
    for b, e in st.marked.items():
        v = g.other(e, _end_in(g, e, st.blocks[b]))
        at.setdefault(st.cycle_index[v], []).append((b, e))
    left: dict[int, list[int]] = {}
    right: dict[int, list[int]] = {}
    for i, marks in at.items():
        v = inst.cycle[i]
        ints = inst.interior_edges(i)
        r_edge = ints[-1]
        if len(marks) == 2:
            if i == k - 1:
                raise InvariantError(f"IP-3: rightmost vertex {v} carries two marked edges")
            (b1, e1), (b2, e2) = marks
            if e1 == r_edge:
                (b1, e1), (b2, e2) = (b2, e2), (b1, e1)
            right[i] = [~b1, ~b2]
            _count(ctx, "anchor-case1")
            continue
        (b, e), = marks
        deg = g.degree(v)
        if deg == 3:
            if i != k - 1:
                right[i] = [~b]
                _count(ctx, "anchor-case2-deg3-right")
            else:
                left[i] = [~b]
                _count(ctx, "anchor-case2-deg3-left")
        elif deg == 4:
            if i == k - 1 and not inst.outer:
                raise InvariantError(f"IP-3: rightmost vertex {v} has degree 4")
            if e == r_edge:
                right[i] = [~b]
                _count(ctx, "anchor-case2-deg4-right")
            else:
                if i == 0:
                    raise InvariantError(f"IP-4: leftmost vertex {v} needs its anchor on the left")
                left[i] = [~b]
                _count(ctx, "anchor-case2-deg4-left")
        else:
            raise InvariantError(f"vertex {v} with a marked edge has degree {deg}")
    tokens = []
    for i, v in enumerate(inst.cycle):
        tokens.extend(left.get(i, []))
        tokens.append(v)
        tokens.extend(right.get(i, []))
    st.tokens = tokens
    return tokens


def _count(ctx, name):
    if ctx is not None:
        ctx.count(name)


# ---------------------------------------------------------------- anchored trees

def _block_neighbours(st: BlockForestState, b: int) -> list[tuple[int, int]]:
    """(edge, neighbouring block) pairs in the contracted clockwise rotation of ``b``."""
    g = st.inst.graph
    out = []
    for e in st.crot[b]:
        w = g.other(e, _end_in(g, e, st.blocks[b]))
        if w in st.block_of:
            out.append((e, st.block_of[w]))
    return out


def build_trees(st: BlockForestState) -> list[Tree]:
    anc = set(st.ancillaries)
    anchors = set(st.anchors)
    seen: set[int] = set()
    pos = st.positions()
    for s in sorted(anc):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            b = stack.pop()
            comp.append(b)
            for _, c in _block_neighbours(st, b):
                if c in anc and c not in seen:
                    seen.add(c)
                    stack.append(c)
        t = Tree(sorted(comp))
        touch = {c for b in comp for _, c in _block_neighbours(st, b) if c in anchors}
        t.anchors = sorted(touch, key=lambda c: pos[~c])
        if len(t.anchors) < 2:
            raise InvariantError(f"anchored tree of ancillaries {t.ancillaries} has fewer than two anchors")
        st.tree_of.update({b: len(st.trees) for b in comp})
        st.trees.append(t)
    for t in st.trees:
        _label_tree(st, t)
    return st.trees


def _label_tree(st: BlockForestState, t: Tree) -> None:
    members = set(t.ancillaries) | set(t.anchors)
    anc = set(t.ancillaries)
    root = t.anchors[0]
    for direction in (-1, 1):  # children counterclockwise from the parent edge, then the mirror
        label: dict[int, int] = {}
        parent: dict[int, int] = {}
        pedge: dict[int, int] = {}
        children: dict[int, list[int]] = {}
        nb = _block_neighbours(st, root)
        (e0, first), = [(e, c) for e, c in nb if c in anc]
        label[root] = 0
        parent[first], pedge[first] = root, e0
        stack = [first]
        while stack:
            b = stack.pop()
            label[b] = len(label)
            kids = []
            if b in anc:
                ring = _block_neighbours(st, b)
                j = next(i for i, (e, _) in enumerate(ring) if e == pedge[b])
                n = len(ring)
                for s in range(1, n):
                    e, c = ring[(j + direction * s) % n]
                    if c in members and c != parent[b]:
                        kids.append(c)
                        parent[c], pedge[c] = b, e
            children[b] = kids
            stack.extend(reversed(kids))
        labels = [label[a] for a in t.anchors]
        if labels == sorted(labels) and len(label) == len(members):
            t.label, t.parent, t.parent_edge, t.children = label, parent, pedge, children
            return
    raise InvariantError(f"anchors {t.anchors} are not in label order in either direction")


def build_tree_dag(st: BlockForestState) -> list[int]:
    """Order in which trees are drawn: a tree with an anchor inside another's span goes first."""
    pos = st.positions()
    n = len(st.trees)
    succ: dict[int, set[int]] = {i: set() for i in range(n)}
    indeg = [0] * n
    spans = []
    for t in st.trees:
        ps = [pos[~a] for a in t.anchors]
        spans.append((ps[0], ps[-1], set(t.anchors)))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lo, hi, own = spans[j]
            if any(lo < pos[~a] < hi and a not in own for a in st.trees[i].anchors):
                if j not in succ[i]:
                    succ[i].add(j)
                    indeg[j] += 1
    heap = [(spans[i][0], i) for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in sorted(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (spans[j][0], j))
    if len(order) != n:
        raise InvariantError("tree order graph has a cycle")
    return order


def _token_top_edges(st: BlockForestState) -> list[tuple[int, int]]:
    """Top-drawn edges between tokens that are currently part of the drawing."""
    out = []
    for e, p in st.pages.items():
        if p != TOP:
            continue
        a, b = st.ends(e)
        if a == b:
            continue
        out.append((a, b))
    return out


def _free_gap(st: BlockForestState, lo: int, hi: int, edges=None) -> int:
    """Index s in [lo, hi) such that no top edge joins tokens[lo..s] to tokens[s+1..hi]."""
    pos = st.positions()
    reach = list(range(lo, hi + 1))
    for a, b in (edges if edges is not None else _token_top_edges(st)):
        pa, pb = pos.get(a), pos.get(b)
        if pa is None or pb is None:
            continue
        if pa > pb:
            pa, pb = pb, pa
        if lo <= pa and pb <= hi:
            reach[pa - lo] = max(reach[pa - lo], pb)
    far = lo
    for s in range(lo, hi):
        far = max(far, reach[s - lo])
        if far <= s:
            return s
    raise InvariantError(f"no free slot between tokens {st.tokens[lo]} and {st.tokens[hi]}")


def place_ancillaries(st: BlockForestState, ti: int) -> None:
    """Slot the ancillaries of tree ``ti`` between consecutive anchors by label."""
    t = st.trees[ti]
    alab = [t.label[a] for a in t.anchors]
    groups: dict[int, list[int]] = {}
    for b in t.ancillaries:
        lab = t.label[b]
        gi = next(i for i in range(len(alab) - 1) if alab[i] < lab < alab[i + 1])
        groups.setdefault(gi, []).append(b)
    edges = _token_top_edges(st)
    for gi in sorted(groups, reverse=True):
        pos = st.positions()
        lo, hi = pos[~t.anchors[gi]], pos[~t.anchors[gi + 1]]
        s = _free_gap(st, lo, hi, edges)
        items = [~b for b in sorted(groups[gi], key=lambda b: t.label[b])]
        st.tokens[s + 1:s + 1] = items
    for b in t.ancillaries:
        for e, c in _block_neighbours(st, b):
            st.pages[e] = TOP
    st.drawn_trees.add(ti)


# ---------------------------------------------------------------- degree-2 flips

def flip_bottom_edge_to_top(st: BlockForestState, edge: int) -> None:
    """Redraw the bottom cycle edge at a degree-2 cycle vertex on the top page.

    The edge's endpoints end up adjacent on the spine; block-vertices in
    between are moved out of the way as in the degree-2 lemma.
    """
    inst = st.inst
    g = inst.graph
    a, b = g.edges[edge]
    ia, ib = st.cycle_index[a], st.cycle_index[b]
    if ia > ib:
        a, b, ia, ib = b, a, ib, ia
    if g.degree(a) == 2 and 0 < ia:
        v, vr, mirror = a, b, False
    elif g.degree(b) == 2 and ib < inst.k - 1:
        v, vr, mirror = b, a, True
    else:
        raise InvariantError(f"edge {edge} has no inner degree-2 endpoint")
    if mirror:
        st.tokens.reverse()
    try:
        _flip_right(st, v, vr, edge)
    finally:
        if mirror:
            st.tokens.reverse()
    st.pages[edge] = TOP


def _flip_right(st: BlockForestState, v: int, vr: int, edge: int) -> None:
    pos = st.positions()
    i, j = pos[v], pos[vr]
    between = st.tokens[i + 1:j]
    if not between:
        return
    g = st.inst.graph
    blocker = None
    for t in between:
        b = ~t
        if b in st.marked and vr in g.edges[st.marked[b]]:
            blocker = t
    if blocker is None:
        st.tokens[i:j] = between + [v]
        return
    k = between.index(blocker)
    before, after = between[:k], between[k + 1:]
    for t in after:
        if ~t in st.marked:
            raise InvariantError(f"two anchors left of {vr} reach it through marked edges")
    st.tokens[i:j] = before + [blocker, v]
    st.pages[st.marked[~blocker]] = TOP
    # ancillaries trapped between the blocker and vr move right of vr, next to their tree
    for t in reversed(after):
        st.tokens.remove(t)
    pos = st.positions()
    for t in after:
        tree = st.trees[st.tree_of[~t]]
        pv = pos[vr]
        nxt = min((pos[~a] for a in tree.anchors if pos[~a] > pv), default=None)
        if nxt is None:
            raise InvariantError(f"ancillary {~t} has no anchor of its tree right of {vr}")
        s = _free_gap(st, pv, nxt)
        st.tokens.insert(s + 1, t)
        pos = st.positions()


# ---------------------------------------------------------------- expansion of block-vertices

@dataclass
class Piece:
    """One simple boundary cycle of a block, laid out in parent coordinates.

    ``order`` is the spine order of the cycle; its path edges are top-drawn
    and the edge between its extremes bottom-drawn in the parent. ``attach``
    is the cut vertex shared with the parent piece (None for the root piece)
    and ``side`` tells on which side of it the rest of the piece goes.
    """

    inst: Instance
    attach: int | None = None
    side: int = 0  # +1: right of attach, -1: left of attach


@dataclass
class BlockPlan:
    block: int
    pieces: list[Piece]
    w0: int
    kind: str


def _sequences(darts, start):
    """Both traversals of a simple cycle (vertex list, edge list) starting at ``start``."""
    vs = [x for x, _ in darts]
    es = [e for _, e in darts]
    j = vs.index(start)
    fv, fe = vs[j:] + vs[:j], es[j:] + es[:j]
    bv, be = [start] + fv[1:][::-1], fe[::-1]
    return [(fv, fe), (bv, be)]


def _leftmost(seq):
    return seq


def _rightmost(seq):
    vs, es = seq
    return vs[1:] + vs[:1], es[1:] + es[:1]


def _pieces_of_block(g: Graph, members: set[int], walk):
    """Simple cycles of a block boundary, each with the block vertices it encloses."""
    cycles = split_walk(walk)
    owner: dict[int, list[int]] = {}
    for ci, cyc in enumerate(cycles):
        for x, _ in cyc:
            owner.setdefault(x, []).append(ci)
    on_walk = set(owner)
    verts = [set(x for x, _ in cyc) for cyc in cycles]
    seen: set[int] = set()
    for s in sorted(members - on_walk):
        if s in seen:
            continue
        comp, stack, home = [], [s], None
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for _, y in g.inc[x]:
                if y not in members:
                    continue
                if y in on_walk:
                    if len(owner[y]) != 1:
                        raise InvariantError(f"cut vertex {y} of a block boundary has interior edges")
                    home = owner[y][0]
                elif y not in seen:
                    seen.add(y)
                    stack.append(y)
        if home is None:
            raise InvariantError("block interior component does not touch the boundary")
        verts[home].update(comp)
    return cycles, verts, owner


def _child_instance(st: BlockForestState, verts: set[int], order, cedges) -> Instance:
    g = st.inst.graph
    h = g.subgraph(verts)
    rot = {x: [e for e in st.inst.rot[x] if e in h.edges][::-1] for x in verts}
    return Instance(h, rot, list(order), list(cedges))


def _rotation_fits(st: BlockForestState, placed: dict[int, float], fedges: dict[int, str],
                   check: list[int], members: set[int] = frozenset()) -> bool:
    """Do the drawn edges at ``check`` respect the rotation, with block vertices at ``placed``?

    Edges to vertices of ``members`` that are not placed yet are ignored.
    """
    g = st.inst.graph
    tokpos = st.positions()
    pos: dict[int, float] = {}

    def where(x):
        if x in placed:
            return placed[x]
        return tokpos[st.token(x)]

    pages = st.pages
    for x in check:
        es = []
        for e, y in g.inc[x]:
            if y in members and y not in placed:
                continue
            if e in fedges or (e in pages and st.token(y) != st.token(x)):
                es.append(e)
        if len(es) <= 2:
            continue
        pos.clear()
        pos[x] = where(x)
        for e in es:
            y = g.other(e, x)
            pos[y] = where(y)
        pg = {e: fedges.get(e) or pages[e] for e in es}
        if not cyclic_match(st.inst.rot[x], drawn_cw(g, x, es, pos, pg)):
            return False
    return True


def _check_set(st: BlockForestState, members: set[int], placed) -> list[int]:
    """Placed block vertices with outside edges, plus their neighbours on the frame cycle."""
    g = st.inst.graph
    out = []
    for x in placed:
        if len(g.inc[x]) > 2:
            out.append(x)
        out.extend(y for _, y in g.inc[x] if y in st.cycle_index)
    return sorted(set(out))


def _run_positions(base: float, order) -> dict[int, float]:
    p = len(order)
    return {x: base - 0.5 + (j + 1) / (p + 1) for j, x in enumerate(order)}


def expand_block_vertex(st: BlockForestState, b: int, w0: int, kind: str,
                        ctx: Context | None = None) -> BlockPlan | None:
    """Choose how block ``b`` is unfolded on the spine, or None if no layout fits.

    ``kind`` is ``"anchor"`` (try ``w0`` rightmost, then leftmost) or
    ``"ancillary"`` (``w0`` leftmost only).
    """
    g = st.inst.graph
    members = st.blocks[b]
    walk = st.walks[b]
    tokpos = st.positions()
    base = tokpos[~b]
    cycles, verts, owner = _pieces_of_block(g, members, walk)
    root = next(ci for ci, cyc in enumerate(cycles) if any(x == w0 for x, _ in cyc))
    placers = [("rightmost", _rightmost), ("leftmost", _leftmost)] if kind == "anchor" else [("leftmost", _leftmost)]
    for name, placer in placers:
        for seq in _sequences(cycles[root], w0):
            order, ce = placer(seq)
            inst = _child_instance(st, verts[root], order, ce)
            if not orientation_ok(inst):
                continue
            fedges = {e: TOP for e in ce[:-1]}
            fedges[ce[-1]] = BOTTOM
            placed = _run_positions(base, order)
            if not _rotation_fits(st, placed, fedges, _check_set(st, members, order), members):
                continue
            pieces = [Piece(inst)]
            if len(cycles) > 1:
                rest = _plug_pieces(st, b, cycles, verts, owner, root, pieces, placed, fedges, base)
                if rest is None:
                    continue
            _count(ctx, f"{kind}-{name}")
            if len(cycles) > 1:
                _count(ctx, "nonsimple-boundary")
            return BlockPlan(b, pieces, w0, f"{kind}-{name}")
    return None


def _plug_pieces(st, b, cycles, verts, owner, root, pieces, placed, fedges, base):
    """Attach the remaining boundary cycles of a block, breadth first from the root cycle."""
    members = st.blocks[b]
    done = {root}
    queue = [0]
    while queue:
        pi = queue.pop(0)
        parent = pieces[pi]
        pc = parent.inst
        for j, u in enumerate(pc.cycle):
            kids = [ci for ci in owner[u] if ci not in done]
            if not kids:
                continue
            (ci,) = kids
            done.add(ci)
            sides = []
            if j == 0:
                sides = [(-1, None)]
            elif j == pc.k - 1:
                sides = [(+1, None)]
            else:
                sides = [(+1, pc.cedges[j]), (-1, pc.cedges[j - 1])]
            chosen = None
            for side, flip_edge in sides:
                if flip_edge is not None and flip_conflict(pc, flip_edge):
                    continue
                for seq in _sequences(cycles[ci], u):
                    order, ce = (seq if side > 0 else _rightmost(seq))
                    inst = _child_instance(st, verts[ci], order, ce)
                    if not orientation_ok(inst):
                        continue
                    trial = dict(fedges)
                    trial.update({e: TOP for e in ce[:-1]})
                    trial[ce[-1]] = BOTTOM
                    if flip_edge is not None:
                        trial[flip_edge] = BOTTOM
                    tplaced = dict(placed)
                    # the new cycle sits in a narrow slot next to u
                    pu = placed[u]
                    edge = base + 0.5 * side  # the block's slot on the spine ends here
                    room = min([abs(p - pu) for p in placed.values() if (p - pu) * side > 0] + [abs(edge - pu)])
                    others = [x for x in order if x != u]
                    for t, x in enumerate(others if side > 0 else others[::-1]):
                        tplaced[x] = pu + side * room * (t + 1) / (len(others) + 2)
                    if _rotation_fits(st, tplaced, trial, _check_set(st, members, tplaced), members):
                        chosen = (inst, side, flip_edge, trial, tplaced)
                        break
                if chosen:
                    break
            if chosen is None:
                return None
            inst, side, flip_edge, fedges, placed = chosen
            if flip_edge is not None:
                pc.flip.add(flip_edge)
            pieces.append(Piece(inst, u, side))
            queue.append(len(pieces) - 1)
    return pieces


def reposition_ancillary(st: BlockForestState, b: int) -> None:
    """Move ancillary ``b`` between the subtrees of its first two children.

    Used when ``b`` cannot be unfolded with its parent-side vertex leftmost.
    """
    t = st.trees[st.tree_of[b]]
    kids = t.children.get(b, [])
    if len(kids) < 2:
        raise InvariantError(f"ancillary {b} has no layout and fewer than two children")
    w1, w2 = kids[0], kids[1]

    def sub_anchors(x):
        out, stack = [], [x]
        while stack:
            y = stack.pop()
            if y in t.anchors:
                out.append(y)
            stack.extend(t.children.get(y, []))
        return out

    st.tokens.remove(~b)
    pos = st.positions()
    lo = max(pos[~a] for a in sub_anchors(w1))
    hi = min(pos[~a] for a in sub_anchors(w2))
    if lo >= hi:
        raise InvariantError(f"subtrees of ancillary {b} are interleaved")
    s = _free_gap(st, lo, hi)
    st.tokens.insert(s + 1, ~b)


# ---------------------------------------------------------------- one frame

def _entry_audit(inst: Instance) -> None:
    g = inst.graph
    k = inst.k
    if len(set(inst.cycle)) != k or len(inst.cedges) != k:
        raise InvariantError("IP-1: frame cycle is not simple")
    for i in range(k):
        a, b = inst.cycle[i], inst.cycle[(i + 1) % k]
        if set(g.edges[inst.cedges[i]]) != {a, b}:
            raise InvariantError(f"IP-1: edge {inst.cedges[i]} does not join {a} and {b}")
    if k > 1 and not orientation_ok(inst):
        raise InvariantError("IP-2: interior edges do not lie between the cycle edges")


def _chords(inst: Instance) -> list[int]:
    g = inst.graph
    on = set(inst.cycle)
    ce = set(inst.cedges)
    return sorted({e for v in inst.cycle for e, w in g.inc[v] if w in on and e not in ce})


def _frame_audit(inst: Instance, d: Drawing) -> None:
    g = inst.graph
    missing = set(g.edges) - set(d.pages)
    if missing or sorted(d.order) != sorted(g.vertices):
        raise InvariantError(f"frame drawing misses edges {sorted(missing)[:5]} or vertices")
    bad = crossing_witnesses(g, d.order, d.pages)
    if bad:
        raise InvariantError(f"frame drawing has crossing edges {bad[:3]}")
    rv = rotation_violations(g, inst.rot, d.order, d.pages)
    if rv:
        raise InvariantError(f"frame drawing breaks the rotation at {rv[:5]}")


def embed_cycle_interior(inst: Instance, ctx: Context | None = None) -> Drawing:
    """Draw a frame: cycle path on the bottom page, closing edge on top, interior inside."""
    ctx = ctx if ctx is not None else Context()
    ctx.frames += 1
    g = inst.graph
    k = inst.k
    _entry_audit(inst)
    if not inst.outer and k > 1 and g.degree(inst.cycle[-1]) > 3:
        if g.degree(inst.cycle[0]) > 3:
            raise InvariantError("IP-3: both extremes of the frame have degree 4")
        ctx.count("ip3-mirror")
        return embed_cycle_interior(inst.mirrored(), ctx).mirrored()
    chords = _chords(inst)
    if _violates_ip4(inst):
        return resolve_ip4(inst, ctx)
    st = _interior_state(inst)
    pages = {e: BOTTOM for e in inst.cedges[:-1]}
    pages[inst.cedges[-1]] = TOP
    for e in chords:
        pages[e] = TOP
    if st is None:
        for e in inst.flip:
            pages[e] = TOP
        d = Drawing(list(inst.cycle), pages, set(inst.flip))
        if ctx.audit:
            _frame_audit(inst, d)
        return d
    st.pages = pages
    select_marked_edges(st)
    place_anchors(st, ctx)
    anc = set(st.ancillaries)
    for b in st.anchors:
        for e in st.ext[b]:
            other = g.other(e, _end_in(g, e, st.blocks[b]))
            if other in st.block_of and st.block_of[other] in anc:
                continue
            pages[e] = BOTTOM if st.marked[b] == e else TOP
    if st.ancillaries:
        build_trees(st)
        for ti in build_tree_dag(st):
            place_ancillaries(st, ti)
        ctx.count("anchored-trees")
    for e in sorted(inst.flip):
        flip_bottom_edge_to_top(st, e)
        ctx.count("flip")
    plans = _plan_blocks(st, ctx)
    order: list[int] = []
    for t in st.tokens:
        if t >= 0:
            order.append(t)
            continue
        plan = plans[~t]
        if plan is None:
            (v,) = st.blocks[~t]
            order.append(v)
            continue
        order.extend(_draw_plan(plan, pages, ctx))
    d = Drawing(order, pages, set(inst.flip))
    if ctx.audit:
        _frame_audit(inst, d)
    return d


def _plan_blocks(st: BlockForestState, ctx: Context) -> dict[int, BlockPlan | None]:
    g = st.inst.graph

    def w0_of(b, e):
        return _end_in(g, e, st.blocks[b])

    def attempt():
        plans, failed = {}, []
        for b in range(len(st.blocks)):
            if not st.walks[b]:
                plans[b] = None
                continue
            if b in st.marked:
                plan = expand_block_vertex(st, b, w0_of(b, st.marked[b]), "anchor", ctx)
                if plan is None:
                    raise InvariantError(f"anchor block {b} has no layout")
            else:
                t = st.trees[st.tree_of[b]]
                plan = expand_block_vertex(st, b, w0_of(b, t.parent_edge[b]), "ancillary", ctx)
                if plan is None:
                    failed.append(b)
            plans[b] = plan
        return plans, failed

    plans, failed = attempt()
    if failed:
        pos = st.positions()
        for b in sorted(failed, key=lambda b: -pos[~b]):
            reposition_ancillary(st, b)
            ctx.count("reposition")
        plans, failed = attempt()
        if failed:
            raise InvariantError(f"ancillary blocks {failed} have no layout after repositioning")
    return plans


def _draw_plan(plan: BlockPlan, pages: dict[int, str], ctx: Context) -> list[int]:
    order: list[int] = []
    for piece in plan.pieces:
        d = embed_cycle_interior(piece.inst, ctx).swapped()
        pages.update(d.pages)
        if piece.attach is None:
            order = list(d.order)
            continue
        u = piece.attach
        sub = d.order
        if piece.side > 0:
            if sub[0] != u:
                raise InvariantError(f"attached cycle does not start at cut vertex {u}")
            i = order.index(u)
            order[i + 1:i + 1] = sub[1:]
        else:
            if sub[-1] != u:
                raise InvariantError(f"attached cycle does not end at cut vertex {u}")
            i = order.index(u)
            order[i:i] = sub[:-1]
    return order


# ---------------------------------------------------------------- a leftmost vertex with one chord

def _repoint(g: Graph, e: int, u: int, v: int) -> None:
    a, b = g.edges[e]
    for x in (a, b):
        if x in g.inc:
            g.inc[x] = [p for p in g.inc[x] if p[0] != e]
    g.edges[e] = (u, v)
    g.inc[u].append((e, v))
    g.inc[v].append((e, u))


def _ip4_regions(inst: Instance, path: list[int], pchords: list[int]):
    """Split the interior of a frame along its separating chord path.

    Returns a map region -> set of edges, where region ``t`` is the cycle
    between ``path[t]`` and ``path[t + 1]`` closed by a chord, and region
    ``"r"`` is the part beyond the path (towards the closing edge).
    """
    g = inst.graph
    cyc = inst.cycle
    k = inst.k
    pset = set(pchords)
    seg = {}  # cycle index -> region for vertices strictly inside a segment
    for t in range(len(path) - 1):
        for x in range(path[t] + 1, path[t + 1]):
            seg[x] = t
    for x in range(path[-1] + 1, k):
        seg[x] = "r"
    at_path = {p: q for q, p in enumerate(path)}
    edge_region: dict[int, object] = {}
    for i, v in enumerate(cyc):
        ints = [e for e in inst.interior_edges(i) if e not in pset]
        if i not in at_path:
            for e in ints:
                edge_region[e] = seg[i]
            continue
        q = at_path[i]
        inc = pchords[q - 1] if q > 0 else None
        out = pchords[q] if q < len(pchords) else None
        full = inst.interior_edges(i)
        # clockwise from the previous edge: segment before, then beyond the path, then segment after
        state = q - 1 if q > 0 else "r"
        for e in full:
            if e == inc:
                state = "r"
                continue
            if e == out:
                state = q
                continue
            edge_region[e] = state
    # interior components inherit the region of their attachment edges
    on = set(cyc)
    seen: set[int] = set()
    for e0, r in list(edge_region.items()):
        a, b = g.edges[e0]
        for s0 in (a, b):
            if s0 in on or s0 in seen:
                continue
            stack = [s0]
            seen.add(s0)
            while stack:
                x = stack.pop()
                for e, y in g.inc[x]:
                    if e in edge_region and edge_region[e] != r:
                        raise InvariantError("interior component touches two sides of the chord path")
                    edge_region[e] = r
                    if y not in on and y not in seen:
                        seen.add(y)
                        stack.append(y)
    regions: dict[object, set[int]] = {}
    for e, r in edge_region.items():
        regions.setdefault(r, set()).add(e)
    return regions


def _region_instance(inst: Instance, edges: set[int], cycle, cedges) -> Instance:
    g = inst.graph
    es = set(edges) | set(cedges)
    vs = set(cycle)
    for e in es:
        vs.update(g.edges[e])
    h = g.subgraph(vs)
    for e in list(h.edges):
        if e not in es:
            h.remove_edge(e)
    rot = {x: [e for e in inst.rot[x] if e in es] for x in vs}
    return Instance(h, rot, list(cycle), list(cedges))


def _concat(drawings, joints) -> list[int]:
    order: list[int] = []
    for d, (first, last) in zip(drawings, joints):
        if first is not None and d.order[0] != first:
            raise InvariantError(f"sub-drawing does not start at {first}")
        if d.order[-1] != last:
            raise InvariantError(f"sub-drawing does not end at {last}")
        order.extend(d.order if not order else d.order[1:])
    return order


@dataclass
class ChordPathSplit:
    """How a frame violating IP-4 is cut along its separating chord path."""

    case: str
    segments: list[Instance]
    right: Instance | None
    blocked: set[int]  # cycle edges whose flip cannot be honoured
    w1: int = -1
    wj: int = -1
    new_edge: int = -1


def split_chord_path(inst: Instance) -> ChordPathSplit:
    g = inst.graph
    cyc, ce, k = inst.cycle, inst.cedges, inst.k
    where = {v: i for i, v in enumerate(cyc)}
    chords = set(_chords(inst))
    path, pchords = [0], []
    while True:
        v = cyc[path[-1]]
        nxt = [(where[w], e) for e, w in g.inc[v] if e in chords and where[w] > path[-1]]
        if not nxt:
            break
        if len(nxt) > 1:
            raise InvariantError(f"chord path branches at {v}")
        (t, e), = nxt
        path.append(t)
        pchords.append(e)
    i, j = path[1], path[-1]
    if i == 1:
        raise InvariantError("chord at the leftmost vertex is parallel to a path edge")
    regions = _ip4_regions(inst, path, pchords)
    w1, wj = cyc[0], cyc[j]
    r_edges = set(regions.get("r", set()))
    w1_r = [e for e in inst.interior_edges(0) if e in r_edges]

    def segment(t):
        a, b = path[t], path[t + 1]
        return _region_instance(inst, regions.get(t, set()), cyc[a:b + 1], ce[a:b] + [pchords[t]])

    def with_flips(sub):
        sub.flip = {e for e in inst.flip if e in sub.cedges}
        return sub

    if j == k - 1:
        if r_edges:
            raise InvariantError("IP-4 case 1 with a non-empty region beyond the chord path")
        segs = [with_flips(segment(t)) for t in range(len(pchords))]
        return ChordPathSplit("ip4-case1", segs, None, set(), w1, wj)

    # the part beyond the path, with the path contracted into w_j
    wj_full = inst.interior_edges(j)
    wj_r = wj_full[wj_full.index(pchords[-1]) + 1:]
    right = _region_instance(inst, r_edges | {ce[-1]}, cyc[j:], ce[j:k - 1] + [ce[-1]])
    h = right.graph
    for e in w1_r + [ce[-1]]:
        a, b = g.edges[e]
        _repoint(h, e, wj, b if a == w1 else a)
    if w1 in h.inc:
        h.remove_vertex(w1)
    right.rot[wj] = [ce[-1]] + w1_r + wj_r + [ce[j]]
    right.rot.pop(w1, None)
    for v in right.cycle:
        right.rot[v] = [e for e in right.rot[v] if e in h.edges]
    with_flips(right)
    if not w1_r:
        segs = [with_flips(segment(t)) for t in range(len(pchords))]
        return ChordPathSplit("ip4-case2.1", segs, right, set(), w1, wj)

    # drop w_1 from the first segment and close it with a new edge (w_2, w_i)
    first = segment(0)
    fg = first.graph
    w2, wi = cyc[1], cyc[i]
    fg.remove_vertex(w1)
    new = fg.add_edge(w2, wi)
    first.rot.pop(w1)
    first.rot[w2] = [new if e == ce[0] else e for e in first.rot[w2]]
    first.rot[wi] = [new if e == pchords[0] else e for e in first.rot[wi]]
    first.cycle = cyc[1:i + 1]
    first.cedges = ce[1:i] + [new]
    segs = [with_flips(first)] + [with_flips(segment(t)) for t in range(1, len(pchords))]
    right.flip.discard(ce[j])
    return ChordPathSplit("ip4-case2.2", segs, right, {ce[0], ce[j]},
                          w1, wj, new)


def _needs_ip3_mirror(inst: Instance) -> bool:
    g = inst.graph
    return not inst.outer and inst.k > 1 and g.degree(inst.cycle[-1]) > 3 and g.degree(inst.cycle[0]) <= 3


def _violates_ip4(inst: Instance) -> bool:
    g = inst.graph
    v1 = inst.cycle[0]
    return g.degree(v1) == 4 and sum(1 for e, w in g.inc[v1] if w in set(inst.cycle) and e not in inst.cedges) == 1


def flip_conflict(inst: Instance, e: int) -> bool:
    """Would asking this frame to flip cycle edge ``e`` run into a chord-path split that moves it?"""
    probe = Instance(inst.graph, inst.rot, inst.cycle, inst.cedges, inst.outer, {e})
    if _needs_ip3_mirror(probe):
        probe = probe.mirrored()
    if not _violates_ip4(probe):
        return False
    sp = split_chord_path(probe)
    if e in sp.blocked:
        return True
    for sub in sp.segments + ([sp.right] if sp.right is not None else []):
        if e in sub.cedges:
            return flip_conflict(sub, e)
    return False


def resolve_ip4(inst: Instance, ctx: Context) -> Drawing:
    """Frame whose leftmost vertex has degree four and exactly one chord.

    The chord starts a path of chords w_1 -> w_i -> ... -> w_j that splits
    the interior. The part before the path is drawn as a row of smaller
    frames; the part beyond it is drawn with the path contracted into w_j.
    If the remaining neighbour of w_1 lies beyond the path, w_1 itself is
    moved next to w_j and the frame before the path is closed by a new
    edge (w_2, w_i) instead.
    """
    sp = split_chord_path(inst)
    ctx.count(sp.case)
    if sp.blocked & inst.flip:
        raise InvariantError("flip requested on an edge moved by the chord-path split")
    ds = [embed_cycle_interior(sub, ctx) for sub in sp.segments]
    pages = {} if sp.case != "ip4-case1" else {inst.cedges[-1]: TOP}
    for d in ds:
        pages.update(d.pages)
    if sp.case == "ip4-case1":
        order = _concat(ds, [(s.cycle[0], s.cycle[-1]) for s in sp.segments])
        return _finish(inst, Drawing(order, pages, set(inst.flip)), ctx)
    dr = embed_cycle_interior(sp.right, ctx)
    pages.update(dr.pages)
    if sp.case == "ip4-case2.1":
        order = _concat(ds + [dr], [(s.cycle[0], s.cycle[-1]) for s in sp.segments] + [(sp.wj, dr.order[-1])])
        return _finish(inst, Drawing(order, pages, set(inst.flip)), ctx)
    left = _concat(ds, [(None, sp.segments[0].cycle[-1])] + [(s.cycle[0], s.cycle[-1]) for s in sp.segments[1:]])
    if dr.order[0] != sp.wj:
        raise InvariantError("contracted vertex is not leftmost in the drawing beyond the chord path")
    order = left + [sp.w1] + dr.order[1:]
    pages.pop(sp.new_edge, None)
    g = inst.graph
    chord0 = next(e for e, w in g.inc[sp.w1] if w in set(inst.cycle) and e not in inst.cedges)
    pages[inst.cedges[0]] = TOP
    pages[chord0] = TOP
    return _finish(inst, Drawing(order, pages, set(inst.flip)), ctx)


def _finish(inst: Instance, d: Drawing, ctx: Context) -> Drawing:
    if ctx.audit:
        _frame_audit(inst, d)
    return d


# ---------------------------------------------------------------- whole graphs

def _outer_instance(g: Graph, emb: PlanarEmbedding, force_last: bool = False,
                    last: int | None = None) -> Instance | None:
    """Outer frame with a vertex of degree at most three last.

    Returns None if every outer vertex has degree four, unless
    ``force_last`` is set, in which case the smallest outer vertex is last.
    ``last`` picks the last vertex explicitly.
    """
    walk = emb.outer
    vs = [v for v, _ in walk][::-1]
    es = [e for _, e in walk][::-1]
    # walk edge es[t] (reversed) joins vs[t] and vs[t-1]; shift so cedges[t] joins vs[t], vs[t+1]
    es = es[1:] + es[:1]
    k = len(vs)
    if last is not None:
        j = vs.index(last)
    else:
        low = [i for i, v in enumerate(vs) if g.degree(v) <= 3]
        if not low and not force_last:
            return None
        j = min(low or range(k), key=lambda i: (g.degree(vs[i]), vs[i]))
    s = (j + 1) % k
    cyc = vs[s:] + vs[:s]
    ce = es[s:] + es[:s]
    inst = Instance(g, emb.rot, cyc, ce, outer=True)
    if not orientation_ok(inst):
        raise InvariantError("outer face walk has the wrong orientation")
    return inst


def embed_block(g: Graph, emb: PlanarEmbedding, last: int | None = None, ctx: Context | None = None) -> Drawing:
    """Draw a biconnected graph whose embedding ``emb`` has a chordless outer face.

    ``last`` fixes the outer vertex that goes rightmost; by default a vertex
    of smallest degree (then smallest id) is used.
    """
    ctx = ctx if ctx is not None else Context()
    if last is None:
        inst = _outer_instance(g, emb)
    else:
        inst = _outer_instance(g, emb, last=last)
        if g.degree(last) <= 3:
            return embed_cycle_interior(inst, ctx)
        if any(g.degree(v) <= 3 for v in inst.cycle):
            raise GraphError("a vertex of degree four is only drawn last when the outer face has no other choice")
        return bootstrap_outerface(g, emb, ctx, last=last)
    if inst is None:
        return bootstrap_outerface(g, emb, ctx)
    return embed_cycle_interior(inst, ctx)


def _block_embedding(g: Graph, ctx: Context) -> BookEmbedding:
    if g.n <= 2 or g.m == g.n - 1:
        return _path_like(g)
    emb = chordless_outerface(g, planar_embed(g))
    d = embed_block(g, emb, ctx=ctx)
    return BookEmbedding(d.order, d.pages)


def _path_like(g: Graph) -> BookEmbedding:
    """Trees: DFS preorder with every edge on the top page."""
    vs = g.vertices
    if not vs:
        return BookEmbedding([], {})
    order, seen, stack = [], set(), [min(vs)]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        order.append(v)
        stack.extend(sorted((w for w in g.neighbors(v) if w not in seen), reverse=True))
    return BookEmbedding(order, {e: TOP for e in g.edges})


def _cycle_embedding(g: Graph) -> BookEmbedding:
    """Cycles: walk order, path edges on the bottom page and the closing edge on top."""
    start = min(g.vertices)
    order, prev, v = [start], None, start
    pages = {}
    while True:
        e, w = next((e, w) for e, w in sorted(g.inc[v]) if e != prev)
        if w == start:
            pages[e] = TOP
            break
        pages[e] = BOTTOM
        order.append(w)
        prev, v = e, w
    return BookEmbedding(order, pages)


def embed_two_page(g: Graph, audit: bool = False, ctx: Context | None = None) -> BookEmbedding:
    """Two-page book embedding of a planar graph with maximum degree four.

    Raises GraphError for degree above four and NonPlanarError for
    non-planar input. With ``audit`` every frame is checked for crossings
    and rotation consistency as it is built.
    """
    if g.max_degree() > 4:
        raise GraphError("maximum degree exceeds four")
    ctx = ctx if ctx is not None else Context(audit=audit)
    ctx.audit = ctx.audit or audit
    planar_embed(g)  # raises on non-planar input
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000 + 10 * g.n))
    try:
        parts = []
        for comp in g.components():
            parts.append(_connected_embedding(g.subgraph(comp), ctx))
    finally:
        sys.setrecursionlimit(old)
    order = [v for p in parts for v in p.order]
    pages = {e: p.pages[e] for p in parts for e in p.pages}
    return BookEmbedding(order, pages)


def _connected_embedding(g: Graph, ctx: Context) -> BookEmbedding:
    if g.n <= 2 or g.m == g.n - 1:
        ctx.count("shortcut-tree")
        return _path_like(g)
    if all(g.degree(v) == 2 for v in g.vertices):
        ctx.count("shortcut-cycle")
        return _cycle_embedding(g)
    parts = [(sub, _block_embedding(sub, ctx)) for sub, _ in biconnected_split(g)]
    return recompose_book_embeddings(parts)


def _mirror_keep_last(inst: Instance) -> Instance:
    """The same outer frame in the mirrored embedding, with the same last vertex."""
    k = inst.k
    cyc = inst.cycle[:-1][::-1] + [inst.cycle[-1]]
    # cycle[t] -> cycle[t+1] in the new order used to be cedges[k-3-t]; the last two swap roles
    ce = [inst.cedges[k - 3 - t] for t in range(k - 2)] + [inst.cedges[k - 1], inst.cedges[k - 2]]
    rot = {v: r[::-1] for v, r in inst.rot.items()}
    return Instance(inst.graph, rot, cyc, ce, outer=True)


def _touches_other(st: BlockForestState, b: int, vk: int) -> bool:
    g = st.inst.graph
    return any(g.other(e, _end_in(g, e, st.blocks[b])) in st.cycle_index
               and g.other(e, _end_in(g, e, st.blocks[b])) != vk for e in st.ext[b])


def bootstrap_outerface(g: Graph, emb: PlanarEmbedding, ctx: Context, last: int | None = None) -> Drawing:
    """Start the recursion when every vertex of the (chordless) outer face has degree four.

    The graph is locally augmented around the last outer vertex so that the
    frame invariants hold, drawn, and the augmentation is undone.
    """
    inst = _outer_instance(g, emb, force_last=True, last=last)
    st = _interior_state(inst)
    vk = inst.cycle[-1]
    e_l, e_r = inst.interior_edges(inst.k - 1)
    v_l, v_r = g.other(e_l, vk), g.other(e_r, vk)
    c_l, c_r = st.block_of[v_l], st.block_of[v_r]
    if _touches_other(st, c_r, vk):
        return _bootstrap_split(inst, ctx, mirrored=False)
    if _touches_other(st, c_l, vk):
        return _bootstrap_split(_mirror_keep_last(inst), ctx, mirrored=True)
    return _bootstrap_detour(inst, ctx)


def _bootstrap_split(inst: Instance, ctx: Context, mirrored: bool) -> Drawing:
    """Grow three vertices right of v_k; the right neighbour of v_k moves to the middle one."""
    ctx.count("bootstrap-case1" + ("-mirrored" if mirrored else ""))
    g = inst.graph
    k = inst.k
    vk, v1 = inst.cycle[-1], inst.cycle[0]
    close = inst.cedges[-1]
    e_l, e_r = inst.interior_edges(k - 1)
    v_r = g.other(e_r, vk)
    h = g.copy()
    a, b, c = h.add_vertex(), h.add_vertex(), h.add_vertex()
    ka, ab, bc, chord = h.add_edge(vk, a), h.add_edge(a, b), h.add_edge(b, c), h.add_edge(vk, b)
    _repoint(h, e_r, b, v_r)
    _repoint(h, close, c, v1)
    rot = {v: list(r) for v, r in inst.rot.items()}
    rot[vk] = [inst.cedges[k - 2], e_l, chord, ka]
    rot[a] = [ka, ab]
    rot[b] = [ab, chord, e_r, bc]
    rot[c] = [bc, close]
    aug = Instance(h, rot, inst.cycle + [a, b, c], inst.cedges[:-1] + [ka, ab, bc, close], outer=True)
    d = embed_cycle_interior(aug, ctx)
    pos = {v: i for i, v in enumerate(d.order)}
    if not pos[vk] + 3 == pos[a] + 2 == pos[b] + 1 == pos[c] or pos[c] != len(d.order) - 1:
        raise InvariantError("augmented vertices are not the rightmost block of the spine")
    order = [v for v in d.order if v not in (a, b, c)]
    pages = {e: p for e, p in d.pages.items() if e not in (ka, ab, bc, chord)}
    pages[close] = TOP
    return _finish_outer(inst, Drawing(order, pages), ctx)


def _bootstrap_detour(inst: Instance, ctx: Context) -> Drawing:
    """Route both interior edges of v_k through one new interior vertex."""
    g = inst.graph
    k = inst.k
    vk = inst.cycle[-1]
    e_l, e_r = inst.interior_edges(k - 1)
    v_l, v_r = g.other(e_l, vk), g.other(e_r, vk)
    h = g.copy()
    x = h.add_vertex()
    ex = h.add_edge(vk, x)
    _repoint(h, e_l, x, v_l)
    _repoint(h, e_r, x, v_r)
    rot = {v: list(r) for v, r in inst.rot.items()}
    rot[vk] = [inst.cedges[k - 2], ex, inst.cedges[k - 1]]
    rot[x] = [ex, e_l, e_r]
    aug = Instance(h, rot, list(inst.cycle), list(inst.cedges), outer=True)
    blocks = bridge_block_forest(h.subgraph([v for v in h.vertices if v not in set(inst.cycle)]))
    same = blocks.block_of[v_l] == blocks.block_of[v_r]
    d = embed_cycle_interior(aug, ctx)
    pos = {v: i for i, v in enumerate(d.order)}
    order = [v for v in d.order if v != x]
    pages = {e: p for e, p in d.pages.items() if e != ex}
    if not same:
        ctx.count("bootstrap-case2.1")
        if pos[x] + 1 != pos[vk]:
            raise InvariantError("new vertex is not directly left of v_k")
        pages[e_l] = pages[e_r] = TOP
    elif d.pages[ex] == BOTTOM:
        ctx.count("bootstrap-case2.2-marked")
        if pos[x] + 1 != pos[vk]:
            raise InvariantError("new vertex is not directly left of v_k")
        pages[e_l], pages[e_r] = BOTTOM, TOP
    else:
        ctx.count("bootstrap-case2.2-unmarked")
        pages[e_l] = pages[e_r] = TOP
    return _finish_outer(inst, Drawing(order, pages), ctx)


def _finish_outer(inst: Instance, d: Drawing, ctx: Context) -> Drawing:
    if ctx.audit:
        _frame_audit(inst, d)
    return d
