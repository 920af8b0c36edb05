"""Undirected multigraph with stable vertex/edge ids, bridges and bridge-blocks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Raised when a graph violates the input contract."""


class Graph:
    """Undirected multigraph, no self-loops, edge multiplicity at most two.

    Vertex and edge ids are small integers that are never reused. Removing a
    vertex masks it (and its edges) instead of renumbering.
    """

    def __init__(self, n: int = 0):
        self._alive: list[bool] = [True] * n
        self.edges: dict[int, tuple[int, int]] = {}
        self.inc: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
        self._next_edge = 0

    @classmethod
    def build(cls, n: int, edges) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # -- vertices
    def add_vertex(self) -> int:
        v = len(self._alive)
        self._alive.append(True)
        self.inc[v] = []
        return v

    def remove_vertex(self, v: int) -> None:
        for e, _ in list(self.inc[v]):
            self.remove_edge(e)
        self._alive[v] = False
        del self.inc[v]

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < len(self._alive) and self._alive[v]

    @property
    def vertices(self) -> list[int]:
        return [v for v, a in enumerate(self._alive) if a]

    @property
    def n(self) -> int:
        return len(self.inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def id_bound(self) -> int:
        return len(self._alive)

    # -- edges
    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (self.has_vertex(u) and self.has_vertex(v)):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range")
        if self.multiplicity(u, v) >= 2:
            raise GraphError(f"edge ({u}, {v}) would have multiplicity > 2")
        e = self._next_edge
        self._next_edge += 1
        self.edges[e] = (u, v)
        self.inc[u].append((e, v))
        self.inc[v].append((e, u))
        return e

    def remove_edge(self, e: int) -> None:
        u, v = self.edges.pop(e)
        self.inc[u] = [p for p in self.inc[u] if p[0] != e]
        self.inc[v] = [p for p in self.inc[v] if p[0] != e]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def multiplicity(self, u: int, v: int) -> int:
        if u not in self.inc:
            return 0
        return sum(1 for _, w in self.inc[u] if w == v)

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e, w in self.inc[u] if w == v]

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def degree(self, v: int) -> int:
        return len(self.inc[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted({w for _, w in self.inc[v]})

    def max_degree(self) -> int:
        return max((len(i) for i in self.inc.values()), default=0)

    def edge_multiset(self) -> Counter:
        return Counter(tuple(sorted(p)) for p in self.edges.values())

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g._alive = list(self._alive)
        g.edges = dict(self.edges)
        g.inc = {v: list(i) for v, i in self.inc.items()}
        g._next_edge = self._next_edge
        return g

    def subgraph(self, vertices) -> "Graph":
        """Induced subgraph on ``vertices``; ids are preserved, everything else masked."""
        keep = set(vertices)
        g = Graph.__new__(Graph)
        g._alive = [False] * len(self._alive)
        g.inc = {}
        g.edges = {}
        for v in sorted(keep):
            if not self.has_vertex(v):
                continue
            g._alive[v] = True
            g.inc[v] = [(e, w) for e, w in self.inc[v] if w in keep]
            for e, _ in g.inc[v]:
                g.edges[e] = self.edges[e]
        g._next_edge = self._next_edge
        return g

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for _, y in self.inc[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_networkx(self):
        import networkx as nx

        h = nx.MultiGraph()
        h.add_nodes_from(self.vertices)
        for e, (u, v) in self.edges.items():
            h.add_edge(u, v, key=e)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bridges(g: Graph) -> set[int]:
    """Edge ids whose removal disconnects their component (single low-point DFS)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[int] = set()
    t = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        # frames: (vertex, edge used to enter, iterator over incidences)
        stack = [(root, -1, iter(g.inc[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for e, w in it:
                if e == pe:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, iter(g.inc[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    out.add(pe)
    return out


@dataclass
class BridgeBlockForest:
    """Bridge-blocks of a graph: ``block_of`` maps vertex to block index."""

    block_of: dict[int, int]
    blocks: list[list[int]]
    bridges: set[int]
    # block index -> list of (bridge edge id, neighbouring block index)
    tree: dict[int, list[tuple[int, int]]] = field(default_factory=dict)


def bridge_block_forest(g: Graph) -> BridgeBlockForest:
    br = bridges(g)
    block_of: dict[int, int] = {}
    blocks: list[list[int]] = []
    for s in g.vertices:
        if s in block_of:
            continue
        b = len(blocks)
        block_of[s] = b
        stack, members = [s], []
        while stack:
            x = stack.pop()
            members.append(x)
            for e, y in g.inc[x]:
                if e not in br and y not in block_of:
                    block_of[y] = b
                    stack.append(y)
        blocks.append(sorted(members))
    tree: dict[int, list[tuple[int, int]]] = {b: [] for b in range(len(blocks))}
    for e in sorted(br):
        u, v = g.edges[e]
        tree[block_of[u]].append((e, block_of[v]))
        tree[block_of[v]].append((e, block_of[u]))
    return BridgeBlockForest(block_of, blocks, br, tree)


def contract_blocks(g: Graph, f: BridgeBlockForest, keep=()) -> tuple[Graph, dict[int, int], dict[int, int]]:
    """Contract every bridge-block not fully contained in ``keep`` to one vertex.

    Returns the contracted graph, a map ``vertex -> contracted vertex`` and a
    back-map ``contracted edge id -> original edge id``. Raises GraphError if a
    contracted edge would get multiplicity > 2.
    """
    keep = set(keep)
    h = Graph(0)
    image: dict[int, int] = {}
    for v in sorted(keep):
        image[v] = h.add_vertex()
    for b, members in enumerate(f.blocks):
        rest = [v for v in members if v not in keep]
        if not rest:
            continue
        nv = h.add_vertex()
        for v in rest:
            image[v] = nv
    back: dict[int, int] = {}
    for e in sorted(g.edges):
        u, v = g.edges[e]
        a, b = image[u], image[v]
        if a == b:
            continue
        back[h.add_edge(a, b)] = e
    return h, image, back
