"""Plain-text documents: edge lists and embedding/cycle documents.

Edge lists::

    # comment
    p 4 5
    0 1
    1 2
    ...

A repeated ``u v`` line is a parallel edge (at most two copies).

Embedding documents::

    order: 0 2 1 3
    page 0 1 bottom
    page 1 2 top
    cycle: 0 1 2 3
    aug: 1 3

Every section is optional; a book embedding has ``order`` and ``page``
lines, a subhamiltonian cycle has ``cycle`` and ``aug`` lines. Page lines
appear in edge-id order, so parallel edges are matched to edge ids by their
order of appearance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError
from .verify import BOTTOM, TOP, BookEmbedding, SubhamCycle


class DocumentError(GraphError):
    """Malformed document; ``line`` is 1-based (0 when the error is not tied to a line)."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line else message)


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield no, s


def _ints(tokens, no: int) -> list[int]:
    try:
        out = [int(t) for t in tokens]
    except ValueError:
        raise DocumentError(no, f"expected integers, got {' '.join(tokens)!r}") from None
    if any(x < 0 for x in out):
        raise DocumentError(no, "negative index")
    return out


# ---------------------------------------------------------------- edge lists

def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise DocumentError(0, "empty document, expected header 'p <n> <m>'")
    no, head = lines[0]
    tok = head.split()
    if len(tok) != 3 or tok[0] != "p":
        raise DocumentError(no, f"malformed header {head!r}, expected 'p <n> <m>'")
    n, m = _ints(tok[1:], no)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else no)
        raise DocumentError(where, f"header announces {m} edges, document has {len(body)}")
    g = Graph(n)
    seen: dict[tuple[int, int], int] = {}
    for no, s in body:
        tok = s.split()
        if len(tok) != 2:
            raise DocumentError(no, f"expected '<u> <v>', got {s!r}")
        u, v = _ints(tok, no)
        if u >= n or v >= n:
            raise DocumentError(no, f"vertex index {max(u, v)} out of range for n={n}")
        if u == v:
            raise DocumentError(no, f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        seen[key] = seen.get(key, 0) + 1
        if seen[key] > 2:
            raise DocumentError(no, f"edge {u} {v} has multiplicity above 2")
        g.add_edge(u, v)
    return g


def serialize_edge_list(g: Graph) -> str:
    if g.vertices != list(range(g.n)):
        raise GraphError("edge lists need vertices numbered 0..n-1")
    out = [f"p {g.n} {g.m}"]
    out += [f"{u} {v}" for _, (u, v) in sorted(g.edges.items())]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- embedding documents

@dataclass
class EmbeddingDocument:
    order: list[int] | None = None
    pages: list[tuple[int, int, str]] = field(default_factory=list)
    cycle: list[int] | None = None
    aug: list[tuple[int, int]] = field(default_factory=list)

    # -- conversions
    @classmethod
    def from_book(cls, g: Graph, be: BookEmbedding) -> "EmbeddingDocument":
        return cls(order=list(be.order),
                   pages=[(*g.edges[e], be.pages[e]) for e in sorted(g.edges)])

    @classmethod
    def from_cycle(cls, h: SubhamCycle) -> "EmbeddingDocument":
        return cls(cycle=list(h.cycle), aug=[tuple(p) for p in h.aug])

    def to_book(self, g: Graph) -> BookEmbedding:
        """Match page lines to edge ids of ``g``; parallel edges in id order."""
        if self.order is None:
            raise DocumentError(0, "document has no 'order:' line")
        free: dict[tuple[int, int], list[int]] = {}
        for e in sorted(g.edges, reverse=True):
            u, v = g.edges[e]
            free.setdefault((min(u, v), max(u, v)), []).append(e)
        pages = {}
        for u, v, p in self.pages:
            ids = free.get((min(u, v), max(u, v)))
            if not ids:
                raise DocumentError(0, f"page line for {u} {v} matches no remaining edge")
            pages[ids.pop()] = p
        return BookEmbedding(list(self.order), pages)

    def to_cycle(self) -> SubhamCycle:
        if self.cycle is None:
            raise DocumentError(0, "document has no 'cycle:' line")
        return SubhamCycle(list(self.cycle), list(self.aug))


def parse_embedding(text: str) -> EmbeddingDocument:
    doc = EmbeddingDocument()
    for no, s in _content_lines(text):
        head, *tok = s.split()
        key = head.removesuffix(":")
        if key == "order":
            if doc.order is not None:
                raise DocumentError(no, "second 'order:' line")
            doc.order = _ints(tok, no)
        elif key == "cycle":
            if doc.cycle is not None:
                raise DocumentError(no, "second 'cycle:' line")
            doc.cycle = _ints(tok, no)
        elif key == "page":
            if len(tok) != 3 or tok[2] not in (TOP, BOTTOM):
                raise DocumentError(no, f"expected 'page <u> <v> <top|bottom>', got {s!r}")
            u, v = _ints(tok[:2], no)
            doc.pages.append((u, v, tok[2]))
        elif key == "aug":
            if len(tok) != 2:
                raise DocumentError(no, f"expected 'aug: <u> <v>', got {s!r}")
            u, v = _ints(tok, no)
            doc.aug.append((u, v))
        else:
            raise DocumentError(no, f"unknown line {s!r}")
    return doc


def serialize_embedding(doc: EmbeddingDocument) -> str:
    out = []
    if doc.order is not None:
        out.append(" ".join(["order:", *map(str, doc.order)]))
    out += [f"page {u} {v} {p}" for u, v, p in doc.pages]
    if doc.cycle is not None:
        out.append(" ".join(["cycle:", *map(str, doc.cycle)]))
    out += [f"aug: {u} {v}" for u, v in doc.aug]
    return "\n".join(out) + "\n"
