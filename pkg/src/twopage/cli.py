"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 input contract violation,
3 internal invariant violation. Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import frame, subham
from .bench import bench_family, rows_to_csv, sized_graphs
from .formats import (EmbeddingDocument, parse_edge_list, parse_embedding, serialize_edge_list,
                      serialize_embedding)
from .generators import FAMILIES, gen_corpus
from .graph import GraphError
from .verify import oracle_two_page, verify_book_embedding, verify_subhamiltonian

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class VerificationFailed(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report(rep, what: str) -> None:
    if not rep.ok:
        print(rep.summary())
        raise VerificationFailed(f"{what} failed verification")


# ---------------------------------------------------------------- commands

def cmd_embed(a) -> None:
    from .embedder import embed_two_page

    g = parse_edge_list(_read(a.input))
    be = embed_two_page(g, audit=a.audit)
    rep = verify_book_embedding(g, be)
    if not rep.ok:  # our own output must verify; anything else is a bug
        raise frame.InvariantError("embedder output failed verification: " + rep.summary())
    _emit(serialize_embedding(EmbeddingDocument.from_book(g, be)), a.output)


def cmd_subham(a) -> None:
    g = parse_edge_list(_read(a.input))
    h = subham.subham_triconnected(g)
    rep = verify_subhamiltonian(g, h)
    if not rep.ok:
        raise subham.InvariantError("subhamiltonian cycle failed verification: " + rep.summary())
    _emit(serialize_embedding(EmbeddingDocument.from_cycle(h)), a.output)


def cmd_verify(a) -> None:
    g = parse_edge_list(_read(a.graph))
    doc = parse_embedding(_read(a.embedding))
    if doc.order is None and doc.cycle is None:
        raise GraphError("embedding document has neither 'order:' nor 'cycle:'")
    if doc.order is not None:
        _report(verify_book_embedding(g, doc.to_book(g)), "book embedding")
    if doc.cycle is not None:
        _report(verify_subhamiltonian(g, doc.to_cycle()), "subhamiltonian cycle")
    print("ok")


def cmd_oracle(a) -> None:
    g = parse_edge_list(_read(a.graph))
    be = oracle_two_page(g, n_cap=a.cap)
    if be is None:
        print("none")
        raise VerificationFailed("no two-page embedding exists")
    _emit(serialize_embedding(EmbeddingDocument.from_book(g, be)), a.output)


def cmd_gen(a) -> None:
    params = {k: v for k, v in (("n", a.n), ("n_min", a.n_min), ("rows", a.rows), ("cols", a.cols),
                                ("k", a.k), ("count", a.count)) if v is not None}
    graphs = list(gen_corpus(a.family, params, seed=a.seed))
    if a.output is None:
        if len(graphs) != 1:
            raise GraphError(f"{len(graphs)} graphs generated; pass -o DIR to write them all")
        sys.stdout.write(serialize_edge_list(graphs[0]))
        return
    if len(graphs) == 1 and not Path(a.output).is_dir():
        Path(a.output).write_text(serialize_edge_list(graphs[0]))
        return
    d = Path(a.output)
    d.mkdir(parents=True, exist_ok=True)
    for i, g in enumerate(graphs):
        (d / f"{a.family}_{i:05d}.txt").write_text(serialize_edge_list(g))
    print(f"wrote {len(graphs)} graphs to {d}", file=sys.stderr)


def cmd_render(a) -> None:
    from .render import render_svg

    g = parse_edge_list(_read(a.graph))
    doc = parse_embedding(_read(a.embedding))
    emb = doc.to_book(g) if doc.order is not None else doc.to_cycle()
    _emit(render_svg(g, emb, title=Path(a.graph).name if a.graph != "-" else None), a.output)


def cmd_bench(a) -> None:
    for s in a.sizes:
        if s < 1:
            raise GraphError(f"size {s} must be positive")
    sized_graphs(a.family, a.sizes[0], a.seed)  # reject unknown families before timing anything
    rows = bench_family(a.family, a.sizes, seed=a.seed, op=a.op, repeat=a.repeat)
    _emit(rows_to_csv(rows), a.output)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twopage", description="Two-page book embeddings of 4-planar graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("embed", help="two-page book embedding of a planar graph with max degree 4")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.add_argument("--audit", action="store_true", help="check every frame while building")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("subham", help="subhamiltonian cycle of a triconnected 4-planar graph")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_subham)

    s = sub.add_parser("verify", help="check an embedding or cycle document against a graph")
    s.add_argument("graph")
    s.add_argument("embedding")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="exhaustive two-page embedding search (small graphs)")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.add_argument("--cap", type=int, default=9, help="largest vertex count to search")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="generate graphs of a family as edge lists")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--seed", type=int, required=True)
    for name in ("n", "n-min", "rows", "cols", "k", "count"):
        s.add_argument(f"--{name}", type=int)
    s.add_argument("-o", "--output", help="file (single graph) or directory")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("render", help="SVG arc diagram of an embedding or cycle")
    s.add_argument("graph")
    s.add_argument("embedding")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("bench", help="wall-time CSV (family,n,m,millis) over sizes")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--sizes", type=int, nargs="+", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--op", choices=("embed", "subham"), default="embed")
    s.add_argument("--repeat", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        a.func(a)
    except VerificationFailed as exc:
        print(f"twopage: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except GraphError as exc:
        print(f"twopage: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (frame.InvariantError, subham.InvariantError) as exc:
        print(f"twopage: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
