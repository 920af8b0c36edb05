"""Timing harness: per-family wall times and the compiled-vs-Python kernel comparison."""

from __future__ import annotations

import csv
import io
import math
import random
import time
from dataclasses import dataclass

from . import _kernels_py, generators
from .graph import Graph, GraphError

CSV_FIELDS = ("family", "n", "m", "millis")


def sized_graphs(family: str, size: int, seed: int = 0) -> list[Graph]:
    """Graphs of one family at one size parameter.

    ``size`` is the vertex count for grids (nearly square) and random graphs,
    the triangle count for prism stacks and gadget chains, and the exact
    vertex count for the exhaustive family (every graph of that order).
    """
    if family == "grid":
        rows = max(1, math.isqrt(size))
        return [generators.grid(rows, max(1, size // rows))]
    if family == "prism_stack":
        return [generators.prism_stack(size)]
    if family == "gadget_chain":
        return [generators.gadget_chain(size)]
    if family == "random_4planar":
        return [generators.random_4planar(size, seed)]
    if family == "enumerate_small":
        return list(generators.enumerate_small(size, size))
    raise GraphError(f"unknown family {family!r}")


def _operation(op: str):
    if op == "embed":
        from .embedder import embed_two_page
        return embed_two_page
    if op == "subham":
        from .subham import subham_triconnected
        return subham_triconnected
    raise GraphError(f"unknown operation {op!r}")


@dataclass
class BenchRow:
    family: str
    n: int
    m: int
    millis: float


def bench_family(family: str, sizes, seed: int = 0, op: str = "embed", repeat: int = 1) -> list[BenchRow]:
    """Best-of-``repeat`` wall time of ``op`` per size (summed over the graphs of that size)."""
    fn = _operation(op)
    rows = []
    for size in sizes:
        graphs = sized_graphs(family, size, seed)
        best = math.inf
        for _ in range(max(1, repeat)):
            t0 = time.perf_counter()
            for g in graphs:
                fn(g)
            best = min(best, time.perf_counter() - t0)
        rows.append(BenchRow(family, sum(g.n for g in graphs), sum(g.m for g in graphs), best * 1000.0))
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow((r.family, r.n, r.m, f"{r.millis:.3f}"))
    return buf.getvalue()


# ---------------------------------------------------------------- kernels

def _kernel_input(n: int, m: int, seed: int):
    rng = random.Random(seed)
    pos = list(range(n))
    rng.shuffle(pos)
    eu, ev = [], []
    while len(eu) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            eu.append(u)
            ev.append(v)
    page = [rng.randrange(2) for _ in range(m)]
    return {v: p for v, p in enumerate(pos)}, eu, ev, page


def kernel_benchmark(m: int = 600, repeat: int = 5, seed: int = 0) -> dict[str, float]:
    """Best time in milliseconds of ``crossing_pairs`` per backend on one random spine instance."""
    impls = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]
        impls["cython"] = _kernels
    except ImportError:
        pass
    pos, eu, ev, page = _kernel_input(m, m, seed)
    out = {}
    ref = None
    for name, mod in impls.items():
        best = math.inf
        for _ in range(repeat):
            t0 = time.perf_counter()
            res = mod.crossing_pairs(pos, eu, ev, page)
            best = min(best, time.perf_counter() - t0)
        if ref is None:
            ref = sorted(res)
        elif sorted(res) != ref:
            raise RuntimeError(f"{name} kernel disagrees with the Python reference")
        out[name] = best * 1000.0
    return out
