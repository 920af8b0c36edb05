import random

import pytest

from twopage import _kernels_py, kernels

try:
    from twopage import _kernels as compiled
except ImportError:  # pragma: no cover - depends on the build
    compiled = None


def _instance(m, seed):
    rng = random.Random(seed)
    n = max(2, m // 2)
    pos = {v: p for v, p in enumerate(rng.sample(range(n), n))}
    eu, ev = [], []
    while len(eu) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            eu.append(u)
            ev.append(v)
    return pos, eu, ev, [rng.randrange(2) for _ in range(m)]


def test_alternation_cases():
    pos = {v: v for v in range(4)}
    assert _kernels_py.crossing_pairs(pos, [0, 1], [2, 3], [0, 0]) == [(0, 1)]
    assert _kernels_py.crossing_pairs(pos, [0, 1], [2, 3], [0, 1]) == []
    assert _kernels_py.crossing_pairs(pos, [0, 1], [3, 2], [0, 0]) == []  # nested
    assert _kernels_py.crossing_pairs(pos, [0, 0], [1, 2], [0, 0]) == []  # shared end


def test_two_colouring_of_k4_spine():
    pos = {v: v for v in range(4)}
    eu, ev = [0, 0, 0, 1, 1, 2], [1, 2, 3, 2, 3, 3]
    assert _kernels_py.two_colour_conflicts(pos, eu, ev) == [0, 0, 0, 0, 1, 0]
    # an odd conflict cycle: three mutually crossing chords of a hexagon
    pos6 = {v: v for v in range(6)}
    assert _kernels_py.two_colour_conflicts(pos6, [0, 1, 2], [3, 4, 5]) is None


@pytest.mark.skipif(compiled is None, reason="compiled kernels not built")
@pytest.mark.parametrize("seed", range(5))
def test_compiled_matches_python(seed):
    pos, eu, ev, pg = _instance(80, seed)
    assert compiled.crossing_pairs(pos, eu, ev, pg) == _kernels_py.crossing_pairs(pos, eu, ev, pg)
    assert compiled.two_colour_conflicts(pos, eu, ev) == _kernels_py.two_colour_conflicts(pos, eu, ev)


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    code = ("from twopage import kernels; from twopage.generators import grid; "
            "from twopage.embedder import embed_two_page; from twopage.verify import verify_book_embedding; "
            "g = grid(5, 5); print(kernels.BACKEND, verify_book_embedding(g, embed_two_page(g)).ok)")
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                       env=dict(os.environ, TWOPAGE_PURE="1"))
    assert r.stdout.split() == ["python", "True"], r.stderr
