"""Compare the compiled spine kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [edges ...]
"""

import sys

from twopage.bench import kernel_benchmark


def main(argv):
    sizes = [int(a) for a in argv] or [200, 400, 800]
    print("edges,python_ms,cython_ms,speedup")
    for m in sizes:
        res = kernel_benchmark(m=m, repeat=5)
        py, cy = res["python"], res.get("cython")
        if cy is None:
            print(f"{m},{py:.2f},,")
        else:
            print(f"{m},{py:.2f},{cy:.2f},{py / cy:.1f}")


if __name__ == "__main__":
    main(sys.argv[1:])
