"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from eccspec import graph as g
from eccspec import kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = {"python": kernels.python_backend}
    if kernels.compiled_backend is not None:
        backends["cython"] = kernels.compiled_backend
    else:
        print("compiled backend not built; timing the fallback only")

    rng = np.random.default_rng(0)
    cases = []
    for n in (6, 30, 100):
        a = rng.integers(-5, 6, size=(n, n)).astype(float)
        a = a + a.T
        repeat = args.repeat if n < 100 else 1
        cases.append((f"jacobi n={n}", lambda a=a, b=None: b.jacobi_eigh(a, 1e-12, 100, True), repeat))
    for G, label in ((g.petersen(), "bfs petersen"), (g.circulant(200, 1, 7), "bfs circulant n=200")):
        A = G.adjacency_array
        cases.append((label, lambda A=A, b=None: b.all_pairs_bfs(A), args.repeat))

    print(f"{'case':<22}" + "".join(f"{name:>14}" for name in backends) + ("     speedup" if len(backends) == 2 else ""))
    for label, fn, repeat in cases:
        row = {name: best_of(lambda: fn(b=backend), repeat) for name, backend in backends.items()}
        line = f"{label:<22}" + "".join(f"{row[name] * 1e3:>12.3f}ms" for name in backends)
        if len(row) == 2:
            line += f"{row['python'] / row['cython']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
