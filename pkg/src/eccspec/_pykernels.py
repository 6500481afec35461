"""Pure-Python versions of the compiled kernels in ``_ckernels.pyx``.

Same algorithms, same rotation order and stopping rule, so both backends
agree to rounding.
"""

from __future__ import annotations

import math

import numpy as np


def _offdiag_norm(a: list[list[float]]) -> float:
    n = len(a)
    return math.sqrt(sum(a[i][j] * a[i][j] for i in range(n) for j in range(n) if i != j))


def jacobi_eigh(a_in, tol: float, max_sweeps: int, want_vectors: bool):
    a = np.array(a_in, dtype=np.float64).tolist()
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)] if want_vectors else None
    norm = math.sqrt(sum(x * x for row in a for x in row))
    off = _offdiag_norm(a)
    sweep = 0
    while off > tol * norm and sweep < max_sweeps:
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for row in a:
                    x = row[p]
                    y = row[q]
                    row[p] = c * x - s * y
                    row[q] = s * x + c * y
                rp, rq = a[p], a[q]
                a[p] = [c * x - s * y for x, y in zip(rp, rq)]
                a[q] = [s * x + c * y for x, y in zip(rp, rq)]
                a[p][q] = 0.0
                a[q][p] = 0.0
                if v is not None:
                    for row in v:
                        x = row[p]
                        y = row[q]
                        row[p] = c * x - s * y
                        row[q] = s * x + c * y
        off = _offdiag_norm(a)
    if off > tol * norm:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps (off={off:.3e})")
    values = np.array([a[i][i] for i in range(n)], dtype=np.float64)
    vectors = np.array(v, dtype=np.float64).reshape(n, n) if v is not None else None
    return values, vectors, sweep, off


def all_pairs_bfs(adj_in) -> np.ndarray:
    adj = np.asarray(adj_in)
    n = adj.shape[0]
    rows = [0] * n
    for u, w in zip(*np.nonzero(adj)):
        rows[int(u)] |= 1 << int(w)
    dist = [[-1] * n for _ in range(n)]
    for src in range(n):
        drow = dist[src]
        drow[src] = 0
        seen = frontier = 1 << src
        level = 0
        while frontier:
            level += 1
            nxt = 0
            x = frontier
            while x:
                low = x & -x
                nxt |= rows[low.bit_length() - 1]
                x ^= low
            frontier = nxt & ~seen
            seen |= frontier
            x = frontier
            while x:
                low = x & -x
                drow[low.bit_length() - 1] = level
                x ^= low
    return np.array(dist, dtype=np.int64).reshape(n, n)
