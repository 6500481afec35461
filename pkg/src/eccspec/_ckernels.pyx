# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops: cyclic Jacobi eigensolver and all-pairs BFS.

Behaviour must match :mod:`eccspec._pykernels` exactly; that module is the
fallback when this extension is not built.
"""

import numpy as np

from libc.math cimport fabs, sqrt


cdef double _offdiag_norm(double[:, ::1] a, Py_ssize_t n) nogil:
    cdef double s = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i, j] * a[i, j]
    return sqrt(s)


def jacobi_eigh(a_in, double tol, int max_sweeps, bint want_vectors):
    """Eigen-decompose a real symmetric matrix by cyclic Jacobi rotations.

    Returns ``(values, vectors, sweeps, off)`` with values in the order they
    sit on the final diagonal (unsorted), eigenvectors as columns (or None),
    the number of sweeps used and the final off-diagonal Frobenius norm.
    Raises RuntimeError if ``off > tol * ||A||_F`` after ``max_sweeps``.
    """
    cdef double[:, ::1] a = np.array(a_in, dtype=np.float64, order="C", copy=True)
    cdef Py_ssize_t n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("matrix must be square")
    v_arr = np.eye(n, dtype=np.float64) if want_vectors else np.zeros((1, 1))
    cdef double[:, ::1] v = v_arr
    cdef double norm = 0.0, off, apq, app, aqq, theta, t, c, s, x, y
    cdef Py_ssize_t i, j, p, q, k
    cdef int sweep = 0
    for i in range(n):
        for j in range(n):
            norm += a[i, j] * a[i, j]
    norm = sqrt(norm)
    with nogil:
        off = _offdiag_norm(a, n)
        while off > tol * norm and sweep < max_sweeps:
            sweep += 1
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if fabs(apq) < 1e-300:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    theta = (aqq - app) / (2.0 * apq)
                    if theta >= 0:
                        t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        x = a[k, p]
                        y = a[k, q]
                        a[k, p] = c * x - s * y
                        a[k, q] = s * x + c * y
                    for k in range(n):
                        x = a[p, k]
                        y = a[q, k]
                        a[p, k] = c * x - s * y
                        a[q, k] = s * x + c * y
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    if want_vectors:
                        for k in range(n):
                            x = v[k, p]
                            y = v[k, q]
                            v[k, p] = c * x - s * y
                            v[k, q] = s * x + c * y
            off = _offdiag_norm(a, n)
    if off > tol * norm:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps (off={off:.3e})")
    values = np.array([a[i, i] for i in range(n)], dtype=np.float64)
    return values, (v_arr if want_vectors else None), sweep, off


def all_pairs_bfs(adj_in):
    """Hop distances from every vertex; -1 marks unreachable pairs."""
    cdef const unsigned char[:, ::1] adj = np.ascontiguousarray(adj_in, dtype=np.uint8)
    cdef Py_ssize_t n = adj.shape[0]
    dist_arr = np.full((n, n), -1, dtype=np.int64)
    cdef long long[:, ::1] dist = dist_arr
    queue_arr = np.empty(max(n, 1), dtype=np.intp)
    cdef Py_ssize_t[::1] queue = queue_arr
    cdef Py_ssize_t src, head, tail, u, w
    with nogil:
        for src in range(n):
            dist[src, src] = 0
            queue[0] = src
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                for w in range(n):
                    if adj[u, w] and dist[src, w] < 0:
                        dist[src, w] = dist[src, u] + 1
                        queue[tail] = w
                        tail += 1
    return dist_arr
