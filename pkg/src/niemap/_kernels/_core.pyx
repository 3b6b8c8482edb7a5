# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled geometry kernels: farthest point sampling, brute-force k-NN and
all-pairs Dijkstra over a CSR edge graph.

Mirrors niemap._kernels._fallback; both backends break distance ties by
lowest index.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY


def backend_name():
    return "compiled"


def farthest_point_sampling(double[:, ::1] pts, Py_ssize_t m, Py_ssize_t seed_index):
    cdef Py_ssize_t n = pts.shape[0]
    cdef Py_ssize_t d = pts.shape[1]
    out = np.empty(m, dtype=np.int64)
    cdef long long[::1] sel = out
    best_arr = np.full(n, np.inf)
    cdef double[::1] best = best_arr
    cdef Py_ssize_t i, j, c, cur, nxt
    cdef double dist, diff, bestval

    cur = seed_index
    sel[0] = cur
    with nogil:
        for i in range(1, m):
            bestval = -1.0
            nxt = 0
            for j in range(n):
                dist = 0.0
                for c in range(d):
                    diff = pts[j, c] - pts[cur, c]
                    dist += diff * diff
                if dist < best[j]:
                    best[j] = dist
                if best[j] > bestval:
                    bestval = best[j]
                    nxt = j
            sel[i] = nxt
            cur = nxt
    return out


def knn(double[:, ::1] query, double[:, ::1] ref, Py_ssize_t k, bint exclude_self):
    """k nearest reference rows per query row, ascending distance.

    exclude_self skips reference index j == query row i, which is only
    meaningful when query and ref are the same point set in the same order.
    """
    cdef Py_ssize_t nq = query.shape[0]
    cdef Py_ssize_t nr = ref.shape[0]
    cdef Py_ssize_t d = query.shape[1]
    out = np.empty((nq, k), dtype=np.int64)
    cdef long long[:, ::1] idx = out
    kd_arr = np.empty(k)
    ki_arr = np.empty(k, dtype=np.int64)
    cdef double[::1] kd = kd_arr
    cdef long long[::1] ki = ki_arr
    cdef Py_ssize_t i, j, c, p, cnt
    cdef double dist, diff

    with nogil:
        for i in range(nq):
            cnt = 0
            for j in range(nr):
                if exclude_self and j == i:
                    continue
                dist = 0.0
                for c in range(d):
                    diff = query[i, c] - ref[j, c]
                    dist += diff * diff
                if cnt < k:
                    p = cnt
                    while p > 0 and kd[p - 1] > dist:
                        kd[p] = kd[p - 1]
                        ki[p] = ki[p - 1]
                        p -= 1
                    kd[p] = dist
                    ki[p] = j
                    cnt += 1
                elif dist < kd[k - 1]:
                    p = k - 1
                    while p > 0 and kd[p - 1] > dist:
                        kd[p] = kd[p - 1]
                        ki[p] = ki[p - 1]
                        p -= 1
                    kd[p] = dist
                    ki[p] = j
            for p in range(k):
                idx[i, p] = ki[p]
    return out


cdef void _dijkstra_one(const int[::1] indptr, const int[::1] indices,
                        const double[::1] weights, Py_ssize_t n, Py_ssize_t src,
                        double[::1] dist, long long[::1] heap,
                        long long[::1] pos) nogil:
    # Binary min-heap with decrease-key; pos[v] is v's slot or -1 once popped.
    cdef Py_ssize_t size, v, u, child, parent, hole, e
    cdef double dv, cand

    for v in range(n):
        dist[v] = INFINITY
        pos[v] = -1
    dist[src] = 0.0
    heap[0] = src
    pos[src] = 0
    size = 1

    while size > 0:
        u = heap[0]
        pos[u] = -1
        size -= 1
        if size > 0:
            # sift the last element down from the root
            v = heap[size]
            hole = 0
            while True:
                child = 2 * hole + 1
                if child >= size:
                    break
                if child + 1 < size and dist[heap[child + 1]] < dist[heap[child]]:
                    child += 1
                if dist[heap[child]] < dist[v]:
                    heap[hole] = heap[child]
                    pos[heap[hole]] = hole
                    hole = child
                else:
                    break
            heap[hole] = v
            pos[v] = hole

        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            cand = dist[u] + weights[e]
            if cand < dist[v]:
                dist[v] = cand
                if pos[v] == -1:
                    hole = size
                    size += 1
                else:
                    hole = pos[v]
                # sift up
                while hole > 0:
                    parent = (hole - 1) // 2
                    if dist[heap[parent]] > cand:
                        heap[hole] = heap[parent]
                        pos[heap[hole]] = hole
                        hole = parent
                    else:
                        break
                heap[hole] = v
                pos[v] = hole


def dijkstra_all_pairs(int[::1] indptr, int[::1] indices, double[::1] weights,
                       Py_ssize_t n):
    out = np.empty((n, n))
    cdef double[:, ::1] dmat = out
    heap_arr = np.empty(n, dtype=np.int64)
    pos_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] heap = heap_arr
    cdef long long[::1] pos = pos_arr
    cdef Py_ssize_t src
    with nogil:
        for src in range(n):
            _dijkstra_one(indptr, indices, weights, n, src, dmat[src], heap, pos)
    return out
