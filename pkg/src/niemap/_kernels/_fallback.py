"""Pure Python + numpy fallback for the compiled geometry kernels.

Same contracts as niemap._kernels._core: ties broken by lowest index,
distances are plain coordinate-wise squared differences summed in axis
order.
"""

import heapq

import numpy as np


def backend_name():
    return "fallback"


def farthest_point_sampling(pts, m, seed_index):
    n = pts.shape[0]
    selected = np.empty(m, dtype=np.int64)
    selected[0] = seed_index
    best = np.full(n, np.inf)
    cur = seed_index
    for i in range(1, m):
        d = ((pts - pts[cur]) ** 2).sum(axis=1)
        np.minimum(best, d, out=best)
        cur = int(np.argmax(best))
        selected[i] = cur
    return selected


def knn(query, ref, k, exclude_self, chunk=512):
    nq = query.shape[0]
    out = np.empty((nq, k), dtype=np.int64)
    for start in range(0, nq, chunk):
        stop = min(start + chunk, nq)
        d = ((query[start:stop, None, :] - ref[None, :, :]) ** 2).sum(axis=-1)
        if exclude_self:
            rows = np.arange(start, stop)
            inside = rows < ref.shape[0]
            d[np.arange(stop - start)[inside], rows[inside]] = np.inf
        order = np.argsort(d, axis=1, kind="stable")
        out[start:stop] = order[:, :k]
    return out


def _dijkstra_one(indptr, indices, weights, n, src):
    dist = np.full(n, np.inf)
    dist[src] = 0.0
    heap = [(0.0, src)]
    while heap:
        du, u = heapq.heappop(heap)
        if du > dist[u]:
            continue
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            cand = du + weights[e]
            if cand < dist[v]:
                dist[v] = cand
                heapq.heappush(heap, (cand, v))
    return dist


def dijkstra_all_pairs(indptr, indices, weights, n):
    out = np.empty((n, n))
    for src in range(n):
        out[src] = _dijkstra_one(indptr, indices, weights, n, src)
    return out
