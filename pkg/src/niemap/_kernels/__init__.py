"""Geometry kernels with a compiled core and a pure-Python fallback.

The compiled extension is preferred; set NIEMAP_NO_EXT=1 to force the
fallback (used by the parity tests and the kernel benchmark).
"""

import os

import numpy as np

from . import _fallback

if os.environ.get("NIEMAP_NO_EXT"):
    _impl = _fallback
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _fallback

BACKEND = _impl.backend_name()


def farthest_point_sampling(pts, m, seed_index):
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    return np.asarray(_impl.farthest_point_sampling(pts, int(m), int(seed_index)))


def knn(query, ref, k, exclude_self=False):
    query = np.ascontiguousarray(query, dtype=np.float64)
    ref = np.ascontiguousarray(ref, dtype=np.float64)
    return np.asarray(_impl.knn(query, ref, int(k), bool(exclude_self)))


def dijkstra_all_pairs(indptr, indices, weights, n):
    indptr = np.ascontiguousarray(indptr, dtype=np.int32)
    indices = np.ascontiguousarray(indices, dtype=np.int32)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    return np.asarray(_impl.dijkstra_all_pairs(indptr, indices, weights, int(n)))
