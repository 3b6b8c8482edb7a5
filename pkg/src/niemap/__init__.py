"""niemap: geodesic-preserving point cloud embeddings and correspondence.

Learns a per-point embedding whose Euclidean row distances approximate
surface geodesics, then learns descriptors on top of it and recovers
point-wise maps between near-isometric point clouds through functional-map
algebra.
"""

from ._kernels import BACKEND as kernel_backend

__version__ = "0.1.0"

__all__ = ["kernel_backend", "__version__"]
