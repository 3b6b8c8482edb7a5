"""Shape containers: point clouds, triangle meshes, geodesic matrices and
neighbor index tables, plus unit-area normalization.

All geometry downstream of data generation lives in unit-area scale: meshes
are rescaled so their total surface area is 1 and the matching clouds carry
the applied scale factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..errors import DataError

# absolute tolerance for treating two points as coincident
DEDUP_TOL = 1e-9


@dataclass
class PointCloud:
    """n x 3 point positions with the unit-area scale factor applied to them."""

    positions: np.ndarray
    scale_factor: float = 1.0
    source_id: str = ""

    def __post_init__(self):
        self.positions = np.asarray(self.positions, dtype=np.float64)
        if self.positions.ndim != 2 or self.positions.shape[1] != 3:
            raise DataError(f"positions must be n x 3, got {self.positions.shape}")
        if self.positions.shape[0] < 4:
            raise DataError("point cloud needs at least 4 points")
        if not np.isfinite(self.positions).all():
            raise DataError("non-finite coordinates in point cloud")
        if self.scale_factor <= 0:
            raise DataError("scale factor must be positive")

    @property
    def n(self) -> int:
        return self.positions.shape[0]

    def bbox_diagonal(self) -> float:
        ext = self.positions.max(axis=0) - self.positions.min(axis=0)
        return float(np.sqrt((ext**2).sum()))

    def centroid(self) -> np.ndarray:
        return self.positions.mean(axis=0)


def deduplicate(cloud: PointCloud) -> tuple[PointCloud, np.ndarray]:
    """Drop points that coincide with an earlier point within DEDUP_TOL.

    Returns the cleaned cloud and the kept indices into the input.
    """
    pos = cloud.positions
    quant = np.round(pos / DEDUP_TOL).astype(np.int64)
    _, first = np.unique(quant, axis=0, return_index=True)
    kept = np.sort(first)
    if kept.size < 4:
        raise DataError("fewer than 4 distinct points after deduplication")
    out = replace(cloud, positions=pos[kept])
    return out, kept


@dataclass
class TriangleMesh:
    vertices: np.ndarray
    triangles: np.ndarray
    total_area: float = field(init=False)

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=np.float64)
        self.triangles = np.asarray(self.triangles, dtype=np.int64)
        if self.vertices.ndim != 2 or self.vertices.shape[1] != 3:
            raise DataError(f"vertices must be n x 3, got {self.vertices.shape}")
        if self.triangles.ndim != 2 or self.triangles.shape[1] != 3:
            raise DataError(f"triangles must be t x 3, got {self.triangles.shape}")
        if not np.isfinite(self.vertices).all():
            raise DataError("non-finite mesh vertices")
        n = self.vertices.shape[0]
        if self.triangles.min(initial=0) < 0 or self.triangles.max(initial=-1) >= n:
            raise DataError("triangle index out of range")
        areas = self.triangle_areas()
        if (areas <= 1e-12).any():
            raise DataError("degenerate triangle (area <= 1e-12)")
        self.total_area = float(areas.sum())

    @property
    def n(self) -> int:
        return self.vertices.shape[0]

    def triangle_areas(self) -> np.ndarray:
        a = self.vertices[self.triangles[:, 0]]
        b = self.vertices[self.triangles[:, 1]]
        c = self.vertices[self.triangles[:, 2]]
        cross = np.cross(b - a, c - a)
        return 0.5 * np.sqrt((cross**2).sum(axis=1))


@dataclass
class GeodesicMatrix:
    """Dense symmetric pairwise geodesic distances; +inf marks unreachable."""

    dist: np.ndarray

    def __post_init__(self):
        self.dist = np.asarray(self.dist, dtype=np.float64)
        n = self.dist.shape[0]
        if self.dist.ndim != 2 or self.dist.shape[1] != n:
            raise DataError("geodesic matrix must be square")

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def validate(self, check_triangle: bool = False):
        d = self.dist
        if np.isnan(d).any():
            raise DataError("NaN in geodesic matrix")
        finite = np.isfinite(d)
        if (d[finite] < 0).any():
            raise DataError("negative geodesic distance")
        if not np.allclose(np.diag(d), 0.0, atol=1e-12):
            raise DataError("nonzero diagonal")
        if np.abs(np.where(finite & finite.T, d - d.T, 0.0)).max() > 1e-9:
            raise DataError("asymmetric geodesic matrix")
        if check_triangle:
            # O(n^3); only sensible on small exact instances
            for k in range(self.n):
                via = d[:, k][:, None] + d[k, :][None, :]
                if (d > via + 1e-6).any():
                    raise DataError("triangle inequality violated")

    def restricted(self, idx: np.ndarray) -> "GeodesicMatrix":
        return GeodesicMatrix(self.dist[np.ix_(idx, idx)])


def finite_for_loss(geo: GeodesicMatrix) -> np.ndarray:
    """Distance matrix with +inf (disconnected pairs) replaced by a finite
    stand-in, 1.5x the largest finite entry, so losses stay well defined."""
    d = geo.dist
    if np.isfinite(d).all():
        return d.copy()
    finite = np.isfinite(d)
    if not finite.any():
        raise DataError("geodesic matrix has no finite entries")
    cap = d[finite].max() * 1.5
    return np.where(finite, d, cap)


@dataclass
class NeighborIndex:
    """Row p lists the K assigned neighbor indices of point p."""

    indices: np.ndarray

    def __post_init__(self):
        self.indices = np.asarray(self.indices, dtype=np.int64)
        if self.indices.ndim != 2:
            raise DataError("neighbor index must be 2-d")

    @property
    def k(self) -> int:
        return self.indices.shape[1]


def normalize_unit_area(
    mesh: TriangleMesh, cloud: PointCloud
) -> tuple[TriangleMesh, PointCloud]:
    """Rescale mesh and cloud together so the mesh surface area is 1."""
    area = mesh.total_area
    if area <= 0:
        raise DataError("cannot normalize zero-area mesh")
    scale = 1.0 / np.sqrt(area)
    out_mesh = TriangleMesh(mesh.vertices * scale, mesh.triangles)
    out_cloud = replace(
        cloud,
        positions=cloud.positions * scale,
        scale_factor=cloud.scale_factor * scale,
    )
    return out_mesh, out_cloud
