"""Barycentric-to-plane projection for 3-coordinate probability vectors.

The target triangle is equilateral and centered on the origin, with corners

    c1 = (-1, -H), c2 = (1, -H), c3 = (0, 2H),  H = sqrt(3)/3.

This placement makes the two checks the plots rely on exact in floating
point, not merely close: (1/3, 1/3, 1/3) lands on (0, 0), the centroid of
the rendered triangle, and each unit vector lands on its corner bit for bit.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError

H = np.sqrt(3.0) / 3.0
CORNERS = ((-1.0, -H), (1.0, -H), (0.0, 2.0 * H))


def project(p) -> tuple[float, float]:
    """Map one barycentric triple to plane coordinates."""
    arr = np.asarray(p, dtype=float).reshape(-1)
    if arr.size != 3:
        raise DimensionError(f"ternary projection needs 3 coordinates, got {arr.size}")
    # plane_x/plane_y are the corner-weighted sums, written out so the
    # arithmetic (and its exactness at the centroid and corners) is fixed
    px = arr[1] - arr[0]
    py = H * (2.0 * arr[2] - (arr[0] + arr[1]))
    return float(px), float(py)


def project_path(points) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized projection of an (m, 3) array of barycentric rows."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise DimensionError(f"ternary path needs an (m, 3) array, got shape {pts.shape}")
    px = pts[:, 1] - pts[:, 0]
    py = H * (2.0 * pts[:, 2] - (pts[:, 0] + pts[:, 1]))
    return px, py
