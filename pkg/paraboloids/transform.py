"""
The unitary change of variables between standard-form coordinates (u, v, γ) and bilinear coordinates (x, y, γ):

    A:  x = (u − v)/√2,  y = (u + v)/√2
    Aᵀ: u = (x + y)/√2,  v = (y − x)/√2

A rotates every pair of coordinates by π/4 and fixes the γ-axis. It maps C̃_α onto C_α.
"""

import math

from .core import PointXXR

SQRT2 = math.sqrt(2.0)


def apply_A(p_uv: PointXXR) -> PointXXR:  # noqa: N802
    return PointXXR((p_uv.u - p_uv.v) / SQRT2, (p_uv.u + p_uv.v) / SQRT2, p_uv.gamma)


def apply_At(p_xy: PointXXR) -> PointXXR:  # noqa: N802
    return PointXXR((p_xy.x + p_xy.y) / SQRT2, (p_xy.y - p_xy.x) / SQRT2, p_xy.gamma)
