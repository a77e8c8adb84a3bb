"""Finite disk covers of compact scenes and disjoint neighborhoods of two compacta."""

from __future__ import annotations

import math

import numpy as np

from ..errors import DisjointnessError, DomainError
from .distance import nearest_points, polygon_vertices, set_distance
from .raster import rasterize
from .scene import Annulus, Disk, Frame, Polygon, Rect, Scene


def lattice_cells(k: Scene, pitch: float):
    """Indices ``(iy, ix)`` of the closed ``pitch``-lattice squares meeting ``k``.

    The lattice is anchored at the origin: square ``(iy, ix)`` is
    ``[ix*pitch, (ix+1)*pitch] x [iy*pitch, (iy+1)*pitch]``.
    """
    x0, y0, x1, y1 = k.bbox()
    ix0 = math.floor(x0 / pitch) - 3
    iy0 = math.floor(y0 / pitch) - 3
    nx = max(math.ceil(x1 / pitch) + 3 - ix0, 5)
    ny = max(math.ceil(y1 / pitch) + 3 - iy0, 5)
    frame = Frame(ix0 * pitch, iy0 * pitch, (ix0 + nx) * pitch, (iy0 + ny) * pitch, pitch)
    grid = rasterize(k, frame, "outer")
    iy, ix = np.nonzero(grid.occupancy)
    return iy + iy0, ix + ix0


def ball_cover(k: Scene, eps: float) -> list[Disk]:
    """Disks of radius ``eps`` whose union contains ``k`` and lies within ``eps`` of it.

    One disk per (eps/2)-lattice square meeting ``k``, centered at the point of
    ``k`` nearest to the square's center. That point is within half a diagonal
    of the center, so the disk still covers the whole square.
    """
    if not eps > 0:
        raise DomainError("eps must be positive")
    if k.is_empty:
        return []
    pitch = eps / 2
    iy, ix = lattice_cells(k, pitch)
    cx = (ix + 0.5) * pitch
    cy = (iy + 0.5) * pitch
    px, py = nearest_points(cx, cy, k)
    seen = set()
    disks = []
    for x, y in zip(px.tolist(), py.tolist()):
        if (x, y) in seen:
            continue
        seen.add((x, y))
        disks.append(Disk(x, y, eps))
    return disks


def dilate(scene: Scene, delta: float, closed: bool = False) -> Scene:
    """Minkowski sum of the scene with the closed ``delta``-disk, as primitives.

    Disks and annuli dilate exactly; a polygon becomes itself plus one quad per
    edge and one disk per vertex, which is again exact.
    """
    out = []
    for prim in scene.primitives:
        if isinstance(prim, Disk):
            out.append(Disk(prim.cx, prim.cy, prim.r + delta))
        elif isinstance(prim, Annulus):
            if prim.r_in - delta > 0:
                out.append(Annulus(prim.cx, prim.cy, prim.r_in - delta, prim.r_out + delta))
            else:
                out.append(Disk(prim.cx, prim.cy, prim.r_out + delta))
        elif isinstance(prim, Rect):
            out.append(Rect(prim.xmin - delta, prim.ymin, prim.xmax + delta, prim.ymax))
            out.append(Rect(prim.xmin, prim.ymin - delta, prim.xmax, prim.ymax + delta))
            for x, y in prim.vertices():
                out.append(Disk(x, y, delta))
        else:
            verts = polygon_vertices(prim)
            out.append(prim)
            n = len(verts)
            for i in range(n):
                a, b = verts[i], verts[(i + 1) % n]
                length = math.hypot(b[0] - a[0], b[1] - a[1])
                nx_, ny_ = (b[1] - a[1]) / length * delta, -(b[0] - a[0]) / length * delta
                out.append(
                    Polygon(
                        (
                            (a[0] - nx_, a[1] - ny_),
                            (b[0] - nx_, b[1] - ny_),
                            (b[0] + nx_, b[1] + ny_),
                            (a[0] + nx_, a[1] + ny_),
                        )
                    )
                )
                out.append(Disk(a[0], a[1], delta))
    return Scene(tuple(out), closed=closed)


def separate(k: Scene, l: Scene):
    """Open disjoint neighborhoods ``(A1, A2)`` of ``k`` and ``l`` (dilation by d/3)."""
    d = set_distance(k, l)
    if d <= 0:
        raise DisjointnessError("sets touch or overlap; no separating neighborhoods exist")
    return dilate(k, d / 3), dilate(l, d / 3)
