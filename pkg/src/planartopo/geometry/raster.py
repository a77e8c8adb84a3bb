"""Certified rasterization of scenes onto framed grids.

Outer mode over-approximates (a cell is occupied when its closed square meets the
set); inner mode under-approximates (occupied cells are contained in the set).
Ties within TAU go toward "meets" in outer mode and "not contained" in inner mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import FrameError
from .distance import boundary, boundary_distance_many, polygon_vertices, radial, scene_depth_many
from .scene import TAU, Frame, Rect, Scene

MODES = ("outer", "inner")


@dataclass(frozen=True, eq=False)
class RasterGrid:
    """Occupancy bitmask over a frame; ``occupancy[iy, ix]``.

    ``scene`` is the analytic source when known (None for masks and derived
    grids, whose cells are the set itself). ``primitive_cells`` holds one occupied
    cell per primitive (outer mode) for mapping components back to primitives.
    """

    frame: Frame
    occupancy: np.ndarray
    mode: str
    scene: Optional[Scene] = None
    primitive_cells: tuple = field(default=())

    def __post_init__(self):
        occ = np.ascontiguousarray(self.occupancy, dtype=bool)
        if occ.shape != self.frame.shape:
            raise FrameError(f"occupancy shape {occ.shape} != frame shape {self.frame.shape}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if occ[0].any() or occ[-1].any() or occ[:, 0].any() or occ[:, -1].any():
            raise FrameError("border ring of the frame must stay clear")
        occ.setflags(write=False)
        object.__setattr__(self, "occupancy", occ)

    @property
    def shape(self):
        return self.occupancy.shape

    def with_occupancy(self, occ, scene=None, primitive_cells=()) -> "RasterGrid":
        return RasterGrid(self.frame, occ, self.mode, scene, primitive_cells)


def _window(frame: Frame, bbox):
    h = frame.h
    ix0 = max(int(math.floor((bbox[0] - frame.xmin) / h)) - 1, 0)
    ix1 = min(int(math.ceil((bbox[2] - frame.xmin) / h)) + 1, frame.nx)
    iy0 = max(int(math.floor((bbox[1] - frame.ymin) / h)) - 1, 0)
    iy1 = min(int(math.ceil((bbox[3] - frame.ymin) / h)) + 1, frame.ny)
    return iy0, iy1, ix0, ix1


def _cell_edges(frame: Frame, win):
    iy0, iy1, ix0, ix1 = win
    h = frame.h
    xs = frame.xmin + np.arange(ix0, ix1 + 1) * h
    ys = frame.ymin + np.arange(iy0, iy1 + 1) * h
    X0, X1 = xs[None, :-1], xs[None, 1:]
    Y0, Y1 = ys[:-1, None], ys[1:, None]
    return X0, X1, Y0, Y1


def _segment_meets_boxes(a, b, X0, X1, Y0, Y1, tol):
    """Separating-axis test of closed segment vs. many closed boxes."""
    x0, x1 = X0 - tol, X1 + tol
    y0, y1 = Y0 - tol, Y1 + tol
    overlap = (
        (min(a[0], b[0]) <= x1) & (max(a[0], b[0]) >= x0) & (min(a[1], b[1]) <= y1) & (max(a[1], b[1]) >= y0)
    )
    ux, uy = b[0] - a[0], b[1] - a[1]

    def side(cx, cy):
        return ux * (cy - a[1]) - uy * (cx - a[0])

    s = [side(x0, y0), side(x1, y0), side(x0, y1), side(x1, y1)]
    all_pos = (s[0] > 0) & (s[1] > 0) & (s[2] > 0) & (s[3] > 0)
    all_neg = (s[0] < 0) & (s[1] < 0) & (s[2] < 0) & (s[3] < 0)
    return overlap & ~all_pos & ~all_neg


def _primitive_cells(prim, X0, X1, Y0, Y1, mode):
    rad = radial(prim)
    if rad is not None:
        (cx, cy), r_in, r_out = rad
        nx_ = np.maximum(np.maximum(X0 - cx, 0.0), cx - X1)
        ny_ = np.maximum(np.maximum(Y0 - cy, 0.0), cy - Y1)
        near = np.hypot(nx_, ny_)
        far = np.hypot(np.maximum(np.abs(X0 - cx), np.abs(X1 - cx)), np.maximum(np.abs(Y0 - cy), np.abs(Y1 - cy)))
        if mode == "outer":
            hit = near <= r_out + TAU
            if r_in > 0:
                hit &= far >= r_in - TAU
            return hit
        hit = far <= r_out - TAU
        if r_in > 0:
            hit &= near >= r_in + TAU
        return hit
    if isinstance(prim, Rect):
        if mode == "outer":
            return (X0 <= prim.xmax + TAU) & (X1 >= prim.xmin - TAU) & (Y0 <= prim.ymax + TAU) & (Y1 >= prim.ymin - TAU)
        return (X0 >= prim.xmin + TAU) & (X1 <= prim.xmax - TAU) & (Y0 >= prim.ymin + TAU) & (Y1 <= prim.ymax - TAU)
    verts = polygon_vertices(prim)
    from .distance import points_in_polygon

    center_in = points_in_polygon((X0 + X1) / 2, (Y0 + Y1) / 2, verts)
    edge_hit = np.zeros(center_in.shape, dtype=bool)
    n = len(verts)
    for i in range(n):
        edge_hit |= _segment_meets_boxes(verts[i], verts[(i + 1) % n], X0, X1, Y0, Y1, TAU)
    if mode == "outer":
        return center_in | edge_hit
    return center_in & ~edge_hit


def rasterize(scene: Scene, frame: Frame, mode: str = "outer", clip: bool = False) -> RasterGrid:
    """Rasterize ``scene`` so occupancy satisfies the mode invariant exactly.

    With ``clip`` the scene is intersected with the frame interior (border ring
    removed) instead of requiring a 2h margin; only meaningful in inner mode.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if not clip and not frame.has_margin(scene.bbox(), 2.0):
        raise FrameError("frame must contain the scene with a margin of at least 2h")
    occ = np.zeros(frame.shape, dtype=bool)
    outer = np.zeros(frame.shape, dtype=bool) if mode == "inner" else occ
    sample_cells = []
    for prim in scene.primitives:
        win = _window(frame, prim.bbox())
        iy0, iy1, ix0, ix1 = win
        if iy0 >= iy1 or ix0 >= ix1:
            sample_cells.append(None)
            continue
        X0, X1, Y0, Y1 = _cell_edges(frame, win)
        hit = _primitive_cells(prim, X0, X1, Y0, Y1, mode)
        occ[iy0:iy1, ix0:ix1] |= hit
        if mode == "inner":
            outer[iy0:iy1, ix0:ix1] |= _primitive_cells(prim, X0, X1, Y0, Y1, "outer")
        where = np.argwhere(hit)
        sample_cells.append((int(where[0][0]) + iy0, int(where[0][1]) + ix0) if len(where) else None)
    if mode == "inner" and len(scene.primitives) > 1:
        _deepen_inner(scene, frame, occ, outer)
    if clip:
        occ[0, :] = occ[-1, :] = False
        occ[:, 0] = occ[:, -1] = False
    return RasterGrid(frame, occ, mode, scene, tuple(sample_cells))


def _deepen_inner(scene, frame, occ, outer):
    """Mark cells covered jointly by several primitives.

    A cell whose center lies in the union and whose center is farther than the
    half-diagonal from every boundary piece is entirely inside the union.
    """
    cand = outer & ~occ
    if not cand.any():
        return
    iy, ix = np.nonzero(cand)
    cx = frame.xmin + (ix + 0.5) * frame.h
    cy = frame.ymin + (iy + 0.5) * frame.h
    inside = scene_depth_many(cx, cy, scene) > TAU
    if not inside.any():
        return
    iy, ix, cx, cy = iy[inside], ix[inside], cx[inside], cy[inside]
    clearance = boundary_distance_many(cx, cy, boundary(scene))
    deep = clearance > frame.h * math.sqrt(0.5) + TAU
    occ[iy[deep], ix[deep]] = True


def cell_centers(frame: Frame):
    xs = frame.xmin + (np.arange(frame.nx) + 0.5) * frame.h
    ys = frame.ymin + (np.arange(frame.ny) + 0.5) * frame.h
    return np.meshgrid(xs, ys)
