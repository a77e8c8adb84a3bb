"""Test-side oracles written without reusing package internals."""

from __future__ import annotations

import math
from collections import deque

import numpy as np


def bfs_label(mask: np.ndarray, eight: bool) -> np.ndarray:
    """Plain-Python BFS labeling of True cells."""
    ny, nx = mask.shape
    labels = np.full(mask.shape, -1, dtype=np.int64)
    steps = [(0, 1), (1, 0), (0, -1), (-1, 0)]
    if eight:
        steps += [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    count = 0
    for sy in range(ny):
        for sx in range(nx):
            if not mask[sy, sx] or labels[sy, sx] >= 0:
                continue
            labels[sy, sx] = count
            queue = deque([(sy, sx)])
            while queue:
                y, x = queue.popleft()
                for dy, dx in steps:
                    yy, xx = y + dy, x + dx
                    if 0 <= yy < ny and 0 <= xx < nx and mask[yy, xx] and labels[yy, xx] < 0:
                        labels[yy, xx] = count
                        queue.append((yy, xx))
            count += 1
    return labels


def partition_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if not np.array_equal(a < 0, b < 0):
        return False
    fwd, back = {}, {}
    for u, v in zip(a[a >= 0].tolist(), b[b >= 0].tolist()):
        if fwd.setdefault(u, v) != v or back.setdefault(v, u) != u:
            return False
    return True


def angle_winding(vertices, z) -> float:
    """Winding number by summing wrapped angle increments (floating point)."""
    total = 0.0
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        d = math.atan2(b[1] - z[1], b[0] - z[0]) - math.atan2(a[1] - z[1], a[0] - z[0])
        while d > math.pi:
            d -= 2 * math.pi
        while d < -math.pi:
            d += 2 * math.pi
        total += d
    return total / (2 * math.pi)


def cell_box(frame, iy, ix):
    x0 = frame.xmin + ix * frame.h
    y0 = frame.ymin + iy * frame.h
    return x0, y0, x0 + frame.h, y0 + frame.h


def disk_meets_box(cx, cy, r, box) -> bool:
    x0, y0, x1, y1 = box
    nx = min(max(cx, x0), x1)
    ny = min(max(cy, y0), y1)
    return math.hypot(nx - cx, ny - cy) <= r


def box_in_disk(cx, cy, r, box) -> bool:
    x0, y0, x1, y1 = box
    fx = max(abs(x0 - cx), abs(x1 - cx))
    fy = max(abs(y0 - cy), abs(y1 - cy))
    return math.hypot(fx, fy) < r


def sample_points(frame, per_cell: int = 3):
    """Regular sub-cell sample points of every cell, as (iy, ix, x, y) arrays."""
    offs = (np.arange(per_cell) + 0.5) / per_cell
    iy, ix, oy, ox = np.meshgrid(np.arange(frame.ny), np.arange(frame.nx), offs, offs, indexing="ij")
    x = frame.xmin + (ix + ox) * frame.h
    y = frame.ymin + (iy + oy) * frame.h
    return iy.ravel(), ix.ravel(), x.ravel(), y.ravel()
