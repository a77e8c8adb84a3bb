"""Independent labeling by explicit-stack scanline flood fill.

Shares nothing with the union-find labeler except the output record type, so
agreement between the two is meaningful evidence.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ..geometry.raster import RasterGrid
from ..topology.labeling import ComponentLabeling, build_labeling, connectivity_is_eight, side_mask


@njit(cache=True)
def scanline_fill_label(mask, eight):
    """Label by explicit-stack scanline flood fill (no union-find)."""
    ny, nx = mask.shape
    labels = np.full((ny, nx), -1, dtype=np.int32)
    stack = np.empty((4 * ny * nx + 8, 2), dtype=np.int64)
    count = 0
    for sy in range(ny):
        for sx in range(nx):
            if not mask[sy, sx] or labels[sy, sx] >= 0:
                continue
            top = 0
            stack[0, 0] = sy
            stack[0, 1] = sx
            top = 1
            while top > 0:
                top -= 1
                y = stack[top, 0]
                x = stack[top, 1]
                if labels[y, x] >= 0:
                    continue
                lo = x
                while lo > 0 and mask[y, lo - 1] and labels[y, lo - 1] < 0:
                    lo -= 1
                hi = x
                while hi < nx - 1 and mask[y, hi + 1] and labels[y, hi + 1] < 0:
                    hi += 1
                for xx in range(lo, hi + 1):
                    labels[y, xx] = count
                a = lo - 1 if eight and lo > 0 else lo
                b = hi + 1 if eight and hi < nx - 1 else hi
                for yy in (y - 1, y + 1):
                    if yy < 0 or yy >= ny:
                        continue
                    inrun = False
                    for xx in range(a, b + 1):
                        if mask[yy, xx] and labels[yy, xx] < 0:
                            if not inrun:
                                stack[top, 0] = yy
                                stack[top, 1] = xx
                                top += 1
                                inrun = True
                        else:
                            inrun = False
            count += 1
    return labels, count



def oracle_label(g: RasterGrid, side: str) -> ComponentLabeling:
    mask = np.ascontiguousarray(side_mask(g, side))
    labels, count = scanline_fill_label(mask, connectivity_is_eight(side))
    return build_labeling(labels, int(count), side)


def same_partition(a: np.ndarray, b: np.ndarray) -> bool:
    """True iff two label arrays induce the same equivalence relation on cells."""
    if a.shape != b.shape or not np.array_equal(a < 0, b < 0):
        return False
    sel = a >= 0
    pairs = np.unique(np.stack([a[sel], b[sel]]), axis=1)
    return len(np.unique(pairs[0])) == pairs.shape[1] == len(np.unique(pairs[1]))
