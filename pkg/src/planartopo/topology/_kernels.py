"""Compiled grid kernels: union-find labeling, BFS and Dijkstra."""

import heapq

import numpy as np
from numba import njit


@njit(cache=True)
def _find(parent, i):
    root = i
    while parent[root] != root:
        root = parent[root]
    while parent[i] != root:
        nxt = parent[i]
        parent[i] = root
        i = nxt
    return root


@njit(cache=True)
def _union(parent, a, b):
    ra = _find(parent, a)
    rb = _find(parent, b)
    if ra == rb:
        return
    if ra < rb:
        parent[rb] = ra
    else:
        parent[ra] = rb


@njit(cache=True)
def uf_label(mask, eight, merge_border):
    """Label True cells of ``mask``; ids follow raster order of first cell.

    With ``merge_border`` every border cell is joined to one extra node standing
    for the point at infinity.
    """
    ny, nx = mask.shape
    n = ny * nx
    parent = np.arange(n + 1)
    for iy in range(ny):
        for ix in range(nx):
            if not mask[iy, ix]:
                continue
            i = iy * nx + ix
            if ix > 0 and mask[iy, ix - 1]:
                _union(parent, i, i - 1)
            if iy > 0:
                if mask[iy - 1, ix]:
                    _union(parent, i, i - nx)
                if eight:
                    if ix > 0 and mask[iy - 1, ix - 1]:
                        _union(parent, i, i - nx - 1)
                    if ix < nx - 1 and mask[iy - 1, ix + 1]:
                        _union(parent, i, i - nx + 1)
            if merge_border and (iy == 0 or ix == 0 or iy == ny - 1 or ix == nx - 1):
                _union(parent, i, n)
    labels = np.full((ny, nx), -1, dtype=np.int32)
    remap = np.full(n + 1, -1, dtype=np.int64)
    count = 0
    for iy in range(ny):
        for ix in range(nx):
            if not mask[iy, ix]:
                continue
            r = _find(parent, iy * nx + ix)
            if remap[r] < 0:
                remap[r] = count
                count += 1
            labels[iy, ix] = remap[r]
    return labels, count


@njit(cache=True)
def bfs_parents(clear, sy, sx):
    """4-connected BFS over ``clear`` from one cell; returns flat parent indices."""
    ny, nx = clear.shape
    parent = np.full(ny * nx, -2, dtype=np.int64)
    queue = np.empty(ny * nx, dtype=np.int64)
    start = sy * nx + sx
    parent[start] = -1
    head = 0
    tail = 1
    queue[0] = start
    while head < tail:
        i = queue[head]
        head += 1
        y = i // nx
        x = i % nx
        for k in range(4):
            if k == 0:
                yy, xx = y, x + 1
            elif k == 1:
                yy, xx = y + 1, x
            elif k == 2:
                yy, xx = y, x - 1
            else:
                yy, xx = y - 1, x
            if yy < 0 or yy >= ny or xx < 0 or xx >= nx:
                continue
            j = yy * nx + xx
            if clear[yy, xx] and parent[j] == -2:
                parent[j] = i
                queue[tail] = j
                tail += 1
    return parent


@njit(cache=True)
def border_bfs(clear):
    """4-connected BFS over ``clear`` from every border cell; returns (steps, parent)."""
    ny, nx = clear.shape
    parent = np.full(ny * nx, -2, dtype=np.int64)
    steps = np.full(ny * nx, -1, dtype=np.int64)
    queue = np.empty(ny * nx, dtype=np.int64)
    tail = 0
    for i in range(ny * nx):
        y = i // nx
        x = i % nx
        if (y == 0 or y == ny - 1 or x == 0 or x == nx - 1) and clear[y, x]:
            parent[i] = -1
            steps[i] = 0
            queue[tail] = i
            tail += 1
    head = 0
    while head < tail:
        i = queue[head]
        head += 1
        y = i // nx
        x = i % nx
        for k in range(4):
            if k == 0:
                yy, xx = y, x + 1
            elif k == 1:
                yy, xx = y + 1, x
            elif k == 2:
                yy, xx = y, x - 1
            else:
                yy, xx = y - 1, x
            if yy < 0 or yy >= ny or xx < 0 or xx >= nx:
                continue
            j = yy * nx + xx
            if clear[yy, xx] and parent[j] == -2:
                parent[j] = i
                steps[j] = steps[i] + 1
                queue[tail] = j
                tail += 1
    return steps, parent


@njit(cache=True)
def dijkstra_to_targets(allowed, cost, targets, sy, sx):
    """Cheapest 4-connected route from ``(sy, sx)`` to any target cell.

    Ties break on flat cell index. Returns the flat path (start first), or an
    empty array when no target is reachable.
    """
    ny, nx = allowed.shape
    n = ny * nx
    dist = np.full(n, np.iinfo(np.int64).max, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    done = np.zeros(n, dtype=np.bool_)
    start = sy * nx + sx
    dist[start] = 0
    heap = [(np.int64(0), np.int64(start))]
    goal = -1
    while len(heap) > 0:
        d, i = heapq.heappop(heap)
        if done[i]:
            continue
        done[i] = True
        y = i // nx
        x = i % nx
        if targets[y, x]:
            goal = i
            break
        for k in range(4):
            if k == 0:
                yy, xx = y, x + 1
            elif k == 1:
                yy, xx = y + 1, x
            elif k == 2:
                yy, xx = y, x - 1
            else:
                yy, xx = y - 1, x
            if yy < 0 or yy >= ny or xx < 0 or xx >= nx:
                continue
            if not allowed[yy, xx]:
                continue
            j = yy * nx + xx
            nd = d + cost[yy, xx]
            if nd < dist[j]:
                dist[j] = nd
                parent[j] = i
                heapq.heappush(heap, (np.int64(nd), np.int64(j)))
    if goal < 0:
        return np.empty(0, dtype=np.int64)
    length = 1
    i = goal
    while i != start:
        i = parent[i]
        length += 1
    path = np.empty(length, dtype=np.int64)
    i = goal
    for k in range(length - 1, -1, -1):
        path[k] = i
        if k > 0:
            i = parent[i]
    return path
