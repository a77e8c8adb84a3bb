"""Polylines in frame coordinates and cell-path extraction through complement cells."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, FrameError, NoPathError
from ..geometry.predicates import segments_intersect
from ..geometry.raster import RasterGrid
from ..geometry.scene import Point
from ._kernels import bfs_parents, border_bfs, dijkstra_to_targets


@dataclass(frozen=True)
class PolyPath:
    """Open or closed polyline; a closed path's first vertex is not repeated."""

    vertices: tuple
    closed: bool = False

    def __post_init__(self):
        verts = tuple(Point(float(x), float(y)) for x, y in self.vertices)
        if not verts:
            raise ValueError("a path needs at least one vertex")
        for i in range(len(verts) - 1):
            if verts[i] == verts[i + 1]:
                raise ValueError(f"consecutive vertices {i} and {i + 1} coincide")
        if self.closed:
            if len(verts) < 4:
                raise ValueError("closed paths need at least 4 vertices")
            if verts[0] == verts[-1]:
                raise ValueError("closed paths must not repeat the first vertex")
        object.__setattr__(self, "vertices", verts)

    def __len__(self):
        return len(self.vertices)

    @property
    def start(self) -> Point:
        return self.vertices[0]

    @property
    def end(self) -> Point:
        return self.vertices[0] if self.closed else self.vertices[-1]

    def segments(self):
        v = self.vertices
        out = list(zip(v[:-1], v[1:]))
        if self.closed:
            out.append((v[-1], v[0]))
        return out

    def reversed(self) -> "PolyPath":
        return PolyPath(tuple(reversed(self.vertices)), self.closed)

    def translated(self, dx: float, dy: float) -> "PolyPath":
        return PolyPath(tuple((x + dx, y + dy) for x, y in self.vertices), self.closed)

    def concat(self, other: "PolyPath") -> "PolyPath":
        """Traverse ``self`` then ``other``; requires ``self.end == other.start``."""
        if self.closed or other.closed:
            raise ValueError("only open paths can be concatenated")
        if self.end != other.start:
            raise ValueError("paths do not share an endpoint")
        return PolyPath(self.vertices + other.vertices[1:])

    def is_simple(self) -> bool:
        segs = self.segments()
        n = len(segs)
        for i in range(n):
            for j in range(i + 1, n):
                a, b = segs[i]
                c, d = segs[j]
                if j == i + 1 or (self.closed and i == 0 and j == n - 1):
                    continue
                if segments_intersect(a, b, c, d, tol=0.0):
                    return False
        if len(set(self.vertices)) != len(self.vertices):
            return False
        return True

    def to_json(self) -> dict:
        return {"closed": self.closed, "vertices": [[p.x, p.y] for p in self.vertices]}


def _dedupe(points):
    out = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    return out


def _cells_to_points(g: RasterGrid, flat) -> list:
    nx = g.frame.nx
    return [g.frame.cell_center(int(i) // nx, int(i) % nx) for i in flat]


def _clear_cell(g: RasterGrid, p) -> tuple:
    try:
        iy, ix = g.frame.cell_of(p)
    except FrameError as exc:
        raise DomainError(str(exc)) from None
    if g.occupancy[iy, ix]:
        raise DomainError(f"point {tuple(p)} lies in an occupied cell")
    return iy, ix


def extract_path(g: RasterGrid, a, b) -> PolyPath:
    """Complement path from ``a`` to ``b`` through 4-adjacent clear cell centers."""
    a, b = Point(*a), Point(*b)
    ay, ax = _clear_cell(g, a)
    by, bx = _clear_cell(g, b)
    if a == b:
        return PolyPath((a,))
    nx = g.frame.nx
    parent = bfs_parents(~g.occupancy, ay, ax)
    goal = by * nx + bx
    if parent[goal] == -2:
        raise NoPathError(f"{tuple(a)} and {tuple(b)} lie in different complement components")
    flat = [goal]
    while parent[flat[-1]] >= 0:
        flat.append(int(parent[flat[-1]]))
    flat.reverse()
    pts = [a] + _cells_to_points(g, flat) + [b]
    return PolyPath(tuple(_dedupe(pts)))


def border_mask(shape) -> np.ndarray:
    m = np.zeros(shape, dtype=bool)
    m[0, :] = m[-1, :] = True
    m[:, 0] = m[:, -1] = True
    return m


def route_cells(allowed, cost, targets, start) -> np.ndarray:
    """Cheapest 4-connected route (flat cell indices) or an empty array."""
    return dijkstra_to_targets(
        np.ascontiguousarray(allowed),
        np.ascontiguousarray(cost, dtype=np.int64),
        np.ascontiguousarray(targets),
        int(start[0]),
        int(start[1]),
    )


def escape_path(g: RasterGrid, start) -> PolyPath:
    """Shortest complement path from a clear cell to the frame border."""
    clear = ~g.occupancy
    if not clear[start]:
        raise DomainError("escape path must start in a clear cell")
    flat = route_cells(clear, np.ones(clear.shape, dtype=np.int64), border_mask(clear.shape), start)
    if len(flat) == 0:
        raise NoPathError("cell is enclosed; no route to the frame border")
    return PolyPath(tuple(_cells_to_points(g, flat)))


def deepest_escape_path(g: RasterGrid) -> PolyPath:
    """Escape path from the clear cell that is farthest from the border by 4-steps.

    On a complement with one component this starts in the most hidden pocket,
    which makes it a useful connectivity witness.
    """
    steps, parent = border_bfs(np.ascontiguousarray(~g.occupancy))
    start = int(np.argmax(steps))
    if steps[start] < 0:
        raise NoPathError("no clear cell reaches the frame border")
    flat = [start]
    while parent[flat[-1]] >= 0:
        flat.append(int(parent[flat[-1]]))
    return PolyPath(tuple(_cells_to_points(g, flat)))


def cells_to_path(g: RasterGrid, flat) -> PolyPath:
    return PolyPath(tuple(_cells_to_points(g, flat)))
