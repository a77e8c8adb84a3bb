"""Analytic planar sets: points, primitives, scenes and raster frames."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Union

from ..errors import FrameError, GeometryError

# Symmetric tolerance for every analytic predicate, in frame units.
TAU = 1e-12

# Smallest radius accepted from documents; radius-0 disks only exist internally.
MIN_RADIUS = 1e-9


class Point(NamedTuple):
    x: float
    y: float


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


@dataclass(frozen=True)
class Disk:
    cx: float
    cy: float
    r: float

    def __post_init__(self):
        if not _finite(self.cx, self.cy, self.r):
            raise GeometryError("disk coordinates must be finite")
        if self.r < 0:
            raise GeometryError(f"disk radius must be positive, got {self.r}")

    @property
    def center(self) -> Point:
        return Point(self.cx, self.cy)

    def bbox(self):
        return (self.cx - self.r, self.cy - self.r, self.cx + self.r, self.cy + self.r)


@dataclass(frozen=True)
class Rect:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if not _finite(self.xmin, self.ymin, self.xmax, self.ymax):
            raise GeometryError("rectangle coordinates must be finite")
        if self.xmin > self.xmax or self.ymin > self.ymax:
            raise GeometryError("rectangle corners must be ordered (min <= max)")

    def bbox(self):
        return (self.xmin, self.ymin, self.xmax, self.ymax)

    def vertices(self) -> tuple[tuple[float, float], ...]:
        return (
            (self.xmin, self.ymin),
            (self.xmax, self.ymin),
            (self.xmax, self.ymax),
            (self.xmin, self.ymax),
        )


@dataclass(frozen=True)
class Polygon:
    """Simple polygon, stored counterclockwise regardless of input order."""

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        verts = tuple((float(x), float(y)) for x, y in self.vertices)
        if len(verts) < 3:
            raise GeometryError("polygon needs at least 3 vertices")
        if not all(_finite(x, y) for x, y in verts):
            raise GeometryError("polygon coordinates must be finite")
        for i in range(len(verts)):
            if verts[i] == verts[(i + 1) % len(verts)]:
                raise GeometryError(f"polygon has repeated consecutive vertex at index {i}")
        crossing = first_self_intersection(verts)
        if crossing is not None:
            raise GeometryError(f"polygon edges {crossing[0]} and {crossing[1]} intersect")
        area = signed_area(verts)
        if abs(area) <= TAU:
            raise GeometryError("polygon has zero area")
        if area < 0:
            verts = (verts[0],) + tuple(reversed(verts[1:]))
        object.__setattr__(self, "vertices", verts)

    def bbox(self):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]


@dataclass(frozen=True)
class Annulus:
    """Closed ring ``r_in <= |z - c| <= r_out`` (open when its scene is open)."""

    cx: float
    cy: float
    r_in: float
    r_out: float

    def __post_init__(self):
        if not _finite(self.cx, self.cy, self.r_in, self.r_out):
            raise GeometryError("annulus coordinates must be finite")
        if not 0 < self.r_in < self.r_out:
            raise GeometryError("annulus radii must satisfy 0 < r_in < r_out")

    @property
    def center(self) -> Point:
        return Point(self.cx, self.cy)

    def bbox(self):
        return (self.cx - self.r_out, self.cy - self.r_out, self.cx + self.r_out, self.cy + self.r_out)


Primitive = Union[Disk, Rect, Polygon, Annulus]


@dataclass(frozen=True)
class Scene:
    """Finite union of primitives; ``closed`` distinguishes compacta from open sets."""

    primitives: tuple = ()
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "primitives", tuple(self.primitives))

    def __len__(self):
        return len(self.primitives)

    def __iter__(self):
        return iter(self.primitives)

    @property
    def is_empty(self) -> bool:
        return not self.primitives

    def bbox(self):
        if not self.primitives:
            return None
        boxes = [p.bbox() for p in self.primitives]
        return (
            min(b[0] for b in boxes),
            min(b[1] for b in boxes),
            max(b[2] for b in boxes),
            max(b[3] for b in boxes),
        )

    def union(self, other: "Scene") -> "Scene":
        return Scene(self.primitives + other.primitives, self.closed and other.closed)


@dataclass(frozen=True)
class Frame:
    """Bounding rectangle tiled by square cells of side ``h``.

    Cell ``(iy, ix)`` covers ``[xmin + ix*h, xmin + (ix+1)*h] x [ymin + iy*h, ...]``.
    """

    xmin: float
    ymin: float
    xmax: float
    ymax: float
    h: float
    nx: int = field(init=False)
    ny: int = field(init=False)

    def __post_init__(self):
        if not _finite(self.xmin, self.ymin, self.xmax, self.ymax, self.h):
            raise FrameError("frame values must be finite")
        if self.h <= 0:
            raise FrameError("cell size h must be positive")
        if self.xmax <= self.xmin or self.ymax <= self.ymin:
            raise FrameError("frame corners must be ordered")
        counts = []
        for extent in (self.xmax - self.xmin, self.ymax - self.ymin):
            n = round(extent / self.h)
            if n < 5 or abs(n * self.h - extent) > 1e-9 * max(1.0, extent):
                raise FrameError(
                    f"frame extent {extent} is not an integer multiple (>= 5) of h={self.h}"
                )
            counts.append(int(n))
        object.__setattr__(self, "nx", counts[0])
        object.__setattr__(self, "ny", counts[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.ny, self.nx)

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    def with_h(self, h: float) -> "Frame":
        return Frame(self.xmin, self.ymin, self.xmax, self.ymax, h)

    def refined(self) -> "Frame":
        return self.with_h(self.h / 2)

    def cell_center(self, iy: int, ix: int) -> Point:
        return Point(self.xmin + (ix + 0.5) * self.h, self.ymin + (iy + 0.5) * self.h)

    def cell_of(self, p) -> tuple[int, int]:
        ix = int(math.floor((p[0] - self.xmin) / self.h))
        iy = int(math.floor((p[1] - self.ymin) / self.h))
        if not (0 <= ix < self.nx and 0 <= iy < self.ny):
            raise FrameError(f"point {tuple(p)} lies outside the frame")
        return iy, ix

    def has_margin(self, bbox, cells: float = 2.0) -> bool:
        if bbox is None:
            return True
        m = cells * self.h - 1e-9 * self.h
        return (
            bbox[0] >= self.xmin + m
            and bbox[1] >= self.ymin + m
            and bbox[2] <= self.xmax - m
            and bbox[3] <= self.ymax - m
        )

    @classmethod
    def enclosing(cls, bbox, n: int = 256, pad: float = 0.15) -> "Frame":
        """Square frame of ``n`` cells around ``bbox`` with relative padding.

        The padding always leaves at least 3 cells of margin at the given n.
        """
        x0, y0, x1, y1 = bbox
        side = max(x1 - x0, y1 - y0, 1e-6)
        side = side * (1 + 2 * pad)
        h = side / (n - 6)
        side = n * h
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        return cls(cx - side / 2, cy - side / 2, cx + side / 2, cy + side / 2, h)


def signed_area(verts) -> float:
    s = 0.0
    n = len(verts)
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2


def first_self_intersection(verts):
    """Return the first pair of non-adjacent crossing edges, or None (brute force)."""
    from .predicates import segments_intersect

    n = len(verts)
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            a, b = edges[i]
            c, d = edges[j]
            if adjacent:
                # adjacent edges may only share their common endpoint
                if _collinear_overlap(a, b, c, d):
                    return (i, j)
                continue
            if segments_intersect(a, b, c, d):
                return (i, j)
    return None


def _collinear_overlap(a, b, c, d) -> bool:
    from .predicates import orient

    if abs(orient(a, b, c)) > TAU or abs(orient(a, b, d)) > TAU:
        return False
    # both on one line: overlap beyond a single shared point means folding back
    ux, uy = b[0] - a[0], b[1] - a[1]
    t = [((p[0] - a[0]) * ux + (p[1] - a[1]) * uy) / (ux * ux + uy * uy) for p in (c, d)]
    lo, hi = min(t), max(t)
    return min(1.0, hi) - max(0.0, lo) > 1e-9
