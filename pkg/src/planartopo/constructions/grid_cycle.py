"""Boundary cycles of the union of lattice squares meeting a compact set.

Every selected square contributes its four counterclockwise edges; an edge
shared by two selected squares appears once in each direction and cancels.
The surviving edges are chained into simple closed cycles with the selected
squares on the left, so outer cycles run counterclockwise and hole cycles
clockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DegeneratePositionError, DomainError
from ..geometry.cover import lattice_cells
from ..geometry.distance import contains, point_of, polygon_vertices, radial
from ..geometry.holes import ear_clip
from ..geometry.scene import Point, Scene
from ..topology.paths import PolyPath
from ..topology.winding import total_winding

# Outgoing direction preference at a vertex, relative to the incoming one:
# left, straight, right.
_TURN_ORDER = (1, 0, 3)
_DIRS = ((1, 0), (0, 1), (-1, 0), (0, -1))


@dataclass(frozen=True, eq=False)
class GridCycleSet:
    eps: float
    cycles: tuple
    enclosed_sample: Point
    squares: tuple  # lattice indices (iy, ix) of the selected squares

    def to_dict(self) -> dict:
        return {
            "eps": self.eps,
            "squares": len(self.squares),
            "enclosed_sample": [self.enclosed_sample.x, self.enclosed_sample.y],
            "winding": total_winding(self.cycles, self.enclosed_sample),
            "cycles": [c.to_json() for c in self.cycles],
        }


def square_edges(squares) -> set:
    """Directed boundary edges (lattice vertex pairs) left after cancellation."""
    edges = set()
    for iy, ix in squares:
        corners = ((ix, iy), (ix + 1, iy), (ix + 1, iy + 1), (ix, iy + 1))
        for i in range(4):
            a, b = corners[i], corners[(i + 1) % 4]
            if (b, a) in edges:
                edges.remove((b, a))
            else:
                edges.add((a, b))
    return edges


def _direction(a, b) -> int:
    return _DIRS.index((b[0] - a[0], b[1] - a[1]))


def chain_cycles(edges: set) -> list[list]:
    """Split directed edges into vertex-simple closed cycles (lattice vertices)."""
    out_edges = {}
    for a, b in edges:
        out_edges.setdefault(a, set()).add(b)
    cycles = []
    for start in sorted(out_edges):
        while out_edges.get(start):
            trail = [start]
            where = {start: 0}
            heading = None
            while True:
                v = trail[-1]
                options = out_edges[v]
                if heading is None:
                    nxt = min(options)
                else:
                    nxt = None
                    for turn in _TURN_ORDER:
                        d = _DIRS[(heading + turn) % 4]
                        cand = (v[0] + d[0], v[1] + d[1])
                        if cand in options:
                            nxt = cand
                            break
                options.discard(nxt)
                heading = _direction(v, nxt)
                if nxt in where:
                    i = where[nxt]
                    loop = trail[i:]
                    cycles.append(loop)
                    for u in loop[1:]:
                        del where[u]
                    del trail[i + 1 :]
                    if i == 0:
                        break
                else:
                    where[nxt] = len(trail)
                    trail.append(nxt)
    return cycles


def _corners_only(loop):
    n = len(loop)
    keep = []
    for i in range(n):
        a, b, c = loop[i - 1], loop[i], loop[(i + 1) % n]
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            keep.append(b)
    return keep


def _off_grid(p, eps) -> bool:
    for v in p:
        t = v / eps
        if abs(t - round(t)) < 1e-9:
            return False
    return True


def _sample_candidates(k: Scene, eps: float):
    for prim in k.primitives:
        base = point_of(prim)
        yield base
        if radial(prim) is None:
            for a, b, c in ear_clip(polygon_vertices(prim)):
                yield Point((a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3)
        rad = radial(prim)
        reach = eps if rad is None else min(eps, max(rad[2] - rad[1], rad[2]) / 2)
        for s in (0.3, 0.1, 0.03, 1e-3):
            for ux, uy in ((0.6, 0.8), (-0.8, 0.6), (-0.6, -0.8), (0.8, -0.6)):
                yield Point(base[0] + s * reach * ux, base[1] + s * reach * uy)


def grid_cycle(k: Scene, eps: float) -> GridCycleSet:
    """Cycles bounding the union of closed ``eps``-squares that meet ``k``."""
    if not eps > 0 or not math.isfinite(eps):
        raise DomainError("grid pitch must be positive")
    if k.is_empty:
        raise DomainError("K must be nonempty")
    iy, ix = lattice_cells(k, eps)
    squares = tuple(sorted(zip(iy.tolist(), ix.tolist())))
    loops = chain_cycles(square_edges(squares))
    cycles = tuple(
        PolyPath(tuple((x * eps, y * eps) for x, y in _corners_only(loop)), closed=True) for loop in loops
    )
    for p in _sample_candidates(k, eps):
        if _off_grid(p, eps) and contains(k, p, tol=0.0):
            try:
                if total_winding(cycles, p) != 0:
                    return GridCycleSet(eps, cycles, Point(*p), squares)
            except DegeneratePositionError:
                continue
    raise DegeneratePositionError("no point of K off the grid lines was found")
