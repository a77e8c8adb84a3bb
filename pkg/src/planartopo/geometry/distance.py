"""Exact distances between scenes and the clipped boundary of a union of primitives."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import DomainError
from . import predicates as pr
from .predicates import Arc, Segment
from .scene import TAU, Annulus, Disk, Rect, Scene


def polygon_vertices(prim) -> tuple:
    return prim.vertices() if isinstance(prim, Rect) else prim.vertices


def radial(prim):
    """``(center, r_in, r_out)`` for disk-like primitives, else None."""
    if isinstance(prim, Disk):
        return (prim.cx, prim.cy), 0.0, prim.r
    if isinstance(prim, Annulus):
        return (prim.cx, prim.cy), prim.r_in, prim.r_out
    return None


def point_of(prim):
    """Some point belonging to the primitive."""
    if isinstance(prim, Disk):
        return (prim.cx, prim.cy)
    if isinstance(prim, Annulus):
        return (prim.cx + (prim.r_in + prim.r_out) / 2, prim.cy)
    if isinstance(prim, Rect):
        return ((prim.xmin + prim.xmax) / 2, (prim.ymin + prim.ymax) / 2)
    return prim.vertices[0]


def pieces(prim) -> list:
    """Boundary curves of one primitive."""
    if isinstance(prim, Disk):
        if prim.r == 0:
            return [Segment((prim.cx, prim.cy), (prim.cx, prim.cy))]
        return [Arc(prim.cx, prim.cy, prim.r)]
    if isinstance(prim, Annulus):
        return [Arc(prim.cx, prim.cy, prim.r_out), Arc(prim.cx, prim.cy, prim.r_in)]
    verts = polygon_vertices(prim)
    n = len(verts)
    return [Segment(verts[i], verts[(i + 1) % n]) for i in range(n)]


def depth(p, prim) -> float:
    """Signed distance to the primitive's boundary, positive inside."""
    rad = radial(prim)
    if rad is not None:
        c, r_in, r_out = rad
        d = pr.dist(p, c)
        return min(r_out - d, d - r_in) if r_in > 0 else r_out - d
    if isinstance(prim, Rect):
        x, y = p
        if prim.xmin <= x <= prim.xmax and prim.ymin <= y <= prim.ymax:
            return min(x - prim.xmin, prim.xmax - x, y - prim.ymin, prim.ymax - y)
        dx = max(prim.xmin - x, 0.0, x - prim.xmax)
        dy = max(prim.ymin - y, 0.0, y - prim.ymax)
        return -math.hypot(dx, dy)
    dmin = min(pr.point_segment_distance(p, a, b) for a, b in prim.edges())
    return dmin if pr.point_in_polygon(p, prim.vertices) else -dmin


def scene_depth(p, scene: Scene) -> float:
    return max(depth(p, prim) for prim in scene.primitives)


def contains(scene: Scene, p, tol: float = TAU) -> bool:
    return any(depth(p, prim) >= -tol for prim in scene.primitives)


# -- vectorized depth ----------------------------------------------------------


def _segment_distance_many(px, py, a, b):
    ux, uy = b[0] - a[0], b[1] - a[1]
    vx, vy = px - a[0], py - a[1]
    den = ux * ux + uy * uy
    if den == 0:
        return np.hypot(vx, vy)
    t = np.clip((vx * ux + vy * uy) / den, 0.0, 1.0)
    return np.hypot(vx - t * ux, vy - t * uy)


def points_in_polygon(px, py, verts):
    inside = np.zeros(np.broadcast(px, py).shape, dtype=bool)
    n = len(verts)
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        if y0 == y1:
            continue
        straddle = (y0 > py) != (y1 > py)
        xc = x0 + (py - y0) * (x1 - x0) / (y1 - y0)
        inside ^= straddle & (px < xc)
    return inside


def depth_many(px, py, prim):
    px = np.asarray(px, dtype=float)
    py = np.asarray(py, dtype=float)
    rad = radial(prim)
    if rad is not None:
        (cx, cy), r_in, r_out = rad
        d = np.hypot(px - cx, py - cy)
        return np.minimum(r_out - d, d - r_in) if r_in > 0 else r_out - d
    if isinstance(prim, Rect):
        inside = np.minimum.reduce(
            [px - prim.xmin, prim.xmax - px, py - prim.ymin, prim.ymax - py]
        )
        dx = np.maximum(np.maximum(prim.xmin - px, 0.0), px - prim.xmax)
        dy = np.maximum(np.maximum(prim.ymin - py, 0.0), py - prim.ymax)
        return np.where(inside >= 0, inside, -np.hypot(dx, dy))
    dmin = None
    for a, b in prim.edges():
        d = _segment_distance_many(px, py, a, b)
        dmin = d if dmin is None else np.minimum(dmin, d)
    return np.where(points_in_polygon(px, py, prim.vertices), dmin, -dmin)


def scene_depth_many(px, py, scene: Scene):
    out = None
    for prim in scene.primitives:
        d = depth_many(px, py, prim)
        out = d if out is None else np.maximum(out, d)
    if out is None:
        return np.full(np.broadcast(np.asarray(px), np.asarray(py)).shape, -np.inf)
    return out


def piece_distance_many(px, py, piece):
    """Distance from many points to one boundary piece."""
    if isinstance(piece, Segment):
        return _segment_distance_many(px, py, piece.a, piece.b)
    dx, dy = px - piece.cx, py - piece.cy
    d = np.hypot(dx, dy)
    radial_gap = np.abs(d - piece.r)
    if piece.full:
        return radial_gap
    theta = np.arctan2(dy, dx)
    rel = np.mod(theta - piece.t0, pr.TWO_PI)
    on = (rel <= piece.span + 1e-12) & (d > 0)
    (ex0, ey0), (ex1, ey1) = piece.endpoints()
    ends = np.minimum(np.hypot(px - ex0, py - ey0), np.hypot(px - ex1, py - ey1))
    return np.where(on, radial_gap, ends)


# -- solid-to-piece distances --------------------------------------------------


def _radial_range(c, piece):
    if isinstance(piece, Segment):
        lo = pr.point_segment_distance(c, piece.a, piece.b)
        hi = max(pr.dist(c, piece.a), pr.dist(c, piece.b))
        return lo, hi
    return pr.point_arc_distance(c, piece), pr.arc_far_distance(c, piece)


def solid_piece_distance(prim, piece) -> float:
    """Distance from a solid primitive to a boundary piece (segment or arc)."""
    rad = radial(prim)
    if rad is not None:
        c, r_in, r_out = rad
        lo, hi = _radial_range(c, piece)
        if lo > r_out:
            return lo - r_out
        if hi < r_in:
            return r_in - hi
        return 0.0
    if depth(piece.sample_point(), prim) >= -TAU:
        return 0.0
    best = math.inf
    for a, b in pieces_of_polygon(prim):
        if isinstance(piece, Segment):
            d = pr.segment_segment_distance(a, b, piece.a, piece.b)
        else:
            d = pr.segment_arc_distance(a, b, piece)
        best = min(best, d)
        if best == 0.0:
            break
    return best


def pieces_of_polygon(prim):
    verts = polygon_vertices(prim)
    n = len(verts)
    return [(verts[i], verts[(i + 1) % n]) for i in range(n)]


def solid_distance(p, q) -> float:
    """Distance between two solid primitives (0 when they meet)."""
    m = min(solid_piece_distance(p, piece) for piece in pieces(q))
    if m <= TAU:
        return 0.0
    if depth(point_of(p), q) >= -TAU:
        return 0.0
    return m


@dataclass(frozen=True)
class Boundary:
    """Boundary curves of a scene, as clipped segments and arcs."""

    pieces: tuple

    def __len__(self):
        return len(self.pieces)


def set_distance(a, b) -> float:
    """Infimum of Euclidean distance between two sets.

    Each argument is a Scene (solid union of primitives) or a Boundary. The result
    is computed analytically per primitive/piece pair and is exactly symmetric.
    """
    if isinstance(a, Boundary) and isinstance(b, Boundary):
        raise DomainError("at least one argument must be a solid scene")
    if isinstance(a, Boundary):
        a, b = b, a
    if not len(a) or not len(b):
        raise DomainError("set_distance needs two nonempty sets")
    best = math.inf
    if isinstance(b, Boundary):
        for prim in a.primitives:
            for piece in b.pieces:
                best = min(best, solid_piece_distance(prim, piece))
                if best == 0.0:
                    return 0.0
        return best
    for p in a.primitives:
        for q in b.primitives:
            if not _bbox_close(p.bbox(), q.bbox(), best):
                continue
            best = min(best, solid_distance(p, q), solid_distance(q, p))
            if best == 0.0:
                return 0.0
    return best


def _bbox_close(b1, b2, limit: float) -> bool:
    if not math.isfinite(limit):
        return True
    gx = max(b1[0] - b2[2], b2[0] - b1[2], 0.0)
    gy = max(b1[1] - b2[3], b2[1] - b1[3], 0.0)
    return math.hypot(gx, gy) <= limit


# -- clipped boundary of a union -----------------------------------------------


def _split_params(piece, other_pieces):
    if isinstance(piece, Segment):
        cuts = {0.0, 1.0}
        for q in other_pieces:
            if isinstance(q, Segment):
                cuts.update(pr.segment_intersection_params(piece.a, piece.b, q.a, q.b))
            else:
                cuts.update(pr.circle_segment_params(q.cx, q.cy, q.r, piece.a, piece.b))
        return sorted(cuts)
    angles = []
    for q in other_pieces:
        if isinstance(q, Segment):
            angles.extend(pr.arc_segment_angles(piece, q.a, q.b))
        else:
            angles.extend(pr.arc_circle_angles(piece, (q.cx, q.cy), q.r))
    return sorted({a % pr.TWO_PI for a in angles})


def _subpieces(piece, cuts):
    if isinstance(piece, Segment):
        if piece.a == piece.b:
            return [(piece, piece.a)]
        out = []
        for t0, t1 in zip(cuts, cuts[1:]):
            if t1 - t0 <= 1e-15:
                continue
            seg = Segment(piece.point(t0), piece.point(t1))
            out.append((seg, piece.point((t0 + t1) / 2)))
        return out
    if not cuts:
        return [(piece, piece.point(piece.t0))]
    out = []
    k = len(cuts)
    for i in range(k):
        t0 = cuts[i]
        t1 = cuts[(i + 1) % k] + (pr.TWO_PI if i == k - 1 else 0.0)
        span = t1 - t0
        if span <= 1e-15:
            continue
        arc = Arc(piece.cx, piece.cy, piece.r, t0, span)
        out.append((arc, arc.point(t0 + span / 2)))
    return out


@lru_cache(maxsize=256)
def boundary(scene: Scene) -> Boundary:
    """Boundary of the union: primitive boundaries minus parts strictly inside others.

    The result is a superset of the topological boundary (pieces shared by two
    primitives are kept), so distances to it never overestimate.
    """
    prims = scene.primitives
    out = []
    for i, p in enumerate(prims):
        others = [
            q for j, q in enumerate(prims) if j != i and _bbox_close(p.bbox(), q.bbox(), TAU)
        ]
        other_pieces = [piece for q in others for piece in pieces(q)]
        for piece in pieces(p):
            cuts = _split_params(piece, other_pieces)
            for sub, mid in _subpieces(piece, cuts):
                if all(depth(mid, q) <= TAU for q in others):
                    out.append(sub)
    return Boundary(tuple(out))


def boundary_distance_many(px, py, bnd: Boundary):
    out = np.full(np.broadcast(px, py).shape, np.inf)
    for piece in bnd.pieces:
        out = np.minimum(out, piece_distance_many(px, py, piece))
    return out


def farthest_distance(p, scene: Scene) -> float:
    """Radius of the smallest disk at ``p`` containing the scene."""
    best = 0.0
    for prim in scene.primitives:
        rad = radial(prim)
        if rad is not None:
            best = max(best, pr.dist(p, rad[0]) + rad[2])
        else:
            best = max(best, max(pr.dist(p, v) for v in polygon_vertices(prim)))
    return best


def nearest_points(px, py, scene: Scene):
    """Vectorized projection of points onto the (closed) scene."""
    px = np.asarray(px, dtype=float)
    py = np.asarray(py, dtype=float)
    best_d = np.full(px.shape, np.inf)
    bx, by = px.copy(), py.copy()
    for prim in scene.primitives:
        qx, qy = _project(px, py, prim)
        d = np.hypot(qx - px, qy - py)
        better = d < best_d
        best_d = np.where(better, d, best_d)
        bx = np.where(better, qx, bx)
        by = np.where(better, qy, by)
    return bx, by


def _project(px, py, prim):
    rad = radial(prim)
    if rad is not None:
        (cx, cy), r_in, r_out = rad
        dx, dy = px - cx, py - cy
        d = np.hypot(dx, dy)
        safe = np.where(d > 0, d, 1.0)
        ux = np.where(d > 0, dx / safe, 1.0)
        uy = np.where(d > 0, dy / safe, 0.0)
        target = np.clip(d, r_in, r_out)
        return cx + target * ux, cy + target * uy
    if isinstance(prim, Rect):
        return np.clip(px, prim.xmin, prim.xmax), np.clip(py, prim.ymin, prim.ymax)
    inside = points_in_polygon(px, py, prim.vertices)
    best_d = np.full(px.shape, np.inf)
    bx, by = px.copy(), py.copy()
    for a, b in prim.edges():
        ux, uy = b[0] - a[0], b[1] - a[1]
        t = np.clip(((px - a[0]) * ux + (py - a[1]) * uy) / (ux * ux + uy * uy), 0.0, 1.0)
        qx, qy = a[0] + t * ux, a[1] + t * uy
        d = np.hypot(qx - px, qy - py)
        better = d < best_d
        best_d = np.where(better, d, best_d)
        bx = np.where(better, qx, bx)
        by = np.where(better, qy, by)
    return np.where(inside, px, bx), np.where(inside, py, by)
