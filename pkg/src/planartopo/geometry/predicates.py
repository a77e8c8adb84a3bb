"""Scalar geometric predicates and distances on points, segments, circles and arcs.

Arcs are ``(cx, cy, r, t0, span)`` with ``0 < span <= 2*pi``, swept counterclockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2 * math.pi
TAU = 1e-12


def orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def dist(a, b) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


@dataclass(frozen=True)
class Segment:
    a: tuple
    b: tuple

    def point(self, t: float):
        return (self.a[0] + t * (self.b[0] - self.a[0]), self.a[1] + t * (self.b[1] - self.a[1]))

    def sample_point(self):
        return self.a


@dataclass(frozen=True)
class Arc:
    cx: float
    cy: float
    r: float
    t0: float = 0.0
    span: float = TWO_PI

    @property
    def center(self):
        return (self.cx, self.cy)

    @property
    def full(self) -> bool:
        return self.span >= TWO_PI

    def point(self, theta: float):
        return (self.cx + self.r * math.cos(theta), self.cy + self.r * math.sin(theta))

    def endpoints(self):
        if self.full:
            return ()
        return (self.point(self.t0), self.point(self.t0 + self.span))

    def sample_point(self):
        return self.point(self.t0)

    def contains_angle(self, theta: float, tol: float = 1e-12) -> bool:
        if self.full:
            return True
        d = (theta - self.t0) % TWO_PI
        return d <= self.span + tol or d >= TWO_PI - tol


# -- points and segments -------------------------------------------------------


def point_segment_distance(p, a, b) -> float:
    ux, uy = b[0] - a[0], b[1] - a[1]
    vx, vy = p[0] - a[0], p[1] - a[1]
    den = ux * ux + uy * uy
    if den == 0:
        return math.hypot(vx, vy)
    t = max(0.0, min(1.0, (vx * ux + vy * uy) / den))
    return math.hypot(vx - t * ux, vy - t * uy)


def _on_segment(a, b, p, tol=TAU) -> bool:
    return point_segment_distance(p, a, b) <= tol


def segments_intersect(a, b, c, d, tol=TAU) -> bool:
    """Closed-segment intersection test with the tolerance resolved toward intersecting."""
    if (
        max(a[0], b[0]) + tol < min(c[0], d[0])
        or max(c[0], d[0]) + tol < min(a[0], b[0])
        or max(a[1], b[1]) + tol < min(c[1], d[1])
        or max(c[1], d[1]) + tol < min(a[1], b[1])
    ):
        return False
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and ((o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)):
        return True
    return (
        _on_segment(a, b, c, tol)
        or _on_segment(a, b, d, tol)
        or _on_segment(c, d, a, tol)
        or _on_segment(c, d, b, tol)
    )


def segment_segment_distance(a, b, c, d) -> float:
    if segments_intersect(a, b, c, d):
        return 0.0
    return min(
        point_segment_distance(a, c, d),
        point_segment_distance(b, c, d),
        point_segment_distance(c, a, b),
        point_segment_distance(d, a, b),
    )


def segment_intersection_params(a, b, c, d) -> list[float]:
    """Parameters t on ``a->b`` where it meets segment ``c->d`` (overlap endpoints included)."""
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    den = rx * sy - ry * sx
    qx, qy = c[0] - a[0], c[1] - a[1]
    rr = rx * rx + ry * ry
    if rr == 0:
        return []
    if abs(den) <= 1e-15 * max(1.0, rr):
        if abs(qx * ry - qy * rx) > 1e-12 * math.sqrt(rr):
            return []
        t0 = (qx * rx + qy * ry) / rr
        t1 = t0 + (sx * rx + sy * ry) / rr
        lo, hi = max(0.0, min(t0, t1)), min(1.0, max(t0, t1))
        return [lo, hi] if lo <= hi else []
    t = (qx * sy - qy * sx) / den
    u = (qx * ry - qy * rx) / den
    if -1e-12 <= t <= 1 + 1e-12 and -1e-12 <= u <= 1 + 1e-12:
        return [min(1.0, max(0.0, t))]
    return []


# -- circles -------------------------------------------------------------------


def circle_segment_params(cx, cy, r, a, b) -> list[float]:
    """Parameters t in [0, 1] where segment ``a->b`` meets the circle."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    fx, fy = a[0] - cx, a[1] - cy
    A = dx * dx + dy * dy
    if A == 0:
        return [0.0] if abs(math.hypot(fx, fy) - r) <= TAU else []
    B = 2 * (fx * dx + fy * dy)
    C = fx * fx + fy * fy - r * r
    disc = B * B - 4 * A * C
    if disc < -1e-14 * max(1.0, B * B):
        return []
    disc = math.sqrt(max(disc, 0.0))
    out = []
    for t in ((-B - disc) / (2 * A), (-B + disc) / (2 * A)):
        if -1e-12 <= t <= 1 + 1e-12:
            out.append(min(1.0, max(0.0, t)))
    return out


def circle_circle_points(c1, r1, c2, r2) -> list[tuple[float, float]]:
    d = dist(c1, c2)
    if d == 0 or d > r1 + r2 + TAU or d < abs(r1 - r2) - TAU:
        return []
    a = (r1 * r1 - r2 * r2 + d * d) / (2 * d)
    hh = max(r1 * r1 - a * a, 0.0)
    hgt = math.sqrt(hh)
    ux, uy = (c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d
    mx, my = c1[0] + a * ux, c1[1] + a * uy
    if hgt == 0:
        return [(mx, my)]
    return [(mx - hgt * uy, my + hgt * ux), (mx + hgt * uy, my - hgt * ux)]


def angle_of(c, p) -> float:
    return math.atan2(p[1] - c[1], p[0] - c[0])


# -- arcs ----------------------------------------------------------------------


def point_arc_distance(p, arc: Arc) -> float:
    dx, dy = p[0] - arc.cx, p[1] - arc.cy
    d = math.hypot(dx, dy)
    if d == 0:
        return arc.r
    if arc.contains_angle(math.atan2(dy, dx)):
        return abs(d - arc.r)
    return min(dist(p, q) for q in arc.endpoints())


def arc_far_distance(p, arc: Arc) -> float:
    """Largest distance from ``p`` to a point of the arc."""
    dx, dy = p[0] - arc.cx, p[1] - arc.cy
    d = math.hypot(dx, dy)
    if d == 0:
        return arc.r
    if arc.contains_angle(math.atan2(-dy, -dx)):
        return d + arc.r
    return max(dist(p, q) for q in arc.endpoints())


def segment_meets_arc(a, b, arc: Arc) -> bool:
    for t in circle_segment_params(arc.cx, arc.cy, arc.r, a, b):
        q = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
        if arc.contains_angle(angle_of(arc.center, q), 1e-9):
            return True
    return False


def segment_arc_distance(a, b, arc: Arc) -> float:
    if segment_meets_arc(a, b, arc):
        return 0.0
    best = min(point_arc_distance(a, arc), point_arc_distance(b, arc))
    for q in arc.endpoints():
        best = min(best, point_segment_distance(q, a, b))
    # interior critical points: foot of the perpendicular from the center
    ux, uy = b[0] - a[0], b[1] - a[1]
    den = ux * ux + uy * uy
    if den > 0:
        t = ((arc.cx - a[0]) * ux + (arc.cy - a[1]) * uy) / den
        if 0 < t < 1:
            foot = (a[0] + t * ux, a[1] + t * uy)
            fd = dist(foot, arc.center)
            if fd > 0:
                for sgn in (1.0, -1.0):
                    q = (
                        arc.cx + sgn * arc.r * (foot[0] - arc.cx) / fd,
                        arc.cy + sgn * arc.r * (foot[1] - arc.cy) / fd,
                    )
                    if arc.contains_angle(angle_of(arc.center, q)):
                        best = min(best, dist(foot, q))
    return best


def arc_circle_angles(arc: Arc, c, r) -> list[float]:
    return [angle_of(arc.center, q) for q in circle_circle_points(arc.center, arc.r, c, r)]


def arc_segment_angles(arc: Arc, a, b) -> list[float]:
    out = []
    for t in circle_segment_params(arc.cx, arc.cy, arc.r, a, b):
        q = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
        out.append(angle_of(arc.center, q))
    return out


def point_in_polygon(p, verts) -> bool:
    """Crossing-number test (boundary handling left to callers)."""
    x, y = p
    inside = False
    n = len(verts)
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        if (y0 > y) != (y1 > y):
            xc = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
            if x < xc:
                inside = not inside
    return inside
