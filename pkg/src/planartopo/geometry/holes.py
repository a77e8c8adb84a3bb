"""Analytic count of bounded complement components of a scene.

The scene is split into closed convex pieces (disks, convex polygons, ear-clipped
triangles). By the nerve theorem the union is homotopy equivalent to the nerve of
that cover, and by Alexander duality the number of bounded components of the
complement equals the first Betti number of the union. Only the 2-skeleton of
the nerve matters for b1; triple intersections are decided by checking the
finitely many candidate points (piece representatives and pairwise boundary
intersection points) against all three pieces.

Annuli are not convex: an annulus touching nothing else contributes exactly one
hole, and any annulus that meets another primitive makes the count unknown.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Optional

from . import predicates as pr
from .distance import set_distance
from .scene import TAU, Annulus, Disk, Polygon, Rect, Scene, signed_area


class _Convex:
    __slots__ = ("kind", "center", "r", "verts", "bbox")

    def __init__(self, kind, center=None, r=0.0, verts=()):
        self.kind = kind
        self.center = center
        self.r = r
        self.verts = verts
        if kind == "disk":
            cx, cy = center
            self.bbox = (cx - r, cy - r, cx + r, cy + r)
        else:
            xs = [v[0] for v in verts]
            ys = [v[1] for v in verts]
            self.bbox = (min(xs), min(ys), max(xs), max(ys))

    def contains(self, p, tol=TAU) -> bool:
        if self.kind == "disk":
            return pr.dist(p, self.center) <= self.r + tol
        n = len(self.verts)
        for i in range(n):
            a, b = self.verts[i], self.verts[(i + 1) % n]
            length = pr.dist(a, b)
            if length > 0 and pr.orient(a, b, p) < -tol * length:
                return False
        return True

    def representative(self):
        if self.kind == "disk":
            return self.center
        n = len(self.verts)
        return (sum(v[0] for v in self.verts) / n, sum(v[1] for v in self.verts) / n)

    def edges(self):
        n = len(self.verts)
        return [(self.verts[i], self.verts[(i + 1) % n]) for i in range(n)]


def _is_convex(verts) -> bool:
    n = len(verts)
    for i in range(n):
        if pr.orient(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]) < -TAU:
            return False
    return True


def ear_clip(verts) -> list[tuple]:
    """Triangulate a simple counterclockwise polygon by ear clipping."""
    idx = list(range(len(verts)))
    tris = []
    guard = 0
    while len(idx) > 3 and guard < 10 * len(verts) ** 2:
        guard += 1
        n = len(idx)
        for k in range(n):
            i0, i1, i2 = idx[(k - 1) % n], idx[k], idx[(k + 1) % n]
            a, b, c = verts[i0], verts[i1], verts[i2]
            if pr.orient(a, b, c) <= 0:
                continue
            if any(
                _in_triangle(verts[j], a, b, c) for j in idx if j not in (i0, i1, i2)
            ):
                continue
            tris.append((a, b, c))
            del idx[k]
            break
        else:
            # only collinear remnants left
            idx.pop(0)
    if len(idx) == 3:
        a, b, c = (verts[i] for i in idx)
        if abs(pr.orient(a, b, c)) > 0:
            tris.append((a, b, c))
    return tris


def _in_triangle(p, a, b, c) -> bool:
    return pr.orient(a, b, p) >= 0 and pr.orient(b, c, p) >= 0 and pr.orient(c, a, p) >= 0


def convex_pieces(scene: Scene) -> list[_Convex]:
    out = []
    for prim in scene.primitives:
        if isinstance(prim, Disk):
            out.append(_Convex("disk", (prim.cx, prim.cy), prim.r))
        elif isinstance(prim, Rect):
            out.append(_Convex("poly", verts=prim.vertices()))
        elif isinstance(prim, Polygon):
            verts = prim.vertices
            if _is_convex(verts):
                out.append(_Convex("poly", verts=verts))
            else:
                out.extend(_Convex("poly", verts=t) for t in ear_clip(verts) if abs(signed_area(t)) > 0)
    return out


def _pair_meet(p: _Convex, q: _Convex) -> bool:
    b1, b2 = p.bbox, q.bbox
    if b1[0] > b2[2] + TAU or b2[0] > b1[2] + TAU or b1[1] > b2[3] + TAU or b2[1] > b1[3] + TAU:
        return False
    if p.kind == "disk" and q.kind == "disk":
        return pr.dist(p.center, q.center) <= p.r + q.r + TAU
    if p.contains(q.representative()) or q.contains(p.representative()):
        return True
    if p.kind == "disk":
        p, q = q, p
    if q.kind == "disk":
        return any(pr.point_segment_distance(q.center, a, b) <= q.r + TAU for a, b in p.edges())
    return any(pr.segments_intersect(a, b, c, d) for a, b in p.edges() for c, d in q.edges())


def _boundary_points(p: _Convex, q: _Convex) -> list:
    if p.kind == "disk" and q.kind == "disk":
        if p.r == 0 or q.r == 0:
            return []
        return pr.circle_circle_points(p.center, p.r, q.center, q.r)
    if p.kind == "disk":
        p, q = q, p
    pts = []
    if q.kind == "disk":
        for a, b in p.edges():
            for t in pr.circle_segment_params(q.center[0], q.center[1], q.r, a, b):
                pts.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
        return pts
    for a, b in p.edges():
        for c, d in q.edges():
            for t in pr.segment_intersection_params(a, b, c, d):
                pts.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    return pts


def _triple_meet(p, q, s, cache) -> bool:
    cands = [p.representative(), q.representative(), s.representative()]
    if p.kind == "poly":
        cands.extend(p.verts)
    if q.kind == "poly":
        cands.extend(q.verts)
    if s.kind == "poly":
        cands.extend(s.verts)
    for pair in ((p, q), (p, s), (q, s)):
        key = (id(pair[0]), id(pair[1]))
        if key not in cache:
            cache[key] = _boundary_points(*pair)
        cands.extend(cache[key])
    return any(p.contains(c) and q.contains(c) and s.contains(c) for c in cands)


def _gf2_rank(rows: list[int]) -> int:
    rank = 0
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top in pivots:
                row ^= pivots[top]
            else:
                pivots[top] = row
                rank += 1
                break
    return rank


def _components(n: int, edges) -> int:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    count = n
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
            count -= 1
    return count


def nerve_betti1(pieces: list[_Convex]) -> int:
    n = len(pieces)
    if n == 0:
        return 0
    adj = [set() for _ in range(n)]
    edges = []
    for i, j in combinations(range(n), 2):
        if _pair_meet(pieces[i], pieces[j]):
            adj[i].add(j)
            adj[j].add(i)
            edges.append((i, j))
    edge_index = {e: k for k, e in enumerate(edges)}
    cache: dict = {}
    rows = []
    for i, j in edges:
        for k in sorted(adj[i] & adj[j]):
            if k <= j:
                continue
            if _triple_meet(pieces[i], pieces[j], pieces[k], cache):
                rows.append(
                    (1 << edge_index[(i, j)]) | (1 << edge_index[(i, k)]) | (1 << edge_index[(j, k)])
                )
    b0 = _components(n, edges)
    cycle_rank = len(edges) - (n - b0)
    return cycle_rank - _gf2_rank(rows)


@lru_cache(maxsize=512)
def hole_count(scene: Scene) -> Optional[int]:
    """Number of bounded components of the plane minus the scene, or None if unknown."""
    annuli = [p for p in scene.primitives if isinstance(p, Annulus)]
    rest = Scene(tuple(p for p in scene.primitives if not isinstance(p, Annulus)))
    for ann in annuli:
        others = Scene(tuple(p for p in scene.primitives if p is not ann))
        if len(others) and set_distance(Scene((ann,)), others) <= TAU:
            return None
    return len(annuli) + nerve_betti1(convex_pieces(rest))
