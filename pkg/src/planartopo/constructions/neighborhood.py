"""Open neighborhoods with simply connected components between K and A.

Pipeline: cover K by eps-disks (W), label the bounded holes of W, route one
ray per hole to the frame border through cells clear of K, then cut W along a
one-cell sleeve around every ray. The result V satisfies K in V in A, and its
complement is connected, so every component of V is simply connected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import ndimage

from ..errors import DomainError, PreconditionError
from ..geometry.cover import ball_cover
from ..geometry.distance import boundary, contains, point_of, set_distance
from ..geometry.raster import RasterGrid, rasterize
from ..geometry.scene import Disk, Frame, Scene
from ..topology.certificates import Certificate, all_simply_connected, decide_complement
from ..topology.labeling import ComponentLabeling, label_components
from ..topology.paths import PolyPath, border_mask, cells_to_path, route_cells

_EIGHT = np.ones((3, 3), dtype=bool)
# Extra cost for cells two steps from K; keeps rays centered in narrow gaps.
NEAR_K_PENALTY = 8


def _grow(mask: np.ndarray, steps: int = 1) -> np.ndarray:
    return ndimage.binary_dilation(mask, structure=_EIGHT, iterations=steps)


def sleeve(ray_cells: np.ndarray, shape) -> np.ndarray:
    """Ray cells plus their 8-neighbors."""
    m = np.zeros(shape, dtype=bool)
    m.ravel()[ray_cells] = True
    return _grow(m)


def escape_rays(w_complement: ComponentLabeling, k: RasterGrid, frame: Frame):
    """Rays as flat cell arrays plus a flag telling whether the clearance fallback was used."""
    if w_complement.side != "complement":
        raise DomainError("escape paths need a complement labeling of W")
    shape = frame.shape
    if k.occupancy.shape != shape:
        raise DomainError("K raster and frame disagree")
    k_cells = k.occupancy
    near = _grow(k_cells)
    clear = ~near
    cost = np.ones(shape, dtype=np.int64)
    cost[_grow(k_cells, 2) & clear] += NEAR_K_PENALTY
    targets = border_mask(shape)
    used = np.zeros(shape, dtype=bool)
    rays, relaxed = [], False
    for comp in w_complement.components:
        if not comp.bounded:
            continue
        start = comp.representative
        flat = np.empty(0, dtype=np.int64)
        for allowed in (clear & ~used, ~k_cells & ~used, ~k_cells):
            allowed = allowed.copy()
            allowed[start] = True
            flat = route_cells(allowed, cost, targets, start)
            if len(flat):
                break
            relaxed = True
        if len(flat) == 0:
            raise PreconditionError(
                f"no route from hole at cell {start} to the frame border avoids K"
            )
        if not all(clear.ravel()[flat]):
            relaxed = True
        used |= sleeve(flat, shape)
        rays.append(flat)
    return rays, relaxed


def escape_paths(w_complement: ComponentLabeling, k: RasterGrid, frame: Frame) -> list[PolyPath]:
    """One ray per bounded component of W's complement, from its representative to the border."""
    rays, _ = escape_rays(w_complement, k, frame)
    grid = RasterGrid(frame, np.zeros(frame.shape, dtype=bool), "outer")
    return [cells_to_path(grid, flat) for flat in rays]


@dataclass(frozen=True, eq=False)
class NeighborhoodResult:
    status: str  # "success" or "undecided"
    eps: float
    h: float
    W: list
    rays: list
    V: Optional[RasterGrid]
    k_complement: Certificate
    k_in_v: bool
    v_in_a: bool
    v_certificate: Optional[Certificate]
    attempts: tuple = field(default=())

    @property
    def success(self) -> bool:
        return self.status == "success"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "eps": self.eps,
            "h": self.h,
            "attempts": list(self.attempts),
            "W": [{"cx": d.cx, "cy": d.cy, "r": d.r} for d in self.W],
            "rays": [r.to_json() for r in self.rays],
            "certificates": {
                "K_complement": self.k_complement.to_dict(),
                "K_in_V": self.k_in_v,
                "V_in_A": self.v_in_a,
                "V_simply_connected": None if self.v_certificate is None else self.v_certificate.to_dict(),
            },
            "V_cells": 0 if self.V is None else int(self.V.occupancy.sum()),
        }


def neighborhood_frame(k: Scene, eps: float, h: float) -> Frame:
    """Square frame around K with room for W and a few cells, tiled by ``h``."""
    x0, y0, x1, y1 = k.bbox()
    side = max(x1 - x0, y1 - y0) + 2 * (eps + 6 * h)
    n = max(int(math.ceil(side / h)), 8)
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    half = n * h / 2
    return Frame(cx - half, cy - half, cx + half, cy + half, h)


def check_inclusion(k: Scene, a: Scene) -> float:
    """Return dist(K, boundary of A); raise if K is not inside the open A."""
    if k.is_empty or a.is_empty:
        raise DomainError("K and A must be nonempty")
    d = set_distance(k, boundary(a))
    if d <= 0 or not all(contains(a, point_of(p), tol=0.0) for p in k.primitives):
        raise PreconditionError("K is not contained in the interior of A")
    return d


def _attempt(k, a, w_scene, frame):
    k_out = rasterize(k, frame, "outer")
    w_out = rasterize(w_scene, frame, "outer")
    a_in = rasterize(a, frame, "inner", clip=True)
    w_comp = label_components(w_out, "complement")
    rays, _ = escape_rays(w_comp, k_out, frame)
    cut = np.zeros(frame.shape, dtype=bool)
    for flat in rays:
        cut |= sleeve(flat, frame.shape)
    v_occ = w_out.occupancy & ~cut
    v = RasterGrid(frame, v_occ, "outer")
    k_in_v = bool(not (k_out.occupancy & ~v_occ).any())
    v_in_a = bool(not (v_occ & ~a_in.occupancy).any())
    cert = all_simply_connected(v)
    paths = [cells_to_path(v, flat) for flat in rays]
    return paths, v, k_in_v, v_in_a, cert


def build_neighborhood(
    k: Scene, a: Scene, h: Optional[float] = None, floor: Optional[float] = None
) -> NeighborhoodResult:
    """Construct V with K in V in A and all components of V simply connected.

    ``h`` is the starting cell size (halved until at most eps/4); ``floor`` is
    the smallest cell size tried, defaulting to frame width / 4096.
    """
    d = check_inclusion(k, a)
    eps = d / 3
    if h is None or h > eps / 4:
        h0 = eps / 4 if h is None else h
        while h0 > eps / 4:
            h0 /= 2
        h = h0
    frame = neighborhood_frame(k, eps, h)
    if floor is None:
        floor = frame.width / 4096
    k_cert = decide_complement(k, frame, floor).certificate
    if k_cert.verdict == "disconnected":
        raise PreconditionError("complement of K is disconnected", certificate=k_cert)
    w = ball_cover(k, eps)
    if k_cert.verdict == "undecided":
        return NeighborhoodResult("undecided", eps, h, w, [], None, k_cert, False, False, None, (h,))
    w_scene = Scene(tuple(w))
    attempts = []
    while True:
        attempts.append(frame.h)
        paths, v, k_in_v, v_in_a, cert = _attempt(k, a, w_scene, frame)
        ok = k_in_v and v_in_a and cert.verdict == "connected"
        last = frame.h / 2 < floor * (1 - 1e-9)
        if ok or last:
            status = "success" if ok else "undecided"
            return NeighborhoodResult(
                status, eps, frame.h, w, paths, v, k_cert, k_in_v, v_in_a, cert, tuple(attempts)
            )
        frame = frame.refined()


def cover_scene(disks: list[Disk]) -> Scene:
    return Scene(tuple(disks))
