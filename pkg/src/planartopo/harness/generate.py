"""Seeded random compacta: disk-growth blobs, horseshoes and nested rings.

Randomness comes from numpy's PCG64 generator seeded through SeedSequence,
so a (seed, parameters) pair always yields the same scene on a given build.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import GenerationError
from ..geometry.cover import dilate
from ..geometry.distance import scene_depth, set_distance
from ..geometry.holes import hole_count
from ..geometry.scene import Disk, Frame, Polygon, Rect, Scene
from ..topology.certificates import decide_complement

DEFAULT_FRAME = Frame(-8.0, -8.0, 8.0, 8.0, 16.0 / 256)
MAX_RETRIES = 64


@dataclass(frozen=True)
class GenParams:
    """``blobs`` is the range of growth branches; ``steps`` disks are added per branch."""

    seed: int = 0
    blobs: tuple = (1, 3)
    radius: tuple = (0.4, 1.0)
    steps: int = 4
    frame: Frame = field(default=DEFAULT_FRAME)

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        lo, hi = self.blobs
        if not 1 <= lo <= hi:
            raise ValueError("blob range must satisfy 1 <= lo <= hi")
        rlo, rhi = self.radius
        if not 0 < rlo <= rhi:
            raise ValueError("radius range must satisfy 0 < lo <= hi")
        if self.steps < 0:
            raise ValueError("growth steps must be nonnegative")
        if max(self.frame.width, self.frame.ymax - self.frame.ymin) < 8 * rhi:
            raise ValueError("frame is too small for the radius range")

    def rng(self, *stream: int) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence([int(self.seed), *stream]))

    def with_seed(self, seed: int) -> "GenParams":
        return GenParams(seed, self.blobs, self.radius, self.steps, self.frame)

    @property
    def floor(self) -> float:
        return self.frame.width / 4096


def _inner_box(p: GenParams):
    """Region where disk centers may go while keeping the frame margin."""
    m = p.radius[1] + 4 * p.frame.h
    f = p.frame
    return f.xmin + m, f.ymin + m, f.xmax - m, f.ymax - m


def _grow(p: GenParams, rng, start, avoid: Scene | None, gap: float) -> list[Disk]:
    x0, y0, x1, y1 = _inner_box(p)
    disks = [start]
    for _ in range(int(rng.integers(p.blobs[0], p.blobs[1] + 1))):
        cur = disks[int(rng.integers(len(disks)))]
        for _ in range(p.steps):
            theta = rng.uniform(0, 2 * math.pi)
            rho = rng.uniform(0.3, 0.9) * cur.r
            cx = min(max(cur.cx + rho * math.cos(theta), x0), x1)
            cy = min(max(cur.cy + rho * math.sin(theta), y0), y1)
            r = float(rng.uniform(*p.radius))
            if math.hypot(cx - cur.cx, cy - cur.cy) >= cur.r:
                continue
            nxt = Disk(float(cx), float(cy), r)
            if avoid is not None and set_distance(Scene((nxt,)), avoid) < gap:
                continue
            disks.append(nxt)
            cur = nxt
    return disks


def _certified(scene: Scene, p: GenParams) -> bool:
    if hole_count(scene) != 0:
        return False
    return decide_complement(scene, p.frame, p.floor).verdict == "connected"


def random_compact(p: GenParams, stream: int = 0) -> Scene:
    """Connected union of overlapping disks with certified connected complement."""
    rng = p.rng(0, stream)
    x0, y0, x1, y1 = _inner_box(p)
    for _ in range(MAX_RETRIES):
        start = Disk(float(rng.uniform(x0, x1) * 0.5), float(rng.uniform(y0, y1) * 0.5), float(rng.uniform(*p.radius)))
        scene = Scene(tuple(_grow(p, rng, start, None, 0.0)))
        if _certified(scene, p):
            return scene
    raise GenerationError(f"no admissible compact after {MAX_RETRIES} attempts (seed {p.seed})")


def random_partner(k: Scene, p: GenParams, gap: float, stream: int = 0) -> Scene:
    """Second compact grown in the complement of ``k``, at distance at least ``gap``."""
    rng = p.rng(1, stream)
    x0, y0, x1, y1 = _inner_box(p)
    for _ in range(MAX_RETRIES):
        r = float(rng.uniform(*p.radius))
        # seed disk placed just outside a random disk of k
        host = k.primitives[int(rng.integers(len(k)))]
        theta = rng.uniform(0, 2 * math.pi)
        reach = host.r + r + gap + float(rng.uniform(0, 0.5))
        cx = min(max(host.cx + reach * math.cos(theta), x0), x1)
        cy = min(max(host.cy + reach * math.sin(theta), y0), y1)
        if scene_depth((cx, cy), k) > -(r + gap):
            continue
        scene = Scene(tuple(_grow(p, rng, Disk(cx, cy, r), k, gap)))
        if _certified(scene, p):
            return scene
    raise GenerationError(f"no admissible partner after {MAX_RETRIES} attempts (seed {p.seed})")


def pocket_pair(p: GenParams, index: int):
    """Horseshoe K with a disk L sitting in its pocket."""
    rng = p.rng(5, index)
    size = float(rng.uniform(2.0, min(6.0, p.frame.width / 3)))
    t = float(rng.uniform(0.1, 0.25)) * size
    u = size / 2 - t
    mouth = float(rng.uniform(0.1, 0.6)) * 2 * u
    k = Scene((horseshoe(0.0, 0.0, size, t, mouth, 90 * int(rng.integers(4))),))
    gap = float(rng.uniform(0.03, 0.5)) * u
    return k, Scene((Disk(0.0, 0.0, u - gap),))


def random_pair(p: GenParams, index: int):
    """Disjoint pair ``(K, L)`` for campaign instance ``index``.

    Every fifth instance is a horseshoe with a disk in its pocket; the rest are
    grown blobs.
    """
    if index % 5 == 4:
        return pocket_pair(p, index)
    gap = float(p.rng(2, index).uniform(0.03, 0.8))
    k = random_compact(p, index)
    return k, random_partner(k, p, gap, index)


# -- shaped compacta -------------------------------------------------------------


def horseshoe(cx: float, cy: float, size: float, thickness: float, mouth: float, angle: int = 0) -> Polygon:
    """Square C-shape with its gap on the side given by ``angle`` (multiple of 90 degrees)."""
    s, t, g = size / 2, thickness, mouth / 2
    if not 0 < g < s - t and 0 < t < s:
        raise ValueError("need 0 < mouth/2 < size/2 - thickness")
    u = s - t
    pts = [(s, g), (s, s), (-s, s), (-s, -s), (s, -s), (s, -g), (u, -g), (u, -u), (-u, -u), (-u, u), (u, u), (u, g)]
    c, si = [(1, 0), (0, 1), (-1, 0), (0, -1)][(angle // 90) % 4]
    return Polygon(tuple((cx + c * x - si * y, cy + si * x + c * y) for x, y in pts))


def square_ring(cx: float, cy: float, size: float, thickness: float) -> Scene:
    """Closed square frame as four rectangles (hole of side ``size - 2*thickness``)."""
    s, t = size / 2, thickness
    return Scene(
        (
            Rect(cx - s, cy - s, cx + s, cy - s + t),
            Rect(cx - s, cy + s - t, cx + s, cy + s),
            Rect(cx - s, cy - s, cx - s + t, cy + s),
            Rect(cx + s - t, cy - s, cx + s, cy + s),
        )
    )


def random_horseshoe(seed: int, frame: Frame = DEFAULT_FRAME) -> Polygon:
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), 3]))
    size = float(rng.uniform(2.0, 5.0))
    t = float(rng.uniform(0.15, 0.3)) * size
    mouth = float(rng.uniform(0.05, 0.4)) * (size - 2 * t)
    lim = frame.width / 2 - size
    cx, cy = (float(v) for v in rng.uniform(-lim / 2, lim / 2, size=2))
    return horseshoe(cx, cy, size, t, mouth, 90 * int(rng.integers(4)))


def random_holed(seed: int, frame: Frame = DEFAULT_FRAME) -> Scene:
    """Compact with a disconnected complement: a ring, possibly nested or decorated."""
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), 4]))
    size = float(rng.uniform(3.0, 8.0))
    lim = frame.width / 2 - size
    cx, cy = (float(v) for v in rng.uniform(-lim / 2, lim / 2, size=2))
    t = float(rng.uniform(0.1, 0.25)) * size
    prims = list(square_ring(cx, cy, size, t).primitives)
    kind = int(rng.integers(3))
    inner = size - 2 * t
    if kind == 1 and inner > 1.2:
        # a second ring nested in the hole
        prims += square_ring(cx, cy, inner * 0.6, inner * 0.12).primitives
    elif kind == 2:
        # a disk blob attached to the outside
        prims.append(Disk(cx + size / 2, cy + float(rng.uniform(-0.3, 0.3)) * size, t * 1.5))
    return Scene(tuple(prims))


def neighborhood_instance(p: GenParams, index: int):
    """``(K, A)`` with A the open ``delta``-neighborhood of K.

    Every fourth instance is a horseshoe whose mouth is narrower than the
    cover radius, so the cover closes it and a ray is needed.
    """
    rng = p.rng(6, index)
    delta = float(rng.uniform(0.3, 0.8))
    if index % 4 == 3:
        eps = delta / 3
        size = float(rng.uniform(2.5, 5.0))
        t = float(rng.uniform(0.1, 0.2)) * size
        mouth = float(rng.uniform(0.55, 0.9)) * 2 * eps
        k = Scene((horseshoe(0.0, 0.0, size, t, mouth, 90 * int(rng.integers(4))),))
    else:
        k = random_compact(p, 1000 + index)
    return k, dilate(k, delta)
