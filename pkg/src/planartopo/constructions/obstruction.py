"""Annulus obstruction for compacta whose complement is disconnected.

If a bounded hole of K contains z0, the open annulus centered at z0 with inner
radius eps/2 and outer radius M contains K, and any open V between K and that
annulus keeps z0 enclosed. ``check_obstruction`` tests that claim on a concrete V.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..errors import DomainError, FrameError
from ..geometry.distance import farthest_distance, set_distance
from ..geometry.raster import RasterGrid, rasterize
from ..geometry.scene import Annulus, Disk, Frame, Point, Scene
from ..topology.certificates import Certificate, decide_complement, enclosed_witnesses
from ..topology.labeling import label_components, nesting_levels


@dataclass(frozen=True, eq=False)
class ObstructionResult:
    annulus: Annulus
    witness: Point
    eps: float
    certificate: Certificate

    def scene(self) -> Scene:
        return Scene((self.annulus,), closed=False)

    def to_dict(self) -> dict:
        a = self.annulus
        return {
            "annulus": {"cx": a.cx, "cy": a.cy, "r_in": a.r_in, "r_out": a.r_out},
            "witness": [self.witness.x, self.witness.y],
            "eps": self.eps,
            "certificate": self.certificate.to_dict(),
        }


def _default_frame(k: Scene, h: float) -> Frame:
    x0, y0, x1, y1 = k.bbox()
    side = max(x1 - x0, y1 - y0) + 8 * h
    n = max(int(math.ceil(side / h)), 8)
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    return Frame(cx - n * h / 2, cy - n * h / 2, cx + n * h / 2, cy + n * h / 2, h)


def innermost_witness(g: RasterGrid) -> Point:
    """Certified witness in a most deeply nested hole (ties: lowest component id)."""
    lab = label_components(g, "complement")
    witnesses = enclosed_witnesses(g, lab)
    levels = nesting_levels(g, lab)
    best = max(witnesses, key=lambda cid: (levels[cid], -cid))
    return witnesses[best]


def annulus_obstruction(
    k: Scene, h: float, frame: Optional[Frame] = None, floor: Optional[float] = None
) -> ObstructionResult:
    """Annulus around a certified hole of K, plus the hole's witness point."""
    if k.is_empty:
        raise DomainError("K must be nonempty")
    frame = _default_frame(k, h) if frame is None else frame.with_h(h)
    if floor is None:
        floor = frame.width / 4096
    cert = decide_complement(k, frame, floor).certificate
    if cert.verdict == "connected":
        raise DomainError("complement of K is connected; no obstruction exists", certificate=cert)
    if cert.verdict == "undecided":
        raise DomainError("could not certify a hole of K at the resolution floor", certificate=cert)
    z0 = innermost_witness(rasterize(k, frame.with_h(cert.h), "inner"))
    eps = 2 * set_distance(Scene((Disk(z0.x, z0.y, 0.0),)), k) / 3
    # Two cells of slack keep K strictly inside the open annulus under outer rasterization.
    m = farthest_distance(z0, k) + 2 * cert.h
    return ObstructionResult(Annulus(z0.x, z0.y, eps / 2, m), z0, eps, cert)


def check_obstruction(v: RasterGrid, witness) -> bool:
    """True iff ``witness`` lies in a bounded component of the complement of ``v``."""
    try:
        iy, ix = v.frame.cell_of(witness)
    except FrameError as exc:
        raise DomainError(str(exc)) from None
    if v.occupancy[iy, ix]:
        raise DomainError("witness lies inside V")
    lab = label_components(v, "complement")
    return lab.components[int(lab.labels[iy, ix])].bounded
