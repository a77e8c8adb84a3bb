"""One-sided connectivity certificates for complements of rasterized sets.

A "connected" verdict comes only from an outer raster (its clear cells lie in
the true complement). A "disconnected" verdict comes only from an inner raster
and names a witness point outside the analytic set that is enclosed by occupied
cells. Everything else is "undecided"; callers refine the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from ..errors import DomainError, InternalInvariantError
from ..geometry.distance import scene_depth_many
from ..geometry.holes import hole_count
from ..geometry.raster import RasterGrid, rasterize
from ..geometry.scene import TAU, Frame, Point, Scene
from .labeling import ComponentLabeling, depth_map, label_components, sphere_component_count
from .paths import PolyPath

VERDICTS = ("connected", "disconnected", "undecided")


@dataclass(frozen=True)
class Certificate:
    verdict: str
    witness: Union[PolyPath, Point, None]
    h: float
    mode: str
    plane_components: int
    sphere_components: int

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")
        if self.verdict == "undecided" and self.witness is not None:
            raise ValueError("undecided certificates carry no witness")

    @property
    def decided(self) -> bool:
        return self.verdict != "undecided"

    def to_dict(self) -> dict:
        if self.witness is None:
            witness = None
        elif isinstance(self.witness, PolyPath):
            witness = {"kind": "path", **self.witness.to_json()}
        else:
            witness = {"kind": "point", "point": [self.witness[0], self.witness[1]]}
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "h": self.h,
            "plane_components": self.plane_components,
            "sphere_components": self.sphere_components,
            "witness": witness,
        }


def enclosed_witnesses(g: RasterGrid, lab: ComponentLabeling) -> dict:
    """Map bounded component id to its deepest clear cell center that misses the set."""
    depth = depth_map(lab.labels >= 0)
    out = {}
    for comp in lab.components:
        if not comp.bounded:
            continue
        iy, ix = np.nonzero(lab.labels == comp.id)
        if g.scene is not None and not g.scene.is_empty:
            cx = g.frame.xmin + (ix + 0.5) * g.frame.h
            cy = g.frame.ymin + (iy + 0.5) * g.frame.h
            outside = scene_depth_many(cx, cy, g.scene) < -TAU
            iy, ix = iy[outside], ix[outside]
        if len(iy) == 0:
            continue
        best = np.lexsort((ix, iy, -depth[iy, ix]))[0]
        out[comp.id] = g.frame.cell_center(int(iy[best]), int(ix[best]))
    return out


def sphere_connected_complement(g: RasterGrid) -> Certificate:
    """Decide whether the complement is connected on the sphere."""
    lab = label_components(g, "complement")
    plane = lab.count
    sphere = sphere_component_count(g)
    if plane != sphere:
        raise InternalInvariantError(
            f"border merge changed the component count ({plane} vs {sphere})"
        )
    h, mode = g.frame.h, g.mode
    if mode == "outer" and plane == 1:
        # A hole narrower than a cell is swallowed by the raster; the
        # analytic hole count rules that out when the scene is known.
        if g.scene is None or g.scene.is_empty or hole_count(g.scene) == 0:
            return Certificate("connected", None, h, mode, plane, sphere)
    if mode == "inner" and plane > 1:
        witnesses = enclosed_witnesses(g, lab)
        if witnesses:
            return Certificate("disconnected", witnesses[min(witnesses)], h, mode, plane, sphere)
    return Certificate("undecided", None, h, mode, plane, sphere)


def component_grid(g: RasterGrid, c: ComponentLabeling, cid: int) -> RasterGrid:
    """Sub-grid holding only occupied component ``cid``.

    Outer grids keep the primitives that landed in the component, so the
    analytic hole check still applies. Inner grids keep the full scene, which
    is enough to certify a witness lies outside the component.
    """
    if c.side != "occupied":
        raise DomainError("component tests need an occupied-side labeling")
    if not (isinstance(cid, (int, np.integer)) and 0 <= cid < c.count):
        raise DomainError(f"invalid component id {cid!r}")
    occ = c.labels == cid
    scene = None
    if g.scene is not None:
        if g.mode == "inner":
            scene = g.scene
        elif len(g.primitive_cells) == len(g.scene.primitives) and None not in g.primitive_cells:
            prims = tuple(
                p for p, cell in zip(g.scene.primitives, g.primitive_cells) if c.labels[cell] == cid
            )
            scene = Scene(prims, g.scene.closed)
        else:
            # Unknown mapping: keep the whole scene, whose hole count is
            # only an upper bound; a zero still certifies.
            scene = g.scene
    return RasterGrid(g.frame, occ, g.mode, scene)


def component_simply_connected(g: RasterGrid, c: ComponentLabeling, cid: int) -> Certificate:
    return sphere_connected_complement(component_grid(g, c, cid))


def all_simply_connected(g: RasterGrid) -> Certificate:
    return sphere_connected_complement(g)


def per_component_verdict(g: RasterGrid) -> str:
    """Conjunction of per-component certificates: connected, disconnected or undecided."""
    lab = label_components(g, "occupied")
    verdicts = [component_simply_connected(g, lab, i).verdict for i in range(lab.count)]
    if "disconnected" in verdicts:
        return "disconnected"
    if all(v == "connected" for v in verdicts):
        return "connected"
    return "undecided"


@dataclass(frozen=True)
class Decision:
    """Outcome of refining a complement test; ``trail`` lists every certificate tried."""

    certificate: Certificate
    trail: tuple

    @property
    def verdict(self) -> str:
        return self.certificate.verdict


def decide_complement(scene: Scene, frame: Frame, floor: float) -> Decision:
    """Halve ``frame.h`` until the complement is decided or ``h`` drops below ``floor``."""
    trail = []
    f = frame
    while True:
        for mode in ("outer", "inner"):
            cert = sphere_connected_complement(rasterize(scene, f, mode))
            trail.append(cert)
            if cert.decided:
                return Decision(cert, tuple(trail))
        if f.h / 2 < floor * (1 - 1e-9):
            return Decision(trail[-1], tuple(trail))
        f = f.refined()
