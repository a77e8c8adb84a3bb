"""Deterministic SVG 1.1 output for scenes, neighborhoods and grid cycles.

Each layer is a ``<g id="...">`` group; elements appear in construction order.
Coordinates are frame units with y pointing up (one flip on the root group).
"""

from __future__ import annotations

import numpy as np

from ..geometry.distance import polygon_vertices, radial
from ..geometry.raster import RasterGrid
from ..geometry.scene import Annulus, Disk, Frame, Scene

_STYLE = {
    "K": 'fill="#1f4e79" fill-opacity="0.85" stroke="none"',
    "L": 'fill="#7a2e1f" fill-opacity="0.85" stroke="none"',
    "A": 'fill="#9ecae1" fill-opacity="0.35" stroke="#3182bd"',
    "W": 'fill="#fdd49e" fill-opacity="0.35" stroke="none"',
    "V": 'fill="#74c476" fill-opacity="0.5" stroke="none"',
    "rays": 'fill="none" stroke="#d62728"',
    "cycles": 'fill="none" stroke="#6a3d9a"',
}
_DEFAULT_STYLE = 'fill="#888888" fill-opacity="0.5" stroke="none"'


def _n(v: float) -> str:
    return format(float(v), ".10g")


def _primitive(prim) -> str:
    rad = radial(prim)
    if isinstance(prim, Disk):
        return f'<circle cx="{_n(prim.cx)}" cy="{_n(prim.cy)}" r="{_n(prim.r)}"/>'
    if isinstance(prim, Annulus):
        (cx, cy), r_in, r_out = rad
        d = (
            f"M{_n(cx + r_out)},{_n(cy)} A{_n(r_out)},{_n(r_out)} 0 1,0 {_n(cx - r_out)},{_n(cy)} "
            f"A{_n(r_out)},{_n(r_out)} 0 1,0 {_n(cx + r_out)},{_n(cy)} Z "
            f"M{_n(cx + r_in)},{_n(cy)} A{_n(r_in)},{_n(r_in)} 0 1,1 {_n(cx - r_in)},{_n(cy)} "
            f"A{_n(r_in)},{_n(r_in)} 0 1,1 {_n(cx + r_in)},{_n(cy)} Z"
        )
        return f'<path fill-rule="evenodd" d="{d}"/>'
    pts = " ".join(f"{_n(x)},{_n(y)}" for x, y in polygon_vertices(prim))
    return f'<polygon points="{pts}"/>'


def _path(p) -> str:
    pts = " ".join(f"{_n(x)},{_n(y)}" for x, y in p.vertices)
    tag = "polygon" if p.closed else "polyline"
    return f'<{tag} points="{pts}"/>'


def _cells(grid: RasterGrid) -> list[str]:
    """Occupied cells as one rectangle per horizontal run."""
    f = grid.frame
    out = []
    for iy in range(f.ny):
        row = grid.occupancy[iy]
        if not row.any():
            continue
        padded = np.concatenate(([False], row, [False])).astype(np.int8)
        edges = np.flatnonzero(np.diff(padded))
        for x0, x1 in zip(edges[::2], edges[1::2]):
            out.append(
                f'<rect x="{_n(f.xmin + x0 * f.h)}" y="{_n(f.ymin + iy * f.h)}" '
                f'width="{_n((x1 - x0) * f.h)}" height="{_n(f.h)}"/>'
            )
    return out


def document(frame: Frame, layers) -> str:
    """Assemble named layers ``[(name, [element, ...]), ...]`` into an SVG string."""
    w, h = frame.width, frame.ymax - frame.ymin
    stroke = _n(frame.h / 2)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_n(frame.xmin)} {_n(-frame.ymax)} {_n(w)} {_n(h)}" '
        f'width="{_n(512 * w / max(w, h))}" height="{_n(512 * h / max(w, h))}">',
        '<g transform="scale(1,-1)">',
    ]
    for name, elements in layers:
        style = _STYLE.get(name, _DEFAULT_STYLE)
        lines.append(f'<g id="{name}" {style} stroke-width="{stroke}">')
        lines.extend(elements)
        lines.append("</g>")
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


def scene_layer(scene: Scene) -> list[str]:
    return [_primitive(p) for p in scene.primitives]


def render_scenes(scenes: dict, frame: Frame) -> str:
    return document(frame, [(name, scene_layer(s)) for name, s in scenes.items()])


def render_neighborhood(result, k: Scene, a: Scene) -> str:
    frame = result.V.frame if result.V is not None else None
    if frame is None:
        raise ValueError("nothing to render for an undecided neighborhood")
    layers = [
        ("A", scene_layer(a)),
        ("W", [_primitive(d) for d in result.W]),
        ("V", _cells(result.V)),
        ("K", scene_layer(k)),
        ("rays", [_path(r) for r in result.rays]),
    ]
    return document(frame, layers)


def render_cycles(gcs, k: Scene, frame: Frame) -> str:
    return document(frame, [("K", scene_layer(k)), ("cycles", [_path(c) for c in gcs.cycles])])


def render_grid(grid: RasterGrid, name: str = "V") -> str:
    return document(grid.frame, [(name, _cells(grid))])
