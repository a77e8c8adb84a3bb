"""Scene documents (JSON) to scenes and back.

Document layout::

    {"frame": {"xmin", "ymin", "xmax", "ymax", "h"},
     "sets": {"<name>": [primitive, ...]}}

with primitives ``{"type": "disk", "cx", "cy", "r"}``,
``{"type": "rect", "xmin", "ymin", "xmax", "ymax"}``,
``{"type": "polygon", "vertices": [[x, y], ...]}`` and
``{"type": "annulus", "cx", "cy", "r_in", "r_out"}``.
"""

from __future__ import annotations

import json
import math

from ..errors import FrameError, GeometryError, InputError
from .scene import MIN_RADIUS, Annulus, Disk, Frame, Polygon, Rect, Scene

_FIELDS = {
    "disk": ("cx", "cy", "r"),
    "rect": ("xmin", "ymin", "xmax", "ymax"),
    "annulus": ("cx", "cy", "r_in", "r_out"),
    "polygon": ("vertices",),
}


def _reject_constant(token):
    raise InputError(f"non-finite number {token!r} is not allowed")


def _number(obj, key, path):
    if key not in obj:
        raise InputError("missing field", f"{path}/{key}")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError("expected a number", f"{path}/{key}")
    if not math.isfinite(value):
        raise InputError("number must be finite", f"{path}/{key}")
    return float(value)


def _primitive(obj, path):
    if not isinstance(obj, dict):
        raise InputError("primitive must be an object", path)
    kind = obj.get("type")
    if kind not in _FIELDS:
        raise InputError(f"unknown primitive type {kind!r}", f"{path}/type")
    extra = set(obj) - set(_FIELDS[kind]) - {"type"}
    if extra:
        raise InputError(f"unexpected fields {sorted(extra)}", path)
    if kind == "polygon":
        verts = obj.get("vertices")
        if not isinstance(verts, list):
            raise InputError("expected a list of [x, y] pairs", f"{path}/vertices")
        pts = []
        for i, v in enumerate(verts):
            if not isinstance(v, list) or len(v) != 2:
                raise InputError("vertex must be [x, y]", f"{path}/vertices/{i}")
            pts.append((_number({"x": v[0]}, "x", f"{path}/vertices/{i}"), _number({"y": v[1]}, "y", f"{path}/vertices/{i}")))
        return Polygon(tuple(pts))
    vals = [_number(obj, f, path) for f in _FIELDS[kind]]
    if kind == "disk":
        if vals[2] < MIN_RADIUS:
            raise GeometryError(f"{path}: disk radius must be at least {MIN_RADIUS}")
        return Disk(*vals)
    if kind == "annulus":
        return Annulus(*vals)
    return Rect(*vals)


def parse_scene(text: str):
    """Parse a scene document into ``(scenes, frame)``.

    Raises InputError (with a field path) on schema violations and
    GeometryError on invalid primitives.
    """
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise InputError("document must be an object", "")
    if "frame" not in doc:
        raise InputError("missing field", "/frame")
    fr = doc["frame"]
    if not isinstance(fr, dict):
        raise InputError("frame must be an object", "/frame")
    try:
        frame = Frame(*(_number(fr, key, "/frame") for key in ("xmin", "ymin", "xmax", "ymax", "h")))
    except FrameError as exc:
        raise InputError(str(exc), "/frame") from None
    sets = doc.get("sets")
    if not isinstance(sets, dict):
        raise InputError("expected an object of named primitive lists", "/sets")
    scenes = {}
    for name, prims in sets.items():
        path = f"/sets/{name}"
        if not isinstance(prims, list):
            raise InputError("expected a list of primitives", path)
        scene = Scene(tuple(_primitive(p, f"{path}/{i}") for i, p in enumerate(prims)))
        if not frame.has_margin(scene.bbox(), 0.0):
            raise GeometryError(f"{path}: set is not bounded by the frame")
        scenes[name] = scene
    return scenes, frame


def primitive_to_json(prim) -> dict:
    # floats throughout so that a dump, parse, dump cycle is byte-stable
    if isinstance(prim, Disk):
        return {"type": "disk", "cx": float(prim.cx), "cy": float(prim.cy), "r": float(prim.r)}
    if isinstance(prim, Rect):
        return {
            "type": "rect",
            "xmin": float(prim.xmin),
            "ymin": float(prim.ymin),
            "xmax": float(prim.xmax),
            "ymax": float(prim.ymax),
        }
    if isinstance(prim, Annulus):
        return {
            "type": "annulus",
            "cx": float(prim.cx),
            "cy": float(prim.cy),
            "r_in": float(prim.r_in),
            "r_out": float(prim.r_out),
        }
    return {"type": "polygon", "vertices": [[float(x), float(y)] for x, y in prim.vertices]}


def scene_to_json(scene: Scene) -> list:
    return [primitive_to_json(p) for p in scene.primitives]


def frame_to_json(frame: Frame) -> dict:
    keys = ("xmin", "ymin", "xmax", "ymax", "h")
    return {k: float(getattr(frame, k)) for k in keys}


def dump_scene_document(scenes: dict, frame: Frame) -> str:
    doc = {"frame": frame_to_json(frame), "sets": {name: scene_to_json(s) for name, s in scenes.items()}}
    return json.dumps(doc, indent=2) + "\n"
