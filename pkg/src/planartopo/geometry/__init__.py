"""Analytic scenes, exact distances, certified rasterization and covers."""

from .cover import ball_cover, dilate, separate
from .distance import Boundary, boundary, contains, set_distance
from .holes import hole_count
from .parse import dump_scene_document, parse_scene, scene_to_json
from .predicates import Arc, Segment
from .raster import RasterGrid, rasterize
from .scene import MIN_RADIUS, TAU, Annulus, Disk, Frame, Point, Polygon, Rect, Scene

__all__ = [
    "Annulus",
    "Arc",
    "Boundary",
    "Disk",
    "Frame",
    "MIN_RADIUS",
    "Point",
    "Polygon",
    "RasterGrid",
    "Rect",
    "Scene",
    "Segment",
    "TAU",
    "ball_cover",
    "boundary",
    "contains",
    "dilate",
    "dump_scene_document",
    "hole_count",
    "parse_scene",
    "rasterize",
    "scene_to_json",
    "separate",
    "set_distance",
]
