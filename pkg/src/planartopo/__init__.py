"""Certified planar topology on rasters."""

__version__ = "0.1.0"
