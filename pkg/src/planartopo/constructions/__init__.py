"""Neighborhood construction, grid cycles, annulus obstructions and SVG output."""

from .grid_cycle import GridCycleSet, chain_cycles, grid_cycle, square_edges
from .neighborhood import NeighborhoodResult, build_neighborhood, escape_paths, escape_rays, sleeve
from .obstruction import ObstructionResult, annulus_obstruction, check_obstruction

__all__ = [
    "GridCycleSet",
    "NeighborhoodResult",
    "ObstructionResult",
    "annulus_obstruction",
    "build_neighborhood",
    "chain_cycles",
    "check_obstruction",
    "escape_paths",
    "escape_rays",
    "grid_cycle",
    "sleeve",
    "square_edges",
]
