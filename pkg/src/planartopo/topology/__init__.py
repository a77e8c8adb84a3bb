"""Component labeling, the sphere model, paths, certificates and winding numbers."""

from .certificates import (
    Certificate,
    Decision,
    all_simply_connected,
    component_grid,
    component_simply_connected,
    decide_complement,
    per_component_verdict,
    sphere_connected_complement,
)
from .labeling import (
    Component,
    ComponentLabeling,
    label_components,
    sphere_component_count,
    unbounded_component,
)
from .paths import PolyPath, escape_path, extract_path
from .pgm import load_pgm, mask_grid, read_pgm
from .winding import total_winding, winding_number

__all__ = [
    "Certificate",
    "Component",
    "ComponentLabeling",
    "Decision",
    "PolyPath",
    "all_simply_connected",
    "component_grid",
    "component_simply_connected",
    "decide_complement",
    "escape_path",
    "extract_path",
    "label_components",
    "load_pgm",
    "mask_grid",
    "per_component_verdict",
    "read_pgm",
    "sphere_component_count",
    "sphere_connected_complement",
    "total_winding",
    "unbounded_component",
    "winding_number",
]
