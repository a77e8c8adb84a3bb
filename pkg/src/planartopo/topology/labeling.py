"""Connected components of occupied cells (8-connected) and complement cells (4-connected)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from ..errors import InternalInvariantError
from ..geometry.raster import RasterGrid
from ._kernels import uf_label

SIDES = ("occupied", "complement")


@dataclass(frozen=True)
class Component:
    id: int
    size: int
    bounded: bool
    representative: tuple  # (iy, ix)


@dataclass(frozen=True, eq=False)
class ComponentLabeling:
    side: str
    labels: np.ndarray  # int32 per cell, -1 on the other side
    components: tuple

    @property
    def count(self) -> int:
        return len(self.components)

    def bounded_ids(self) -> list[int]:
        return [c.id for c in self.components if c.bounded]

    def cells(self, cid: int) -> np.ndarray:
        return self.labels == cid


def side_mask(g: RasterGrid, side: str) -> np.ndarray:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    return g.occupancy if side == "occupied" else ~g.occupancy


def connectivity_is_eight(side: str) -> bool:
    return side == "occupied"


def depth_map(mask: np.ndarray) -> np.ndarray:
    """Euclidean distance (in cells) from each True cell to the nearest False cell."""
    if mask.all():
        return np.zeros(mask.shape)
    return ndimage.distance_transform_edt(mask)


def build_labeling(labels: np.ndarray, count: int, side: str) -> ComponentLabeling:
    mask = labels >= 0
    flat = labels.ravel()
    idx = np.flatnonzero(flat >= 0)
    sizes = np.bincount(flat[idx], minlength=count)
    dt = depth_map(mask).ravel()
    order = np.lexsort((idx, -dt[idx], flat[idx]))
    _, first = np.unique(flat[idx][order], return_index=True)
    reps = idx[order][first]
    nx = labels.shape[1]
    unbounded = set()
    if side == "complement":
        ring = np.concatenate([labels[0], labels[-1], labels[:, 0], labels[:, -1]])
        unbounded = {int(v) for v in np.unique(ring) if v >= 0}
    comps = tuple(
        Component(i, int(sizes[i]), i not in unbounded, (int(reps[i] // nx), int(reps[i] % nx)))
        for i in range(count)
    )
    return ComponentLabeling(side, labels, comps)


def label_components(g: RasterGrid, side: str) -> ComponentLabeling:
    """Union-find labeling; a complement component is unbounded iff it touches the border."""
    mask = side_mask(g, side)
    labels, count = uf_label(np.ascontiguousarray(mask), connectivity_is_eight(side), False)
    return build_labeling(labels, int(count), side)


def sphere_component_count(g: RasterGrid) -> int:
    """Complement components after joining every border cell to a point at infinity."""
    _, count = uf_label(np.ascontiguousarray(~g.occupancy), False, True)
    return int(count)


def unbounded_component(c: ComponentLabeling) -> int:
    if c.side != "complement":
        raise ValueError("unbounded_component needs a complement labeling")
    ids = [comp.id for comp in c.components if not comp.bounded]
    if len(ids) != 1:
        raise InternalInvariantError(f"expected exactly one unbounded component, found {len(ids)}")
    return ids[0]


def nesting_levels(g: RasterGrid, complement: ComponentLabeling) -> list[int]:
    """Number of occupied components separating each complement component from the border."""
    occ = label_components(g, "occupied")
    n_c = complement.count
    a = complement.labels
    b = occ.labels
    links = set()
    for sa, sb in (
        ((slice(None), slice(1, None)), (slice(None), slice(None, -1))),
        ((slice(1, None), slice(None)), (slice(None, -1), slice(None))),
    ):
        for x, y in ((a[sa], b[sb]), (a[sb], b[sa])):
            sel = (x >= 0) & (y >= 0)
            links.update(zip(x[sel].tolist(), (y[sel] + n_c).tolist()))
    adj = [[] for _ in range(n_c + occ.count)]
    for u, v in sorted(links):
        adj[u].append(v)
        adj[v].append(u)
    start = unbounded_component(complement)
    level = [-1] * len(adj)
    level[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    return [level[i] // 2 for i in range(n_c)]
