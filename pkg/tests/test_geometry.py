import json
import math

import numpy as np
import pytest

from planartopo.errors import DisjointnessError, DomainError, FrameError, GeometryError, InputError
from planartopo.geometry import (
    Annulus,
    Disk,
    Frame,
    Polygon,
    Rect,
    Scene,
    ball_cover,
    boundary,
    dump_scene_document,
    hole_count,
    parse_scene,
    rasterize,
    separate,
    set_distance,
)
from planartopo.geometry.distance import scene_depth_many
from planartopo.topology import label_components

from helpers import box_in_disk, cell_box, disk_meets_box, sample_points

UNIT = Scene((Disk(0.0, 0.0, 1.0),))


def doc(sets, frame=(-4, -4, 4, 4, 0.125)):
    keys = ("xmin", "ymin", "xmax", "ymax", "h")
    return json.dumps({"frame": dict(zip(keys, frame)), "sets": sets})


# -- parse_scene ---------------------------------------------------------------


def test_parse_single_disk():
    scenes, frame = parse_scene(doc({"K": [{"type": "disk", "cx": 0, "cy": 0, "r": 1}]}))
    assert scenes["K"].primitives == (Disk(0.0, 0.0, 1.0),)
    assert frame.nx == 64


def test_parse_negative_radius_is_geometry_error():
    with pytest.raises(GeometryError):
        parse_scene(doc({"K": [{"type": "disk", "cx": 0, "cy": 0, "r": -1}]}))


def test_parse_bowtie_is_geometry_error():
    bowtie = {"type": "polygon", "vertices": [[-1, -1], [1, 1], [1, -1], [-1, 1]]}
    with pytest.raises(GeometryError, match="intersect"):
        parse_scene(doc({"K": [bowtie]}))


def test_parse_reports_field_path():
    with pytest.raises(InputError) as info:
        parse_scene(doc({"K": [{"type": "disk", "cx": 0, "cy": 0}]}))
    assert info.value.path == "/sets/K/0/r"
    with pytest.raises(InputError) as info:
        parse_scene(doc({"K": [{"type": "blob"}]}))
    assert info.value.path == "/sets/K/0/type"


@pytest.mark.parametrize("token", ["NaN", "Infinity", "-Infinity"])
def test_parse_rejects_non_finite_tokens(token):
    text = doc({"K": [{"type": "disk", "cx": 0, "cy": 0, "r": 1}]}).replace('"r": 1', f'"r": {token}')
    with pytest.raises(InputError):
        parse_scene(text)


def test_parse_rejects_set_outside_frame():
    with pytest.raises(GeometryError):
        parse_scene(doc({"K": [{"type": "disk", "cx": 3.5, "cy": 0, "r": 1}]}))


def test_parse_tiny_radius_rejected():
    with pytest.raises(GeometryError):
        parse_scene(doc({"K": [{"type": "disk", "cx": 0, "cy": 0, "r": 1e-10}]}))


def test_document_round_trip():
    scenes = {
        "K": Scene((Disk(0.5, -0.25, 1.0), Rect(-2, -1, -1, 1))),
        "A": Scene((Polygon(((0, 0), (2, 0), (1, 1.5))), Annulus(0, 0, 1, 2))),
    }
    frame = Frame(-4, -4, 4, 4, 0.25)
    text = dump_scene_document(scenes, frame)
    back, fr = parse_scene(text)
    assert back == scenes and fr == frame
    assert dump_scene_document(back, fr) == text


# -- rasterize -----------------------------------------------------------------

# Per-cell exact disk/square oracle (rational arithmetic), rows bottom to top.
UNIT_OUTER_H05 = ["........", "...##...", "..####..", ".######.", ".######.", "..####..", "...##...", "........"]
UNIT_INNER_H05 = ["........", "........", "........", "...##...", "...##...", "........", "........", "........"]


def _rows(grid):
    return ["".join("#" if v else "." for v in row) for row in grid.occupancy]


def test_rasterize_empty_scene():
    g = rasterize(Scene(()), Frame(-2, -2, 2, 2, 0.5))
    assert not g.occupancy.any()


def test_rasterize_unit_disk_outer_exact():
    g = rasterize(UNIT, Frame(-2, -2, 2, 2, 0.5), "outer")
    assert _rows(g) == UNIT_OUTER_H05
    assert g.occupancy.sum() == 24


def test_rasterize_unit_disk_inner_exact():
    g = rasterize(UNIT, Frame(-2, -2, 2, 2, 0.5), "inner")
    assert _rows(g) == UNIT_INNER_H05


def test_rasterize_offcenter_disk_matches_cell_oracle():
    frame = Frame(-3, -3, 3, 3, 0.1)
    disk = Disk(0.37, -0.21, 1.13)
    outer = rasterize(Scene((disk,)), frame, "outer").occupancy
    inner = rasterize(Scene((disk,)), frame, "inner").occupancy
    for iy in range(frame.ny):
        for ix in range(frame.nx):
            box = cell_box(frame, iy, ix)
            assert outer[iy, ix] == disk_meets_box(disk.cx, disk.cy, disk.r, box)
            assert inner[iy, ix] == box_in_disk(disk.cx, disk.cy, disk.r, box)


def test_rasterize_margin_violation():
    with pytest.raises(FrameError):
        rasterize(Scene((Disk(1.5, 0, 1),)), Frame(-3, -3, 3, 3, 0.5))


MIXED = Scene(
    (
        Disk(-1.2, 0.3, 0.8),
        Rect(-0.6, -1.0, 1.3, -0.2),
        Polygon(((0.2, 0.1), (1.9, 0.4), (1.1, 1.8), (0.6, 0.7))),
        Annulus(1.5, -1.5, 0.4, 0.9),
    )
)


@pytest.mark.parametrize("h", [0.25, 0.1, 0.05])
def test_rasterize_mode_invariants_by_sampling(h):
    frame = Frame(-4, -4, 4, 4, h)
    outer = rasterize(MIXED, frame, "outer").occupancy
    inner = rasterize(MIXED, frame, "inner").occupancy
    assert not (inner & ~outer).any()
    iy, ix, x, y = sample_points(frame, 4)
    d = scene_depth_many(x, y, MIXED)
    # a sample inside the set forces the outer cell on
    assert outer[iy[d > 1e-9], ix[d > 1e-9]].all()
    # an inner cell has every sample inside the set
    assert (d[inner[iy, ix]] > -1e-9).all()


def test_inner_raster_fills_junctions_of_overlapping_primitives():
    # two overlapping disks: cells straddling both must still be inner
    two = Scene((Disk(-0.5, 0, 1.0), Disk(0.5, 0, 1.0)))
    frame = Frame(-3, -3, 3, 3, 0.125)
    inner = rasterize(two, frame, "inner")
    c = label_components(inner, "occupied")
    assert c.count == 1
    mid = frame.cell_of((0.01, 0.01))
    assert inner.occupancy[mid]


# -- set_distance --------------------------------------------------------------


def test_distance_to_boundary_of_concentric_disk():
    assert set_distance(UNIT, boundary(Scene((Disk(0, 0, 2),)))) == pytest.approx(1.0, abs=1e-12)


def test_distance_between_disks():
    assert set_distance(UNIT, Scene((Disk(3, 0, 1),))) == pytest.approx(1.0, abs=1e-12)


def test_distance_disk_to_square_boundary_matches_sampling():
    # min over 10^4 perimeter samples of [-1,1]^2, minus the radius
    sampled = 1.3027756377319946
    d = set_distance(Scene((Disk(2.5, 2.0, 0.5),)), boundary(Scene((Rect(-1, -1, 1, 1),))))
    assert d == pytest.approx(sampled, abs=1e-3)
    assert d <= sampled + 1e-12
    assert d == pytest.approx(math.sqrt(3.25) - 0.5, abs=1e-12)


def test_distance_is_symmetric():
    a = Scene((Polygon(((0, 0), (2, 0.5), (1, 2))), Disk(-3, 1, 0.5)))
    b = Scene((Rect(3, -1, 4, 1), Annulus(-1, -3, 0.5, 1.0)))
    assert set_distance(a, b) == set_distance(b, a)


def test_distance_empty_scene_is_domain_error():
    with pytest.raises(DomainError):
        set_distance(Scene(()), UNIT)


def test_distance_overlapping_is_zero():
    assert set_distance(UNIT, Scene((Rect(0.5, 0.5, 2, 2),))) == 0.0


# -- ball_cover ----------------------------------------------------------------


def _covered(k, disks, eps):
    """Every outer cell of k at h = eps/8 meets some disk."""
    x0, y0, x1, y1 = k.bbox()
    h = eps / 8
    n = int(math.ceil((max(x1 - x0, y1 - y0) + 8 * h) / h)) + 1
    frame = Frame(x0 - 4 * h, y0 - 4 * h, x0 - 4 * h + n * h, y0 - 4 * h + n * h, h)
    occ = rasterize(k, frame, "outer").occupancy
    for iy, ix in zip(*np.nonzero(occ)):
        box = cell_box(frame, iy, ix)
        # the whole closed cell must lie in the union: check its corners and center per disk
        pts = [(box[0], box[1]), (box[2], box[1]), (box[0], box[3]), (box[2], box[3])]
        pts.append(((box[0] + box[2]) / 2, (box[1] + box[3]) / 2))
        if not any(all(math.hypot(px - d.cx, py - d.cy) <= d.r + 1e-12 for px, py in pts) for d in disks):
            return False
    return True


def test_ball_cover_point():
    disks = ball_cover(Scene((Disk(0.31, 0.17, 0.0),)), 0.2)
    assert 1 <= len(disks) <= 4
    assert any(math.hypot(d.cx - 0.31, d.cy - 0.17) <= d.r for d in disks)


def test_ball_cover_unit_disk():
    disks = ball_cover(UNIT, 0.5)
    assert all(d.r == 0.5 for d in disks)
    h = 0.5 / 8
    frame = Frame(-2, -2, 2, 2, h)
    iy, ix, x, y = sample_points(frame, 3)
    inside = np.hypot(x, y) <= 1
    hit = np.zeros(x.shape, dtype=bool)
    for d in disks:
        hit |= np.hypot(x - d.cx, y - d.cy) <= d.r
    assert hit[inside].all()


def test_ball_cover_segment_size_and_containment():
    seg = Scene((Rect(0.0, 0.0, 1.0, 0.0),))
    disks = ball_cover(seg, 0.3)
    assert len(disks) <= math.ceil(1 / 0.15) + 4
    assert _covered(seg, disks, 0.3)


def test_ball_cover_stays_within_eps_of_k():
    disks = ball_cover(MIXED, 0.3)
    centers = Scene(tuple(Disk(d.cx, d.cy, 0.0) for d in disks))
    assert set_distance(centers, MIXED) == 0.0
    for d in disks:
        assert scene_depth_many(np.array([d.cx]), np.array([d.cy]), MIXED)[0] >= -1e-9


def test_ball_cover_rejects_bad_eps():
    with pytest.raises(DomainError):
        ball_cover(UNIT, 0.0)


def test_ball_cover_complement_components_stabilize():
    k = Scene((Polygon(((-2, -2), (2, -2), (2, -1.2), (-1.2, -1.2), (-1.2, 1.2), (2, 1.2), (2, 2), (-2, 2))),))
    eps = 0.4
    w = Scene(tuple(ball_cover(k, eps)))
    counts = []
    for h in (eps / 8, eps / 16, eps / 32):
        frame = Frame(-3.2, -3.2, 3.2, 3.2, h)
        counts.append(label_components(rasterize(w, frame, "outer"), "complement").count)
    assert counts[1] == counts[2]
    assert all(c < 50 for c in counts)


# -- separate ------------------------------------------------------------------


def test_separate_two_disks():
    a1, a2 = separate(UNIT, Scene((Disk(4, 0, 1),)))
    assert a1.primitives == (Disk(0, 0, 1 + 2 / 3),)
    assert a2.primitives[0].r == pytest.approx(1 + 2 / 3)
    assert set_distance(a1, a2) == pytest.approx(2 / 3)


def test_separate_touching_sets():
    with pytest.raises(DisjointnessError):
        separate(UNIT, Scene((Disk(2, 0, 1),)))


def test_separate_polygon_and_disk_rasters_do_not_overlap():
    k = Scene((Polygon(((-3, -1), (-0.5, -1.5), (-1, 1), (-2.5, 1.5))),))
    l = Scene((Disk(1.5, 0.5, 1.0),))
    d = set_distance(k, l)
    a1, a2 = separate(k, l)
    h = d / 8
    n = int(math.ceil(12 / h))
    frame = Frame(-6, -6, -6 + n * h, -6 + n * h, h)
    o1 = rasterize(a1, frame, "outer").occupancy
    o2 = rasterize(a2, frame, "outer").occupancy
    assert not (o1 & o2).any()
    assert not (rasterize(k, frame, "outer").occupancy & ~o1).any()
    assert not (rasterize(l, frame, "outer").occupancy & ~o2).any()


# -- hole_count ----------------------------------------------------------------


@pytest.mark.parametrize(
    "scene,expected",
    [
        (UNIT, 0),
        (Scene((Annulus(0, 0, 1, 2),)), 1),
        (Scene((Disk(0, 0, 1), Disk(3, 0, 1))), 0),
        # four rectangles forming a closed square frame
        (Scene((Rect(-2, -2, 2, -1.5), Rect(-2, 1.5, 2, 2), Rect(-2, -2, -1.5, 2), Rect(1.5, -2, 2, 2))), 1),
        # a ring of six disks around the origin
        (Scene(tuple(Disk(2 * math.cos(t), 2 * math.sin(t), 1.2) for t in np.linspace(0, 2 * math.pi, 7)[:-1])), 1),
        # the same ring with one gap
        (Scene(tuple(Disk(2 * math.cos(t), 2 * math.sin(t), 1.2) for t in np.linspace(0, 2 * math.pi, 7)[:-2])), 0),
    ],
)
def test_hole_count(scene, expected):
    assert hole_count(scene) == expected


def test_hole_count_unknown_when_annulus_meets_other_primitive():
    assert hole_count(Scene((Annulus(0, 0, 1, 2), Disk(2, 0, 0.5)))) is None
