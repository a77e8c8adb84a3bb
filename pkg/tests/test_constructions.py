import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from planartopo.constructions import (
    annulus_obstruction,
    build_neighborhood,
    check_obstruction,
    escape_paths,
    grid_cycle,
)
from planartopo.constructions.grid_cycle import chain_cycles, square_edges
from planartopo.constructions.neighborhood import neighborhood_frame
from planartopo.constructions.svg import render_cycles, render_neighborhood, render_scenes
from planartopo.errors import DomainError, PreconditionError
from planartopo.geometry import Annulus, Disk, Frame, Polygon, RasterGrid, Rect, Scene, ball_cover, rasterize
from planartopo.geometry.cover import dilate
from planartopo.geometry.distance import farthest_distance, set_distance
from planartopo.harness.generate import horseshoe, square_ring
from planartopo.topology import all_simply_connected, label_components, total_winding, winding_number
from planartopo.topology.labeling import nesting_levels

RING = Scene((Annulus(0, 0, 1, 2),))
# the 0.07 offset keeps the cover's inner corners off cell boundaries
SHOE = Scene((horseshoe(0.0, 0.07, 3.0, 0.5, 0.4),))


def _holes(k, eps, h):
    frame = neighborhood_frame(k, eps, h)
    w = Scene(tuple(ball_cover(k, eps)))
    return frame, label_components(rasterize(w, frame, "outer"), "complement")


# -- escape paths -----------------------------------------------------------------


def test_no_bounded_components_means_no_rays():
    k = Scene((Disk(0, 0, 1),))
    frame, comp = _holes(k, 0.4, 0.05)
    assert comp.bounded_ids() == []
    assert escape_paths(comp, rasterize(k, frame, "outer"), frame) == []


def test_horseshoe_single_ray_avoids_k():
    frame, comp = _holes(SHOE, 0.4, 0.05)
    assert len(comp.bounded_ids()) == 1
    k_grid = rasterize(SHOE, frame, "outer")
    (ray,) = escape_paths(comp, k_grid, frame)
    for v in ray.vertices:
        assert not k_grid.occupancy[frame.cell_of(v)]
    # it leaves through the mouth, which faces +x
    crossing = [v for v in ray.vertices if 1.0 < v[0] < 1.5]
    assert crossing and all(abs(v[1] - 0.07) < 0.2 for v in crossing)


def test_facing_horseshoes_two_disjoint_rays():
    k = Scene((horseshoe(-2.1, 0.07, 3, 0.5, 0.4, 0), horseshoe(2.1, 0.07, 3, 0.5, 0.4, 180)))
    frame, comp = _holes(k, 0.4, 0.05)
    assert len(comp.bounded_ids()) == 2
    k_grid = rasterize(k, frame, "outer")
    rays = escape_paths(comp, k_grid, frame)
    assert len(rays) == 2
    cells = []
    for ray in rays:
        cs = {frame.cell_of(v) for v in ray.vertices}
        assert not any(k_grid.occupancy[c] for c in cs)
        cells.append(cs)
    assert not cells[0] & cells[1]


def test_escape_paths_need_complement_labeling():
    frame, _ = _holes(SHOE, 0.4, 0.05)
    g = rasterize(SHOE, frame, "outer")
    with pytest.raises(DomainError):
        escape_paths(label_components(g, "occupied"), g, frame)


# -- build_neighborhood --------------------------------------------------------------


def test_disk_in_bigger_disk_needs_no_rays():
    k = Scene((Disk(0.1, 0.2, 1),))
    res = build_neighborhood(k, Scene((Disk(0.1, 0.2, 2),)))
    assert res.success and res.rays == []
    w = rasterize(Scene(tuple(res.W)), res.V.frame, "outer")
    assert np.array_equal(w.occupancy, res.V.occupancy)
    assert res.k_in_v and res.v_in_a
    assert res.v_certificate.verdict == "connected"
    assert res.eps == pytest.approx(1 / 3)


def test_horseshoe_neighborhood_one_ray():
    res = build_neighborhood(SHOE, dilate(SHOE, 1.0))
    assert res.success
    assert len(res.rays) == 1
    assert res.v_certificate.verdict == "connected"
    # independent audit of both inclusions on the final frame
    frame = res.V.frame
    k_out = rasterize(SHOE, frame, "outer").occupancy
    a_in = rasterize(dilate(SHOE, 1.0), frame, "inner", clip=True).occupancy
    assert not (k_out & ~res.V.occupancy).any()
    assert not (res.V.occupancy & ~a_in).any()
    comp = label_components(res.V, "complement")
    assert comp.count == 1


def test_neighborhood_of_holed_k_is_precondition_error():
    with pytest.raises(PreconditionError) as info:
        build_neighborhood(RING, Scene((Disk(0, 0, 3),)))
    assert info.value.certificate.verdict == "disconnected"


def test_neighborhood_requires_k_inside_a():
    with pytest.raises(PreconditionError):
        build_neighborhood(Scene((Disk(0, 0, 1),)), Scene((Disk(2, 0, 1.5),)))


def test_neighborhood_json_shape():
    d = build_neighborhood(Scene((Disk(0, 0, 1),)), Scene((Disk(0, 0, 2),))).to_dict()
    assert d["status"] == "success"
    assert set(d["certificates"]) == {"K_complement", "K_in_V", "V_in_A", "V_simply_connected"}


# -- grid cycles -------------------------------------------------------------------


def test_grid_cycle_single_point():
    gcs = grid_cycle(Scene((Disk(0.31, 0.17, 0.0),)), 0.25)
    assert len(gcs.squares) == 1
    (cycle,) = gcs.cycles
    assert len(cycle) == 4
    assert winding_number(cycle, (0.31, 0.17)) == 1


def test_grid_cycle_unit_disk():
    gcs = grid_cycle(Scene((Disk(0, 0, 1),)), 0.25)
    assert len(gcs.cycles) == 1
    assert winding_number(gcs.cycles[0], (0.01, 0.02)) == 1
    assert gcs.cycles[0].is_simple()


def test_grid_cycle_two_far_points():
    p, q = (0.31, 0.17), (5.13, -2.21)
    gcs = grid_cycle(Scene((Disk(*p, 0.0), Disk(*q, 0.0))), 0.25)
    assert len(gcs.cycles) == 2
    for c in gcs.cycles:
        assert len(c) == 4
        assert sorted(winding_number(c, z) for z in (p, q)) == [0, 1]


def test_grid_cycle_edges_are_disjoint_and_cycles_simple():
    k = Scene((horseshoe(0.0, 0.0, 3.0, 0.5, 0.6), Disk(2.5, 2.5, 0.4)))
    gcs = grid_cycle(k, 0.2)
    seen = set()
    for c in gcs.cycles:
        assert c.is_simple()
        for a, b in c.segments():
            n = max(1, round(math.hypot(b[0] - a[0], b[1] - a[1]) / 0.2))
            for i in range(n):
                p0 = (a[0] + (b[0] - a[0]) * i / n, a[1] + (b[1] - a[1]) * i / n)
                p1 = (a[0] + (b[0] - a[0]) * (i + 1) / n, a[1] + (b[1] - a[1]) * (i + 1) / n)
                e = frozenset((tuple(round(v / 0.2) for v in p0), tuple(round(v / 0.2) for v in p1)))
                assert e not in seen
                seen.add(e)
    assert gcs.to_dict()["winding"] != 0


def test_checkerboard_squares_split_at_shared_vertex():
    # two squares meeting at one corner give two 4-cycles
    loops = chain_cycles(square_edges([(0, 0), (1, 1)]))
    assert sorted(len(lp) for lp in loops) == [4, 4]


def test_grid_cycle_rejects_bad_pitch():
    with pytest.raises(DomainError):
        grid_cycle(Scene((Disk(0, 0, 1),)), 0.0)


# -- annulus obstruction --------------------------------------------------------------


def test_annulus_obstruction_for_ring():
    res = annulus_obstruction(RING, 0.05)
    z0 = res.witness
    assert math.hypot(*z0) < 0.05
    d = set_distance(Scene((Disk(z0.x, z0.y, 0.0),)), RING)
    assert res.annulus.r_in == pytest.approx(d / 3)
    assert res.annulus.r_in == pytest.approx(1 / 3, abs=0.03)
    assert res.annulus.r_out > 2
    # K sits strictly between the radii
    assert d > res.annulus.r_in
    assert farthest_distance(z0, RING) < res.annulus.r_out


def test_annulus_obstruction_for_disk_is_domain_error():
    with pytest.raises(DomainError):
        annulus_obstruction(Scene((Disk(0, 0, 1),)), 0.05)


def test_annulus_obstruction_nested_frames_uses_innermost_hole():
    k = Scene(square_ring(0, 0, 6, 0.5).primitives + square_ring(0, 0, 3, 0.4).primitives)
    res = annulus_obstruction(k, 0.1)
    z0 = res.witness
    assert max(abs(z0.x), abs(z0.y)) < 1.1
    frame = Frame(-4, -4, 4, 4, 0.1)
    g = rasterize(k, frame, "inner")
    comp = label_components(g, "complement")
    levels = nesting_levels(g, comp)
    assert levels[int(comp.labels[frame.cell_of(z0)])] == 2
    assert farthest_distance(z0, k) < res.annulus.r_out


def test_check_obstruction_thin_ring_around_annulus():
    frame = Frame(-3, -3, 3, 3, 0.05)
    v = rasterize(Scene((Annulus(0, 0, 0.95, 2.05),)), frame, "outer")
    assert check_obstruction(v, (0.01, 0.01))


def test_check_obstruction_on_annulus_raster():
    res = annulus_obstruction(RING, 0.05)
    r = res.annulus.r_out
    n = math.ceil((2 * r + 0.5) / 0.05)
    frame = Frame(-n * 0.025, -n * 0.025, n * 0.025, n * 0.025, 0.05)
    v = rasterize(res.scene(), frame, "inner")
    assert check_obstruction(v, res.witness)


def test_check_obstruction_witness_inside_v():
    frame = Frame(-3, -3, 3, 3, 0.05)
    v = rasterize(Scene((Disk(0, 0, 1.5),)), frame, "outer")
    with pytest.raises(DomainError):
        check_obstruction(v, (0.0, 0.0))


def test_check_obstruction_false_when_unenclosed():
    frame = Frame(-3, -3, 3, 3, 0.05)
    v = rasterize(Scene((Disk(0, 0, 1),)), frame, "outer")
    assert not check_obstruction(v, (2.0, 2.0))


# -- SVG -------------------------------------------------------------------------------


def test_svg_render_is_deterministic_and_well_formed():
    frame = Frame(-4, -4, 4, 4, 0.125)
    scenes = {"K": Scene((Disk(0, 0, 1), Polygon(((1, 1), (2, 1), (1.5, 2))))), "A": RING, "B": Scene((Rect(-3, -3, -2, -2),))}
    a, b = render_scenes(scenes, frame), render_scenes(scenes, frame)
    assert a == b
    root = ET.fromstring(a)
    assert root.tag.endswith("svg")
    ids = [g.get("id") for g in root.iter() if g.tag.endswith("g") and g.get("id")]
    assert {"K", "A", "B"} <= set(ids)


def test_svg_neighborhood_and_cycles_repeatable():
    res1 = build_neighborhood(SHOE, dilate(SHOE, 1.0))
    res2 = build_neighborhood(SHOE, dilate(SHOE, 1.0))
    assert render_neighborhood(res1, SHOE, dilate(SHOE, 1.0)) == render_neighborhood(res2, SHOE, dilate(SHOE, 1.0))
    frame = Frame(-4, -4, 4, 4, 0.125)
    g1 = render_cycles(grid_cycle(SHOE, 0.25), SHOE, frame)
    assert g1 == render_cycles(grid_cycle(SHOE, 0.25), SHOE, frame)
    ET.fromstring(g1)


def test_total_winding_of_cycles_matches_to_dict():
    gcs = grid_cycle(SHOE, 0.25)
    assert gcs.to_dict()["winding"] == total_winding(gcs.cycles, gcs.enclosed_sample)


def test_cycle_edges_resum_to_square_boundary():
    k = Scene((horseshoe(0.0, 0.0, 3.0, 0.5, 0.6), Disk(2.6, -2.4, 0.3)))
    eps = 0.2
    gcs = grid_cycle(k, eps)
    directed = set()
    for c in gcs.cycles:
        for a, b in c.segments():
            ia = (round(a[0] / eps), round(a[1] / eps))
            ib = (round(b[0] / eps), round(b[1] / eps))
            n = abs(ib[0] - ia[0]) + abs(ib[1] - ia[1])
            sx, sy = (ib[0] > ia[0]) - (ib[0] < ia[0]), (ib[1] > ia[1]) - (ib[1] < ia[1])
            for s in range(n):
                directed.add(((ia[0] + sx * s, ia[1] + sy * s), (ia[0] + sx * (s + 1), ia[1] + sy * (s + 1))))
    assert directed == square_edges(gcs.squares)


@pytest.mark.parametrize("h", [0.1, 0.05])
def test_check_obstruction_agrees_with_simple_connectivity(h):
    res = annulus_obstruction(RING, h)
    frame = Frame(-3, -3, 3, 3, h)
    for v in (rasterize(res.scene(), frame, "inner"), rasterize(Scene((Annulus(0, 0, 0.9, 2.1),)), frame, "outer")):
        if check_obstruction(v, res.witness):
            assert all_simply_connected(RasterGrid(frame, v.occupancy, "inner")).verdict != "connected"
            assert all_simply_connected(v).verdict != "connected"
