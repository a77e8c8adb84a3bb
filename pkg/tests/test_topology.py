import math
from pathlib import Path

import numpy as np
import pytest

from planartopo.errors import DegeneratePositionError, DomainError, InputError, NoPathError
from planartopo.geometry import Annulus, Disk, Frame, Polygon, Rect, Scene, rasterize
from planartopo.geometry.raster import RasterGrid
from planartopo.harness.generate import horseshoe
from planartopo.topology import (
    PolyPath,
    all_simply_connected,
    component_simply_connected,
    extract_path,
    label_components,
    load_pgm,
    mask_grid,
    per_component_verdict,
    read_pgm,
    sphere_component_count,
    sphere_connected_complement,
    total_winding,
    unbounded_component,
    winding_number,
)
from planartopo.topology.pgm import write_pgm

from helpers import angle_winding, bfs_label, partition_equal

FIXTURES = Path(__file__).parent / "fixtures"
F3 = Frame(-3, -3, 3, 3, 0.125)
RING = Scene((Annulus(0, 0, 1, 2),))


def clear(frame=F3):
    return RasterGrid(frame, np.zeros(frame.shape, dtype=bool), "outer")


# -- labeling ------------------------------------------------------------------


def test_all_clear_complement_single_unbounded():
    lab = label_components(clear(), "complement")
    assert lab.count == 1 and not lab.components[0].bounded
    assert unbounded_component(lab) == 0


def test_annulus_outer_complement_matches_bfs_oracle():
    g = rasterize(RING, F3, "outer")
    lab = label_components(g, "complement")
    assert lab.count == 2
    assert len(lab.bounded_ids()) == 1
    assert g.occupancy.sum() == 700
    assert partition_equal(lab.labels, bfs_label(~g.occupancy, eight=False))


def test_two_disks_occupied_components():
    g = rasterize(Scene((Disk(-1.5, 0, 1), Disk(1.5, 0, 1))), Frame(-4, -4, 4, 4, 0.125), "outer")
    lab = label_components(g, "occupied")
    assert lab.count == 2
    assert partition_equal(lab.labels, bfs_label(g.occupancy, eight=True))


def test_diagonal_cells_join_occupied_but_not_complement():
    occ = np.zeros((6, 6), dtype=bool)
    occ[2, 2] = occ[3, 3] = True
    occ[2, 3] = occ[3, 2] = False
    g = RasterGrid(Frame(0, 0, 6, 6, 1), occ, "outer")
    assert label_components(g, "occupied").count == 1
    # the checkerboard pair does not separate the complement
    assert label_components(g, "complement").count == 1


def test_unbounded_id_for_annulus_touches_border():
    lab = label_components(rasterize(RING, F3, "outer"), "complement")
    uid = unbounded_component(lab)
    assert lab.labels[0, 0] == uid
    mid = F3.cell_of((0.01, 0.01))
    assert lab.labels[mid] != uid


def test_unbounded_id_for_full_interior_block():
    occ = np.zeros(F3.shape, dtype=bool)
    occ[1:-1, 1:-1] = True
    lab = label_components(RasterGrid(F3, occ, "outer"), "complement")
    assert lab.count == 1
    assert unbounded_component(lab) == lab.labels[0, 0]


def test_unbounded_component_needs_complement_side():
    with pytest.raises(ValueError):
        unbounded_component(label_components(clear(), "occupied"))


def test_border_ring_must_stay_clear():
    occ = np.zeros((6, 6), dtype=bool)
    occ[0, 3] = True
    with pytest.raises(Exception):
        RasterGrid(Frame(0, 0, 6, 6, 1), occ, "outer")


def test_sphere_count_equals_plane_count():
    for scene in (RING, Scene((Disk(0, 0, 1),)), Scene(())):
        for mode in ("outer", "inner"):
            g = rasterize(scene, F3, mode)
            assert sphere_component_count(g) == label_components(g, "complement").count


# -- sphere connectivity certificates -------------------------------------------


def test_single_disk_outer_is_connected():
    cert = sphere_connected_complement(rasterize(Scene((Disk(0, 0, 1),)), F3, "outer"))
    assert cert.verdict == "connected"
    assert cert.witness is None


def test_annulus_inner_fine_is_disconnected_with_center_witness():
    g = rasterize(RING, Frame(-3, -3, 3, 3, 0.05), "inner")
    cert = sphere_connected_complement(g)
    assert cert.verdict == "disconnected"
    assert math.hypot(*cert.witness) < 0.05


def test_annulus_outer_coarse_is_undecided():
    cert = sphere_connected_complement(rasterize(RING, Frame(-5, -5, 5, 5, 1.0), "outer"))
    assert cert.verdict == "undecided"


def test_annulus_outer_fine_never_claims_connected():
    for h in (0.5, 0.25, 0.125):
        cert = sphere_connected_complement(rasterize(RING, Frame(-3, -3, 3, 3, h), "outer"))
        assert cert.verdict != "connected"


def test_thin_hole_below_cell_size_is_not_called_connected():
    # hole of width 0.02 vanishes on a 0.25 outer raster
    thin = Scene((Annulus(0, 0, 0.99, 2.0), Disk(0, 0, 0.97)))
    cert = sphere_connected_complement(rasterize(thin, Frame(-3, -3, 3, 3, 0.25), "outer"))
    assert cert.verdict == "undecided"


# -- extract_path ----------------------------------------------------------------


def test_extract_path_identity():
    p = extract_path(clear(), (0.3, 0.2), (0.3, 0.2))
    assert len(p) == 1


def test_extract_path_routes_around_disk():
    g = rasterize(Scene((Disk(0, 0, 1),)), F3, "outer")
    p = extract_path(g, (-2, 0), (2, 0))
    assert p.start == (-2, 0) and p.end == (2, 0)
    for v in p.vertices[1:-1]:
        assert not g.occupancy[F3.cell_of(v)]
    # segments stay out of the disk
    for a, b in p.segments():
        for t in np.linspace(0, 1, 11):
            x, y = a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])
            assert math.hypot(x, y) > 1


def test_extract_path_across_annulus_is_no_path():
    g = rasterize(RING, F3, "outer")
    with pytest.raises(NoPathError):
        extract_path(g, (0.01, 0.02), (2.7, 2.7))


def test_extract_path_from_occupied_cell_is_domain_error():
    g = rasterize(Scene((Disk(0, 0, 1),)), F3, "outer")
    with pytest.raises(DomainError):
        extract_path(g, (0, 0), (2, 2))


# -- component and whole-set simple connectivity ---------------------------------


def test_disk_component_simply_connected():
    g = rasterize(Scene((Disk(0, 0, 1),)), F3, "outer")
    lab = label_components(g, "occupied")
    assert component_simply_connected(g, lab, 0).verdict == "connected"


def test_annulus_component_not_simply_connected():
    g = rasterize(RING, Frame(-3, -3, 3, 3, 0.05), "inner")
    lab = label_components(g, "occupied")
    cert = component_simply_connected(g, lab, 0)
    assert cert.verdict == "disconnected"
    assert math.hypot(*cert.witness) < 1


def test_horseshoe_component_simply_connected_at_fine_h():
    shoe = horseshoe(0, 0, 3.0, 0.5, 0.6)
    g = rasterize(Scene((shoe,)), Frame(-3, -3, 3, 3, 0.6 / 4), "outer")
    lab = label_components(g, "occupied")
    assert lab.count == 1
    assert component_simply_connected(g, lab, 0).verdict == "connected"


def test_invalid_component_id():
    g = rasterize(Scene((Disk(0, 0, 1),)), F3, "outer")
    lab = label_components(g, "occupied")
    with pytest.raises(DomainError):
        component_simply_connected(g, lab, 5)


def test_two_disks_all_simply_connected():
    g = rasterize(Scene((Disk(-1.5, 0, 1), Disk(1.5, 0, 1))), Frame(-4, -4, 4, 4, 0.125), "outer")
    assert all_simply_connected(g).verdict == "connected"
    assert per_component_verdict(g) == "connected"


def test_disk_and_annulus_not_all_simply_connected():
    s = Scene((Disk(-2.5, 0, 0.8), Annulus(1.5, 0, 0.8, 1.8)))
    g = rasterize(s, Frame(-4, -4, 4, 4, 0.05), "inner")
    assert all_simply_connected(g).verdict == "disconnected"
    assert per_component_verdict(g) == "disconnected"


def test_empty_grid_vacuously_simply_connected():
    assert all_simply_connected(clear()).verdict == "connected"
    assert per_component_verdict(clear()) == "connected"


# -- winding numbers ---------------------------------------------------------------

SQUARE = PolyPath(((-1, -1), (1, -1), (1, 1), (-1, 1)), closed=True)
EIGHT = PolyPath(((0, 0), (1, 1), (1, -1), (-1, 1), (-1, -1)), closed=True)


def test_square_winding():
    assert winding_number(SQUARE, (0, 0)) == 1
    assert winding_number(SQUARE.reversed(), (0, 0)) == -1
    assert winding_number(SQUARE, (3, 0.5)) == 0


def test_figure_eight_lobes_match_angle_oracle():
    # rounded angle-summation values: right lobe -1, left lobe +1
    assert winding_number(EIGHT, (0.5, 0)) == -1
    assert winding_number(EIGHT, (-0.5, 0)) == 1
    assert winding_number(EIGHT, (3, 0)) == 0
    for z in ((0.5, 0.1), (-0.7, -0.2), (0.2, 0.9)):
        assert winding_number(EIGHT, z) == round(angle_winding(EIGHT.vertices, z))


def test_winding_on_curve_is_degenerate():
    with pytest.raises(DegeneratePositionError):
        winding_number(SQUARE, (1, 0))


def test_winding_of_open_path_is_domain_error():
    with pytest.raises(DomainError):
        winding_number(PolyPath(((0, 0), (1, 0), (1, 1)), closed=False), (0.5, 0.2))


def test_total_winding_sums():
    inner = PolyPath(((-0.5, -0.5), (0.5, -0.5), (0.5, 0.5), (-0.5, 0.5)), closed=True)
    assert total_winding([SQUARE, inner], (0, 0)) == 2
    assert total_winding([SQUARE, inner.reversed()], (0, 0)) == 0


# -- PGM masks ------------------------------------------------------------------------


def test_ring_mask_pgm():
    g = load_pgm(FIXTURES / "ring_mask.pgm")
    assert g.shape == (16, 16)
    lab = label_components(g, "complement")
    assert lab.count == 2
    cert = sphere_connected_complement(g)
    assert cert.verdict == "undecided"  # outer mode never yields disconnected
    cert = sphere_connected_complement(load_pgm(FIXTURES / "ring_mask.pgm", mode="inner"))
    assert cert.verdict == "disconnected"


def test_block_mask_p5():
    g = load_pgm(FIXTURES / "block_mask.pgm")
    assert g.shape == (12, 12)
    assert sphere_connected_complement(g).verdict == "connected"


def test_pgm_round_trip_and_orientation():
    occ = np.zeros((7, 9), dtype=bool)
    occ[2, 3] = True  # second row above the bottom
    g = mask_grid(np.flipud(occ))
    assert g.occupancy[2, 3]
    back = read_pgm(write_pgm(g.occupancy))
    assert np.array_equal(np.flipud(back), g.occupancy)


@pytest.mark.parametrize(
    "data",
    [b"P3\n5 5\n1\n", b"P2\n5 5\n1\n0 0 0", b"P5\n5 5\n255\n\x00\x00", b"P2\n2 2\n1\n0 0 0 0\n", b"P2\n5 5\n1\n" + b"2 " * 25],
)
def test_bad_pgm_is_input_error(data):
    with pytest.raises(InputError):
        mask_grid(read_pgm(data))


def test_pgm_border_is_cleared():
    g = mask_grid(np.ones((6, 6), dtype=bool))
    assert g.occupancy.sum() == 16
    assert label_components(g, "complement").count == 1


def test_rect_polygon_scene_complement_single_unbounded():
    s = Scene((Rect(-1, -1, 1, 0), Polygon(((0, 0.5), (2, 0.5), (1, 2)))))
    lab = label_components(rasterize(s, F3, "inner"), "complement")
    assert len([c for c in lab.components if not c.bounded]) == 1
