"""The raster oracle against the exact pipeline, plus the oracle's own guards."""
import numpy as np
import pytest

from conftest import SMALL, rect, resolvable_random
from diskarr.arrangement import build_arrangement
from diskarr.generators import comb_pair, grid_instance, spiral_pair
from diskarr.geometry import Disk, pt
from diskarr.oracle import (
    AGREE,
    CONCLUSIVE,
    INCONCLUSIVE,
    compare_with_exact,
    feature_size,
    rasterize,
    required_resolution,
)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_small_instances_agree(name):
    cmp = compare_with_exact(build_arrangement(SMALL[name]()))
    assert cmp.passed, cmp.notes
    assert cmp.raster_faces == cmp.exact_faces and cmp.adjacency_ok


def test_octagram_has_ten_faces():
    cmp = compare_with_exact(build_arrangement(SMALL["octagram"]()))
    assert cmp.status == CONCLUSIVE and cmp.raster_faces == 10


def test_comb_face_count():
    cmp = compare_with_exact(build_arrangement(comb_pair(3).disks))
    assert cmp.passed and cmp.raster_faces == 8


def test_spiral_marker_distance():
    inst = spiral_pair(4)
    cmp = compare_with_exact(build_arrangement(inst.disks), pairs=[(inst.markers["inner"], inst.markers["outer"])])
    assert cmp.passed
    last = cmp.distance_samples[-1]
    assert last["exact"] == last["raster"] == 8


def test_same_point_sample_is_zero():
    cmp = compare_with_exact(build_arrangement(grid_instance(2, 1).disks))
    first = cmp.distance_samples[0]
    assert first["s"] == first["t"] and first["exact"] == first["raster"] == 0
    assert len(cmp.distance_samples) == 10


def test_too_coarse_is_inconclusive():
    # a sliver 1/1000 wide next to a unit square cannot be resolved by 3200 pixels
    thin = [rect(0, 0, 0, 10, 10), Disk(1, (pt(5, -1), pt(20, 5), pt("10.001", 5)))]
    a = build_arrangement(thin)
    cmp = compare_with_exact(a, max_resolution=3200)
    assert cmp.status == INCONCLUSIVE and not cmp.passed
    assert "feature size" in cmp.notes[0]


def test_unstable_raster_is_inconclusive():
    # a needle whose tip tapers below a pixel even after refinement
    needle = [rect(0, 0, 0, 400, 400), Disk(1, (pt(-10, 100), pt(600, 195), pt(-10, 101)))]
    cmp = compare_with_exact(build_arrangement(needle), resolution=100, max_resolution=800)
    assert cmp.status == INCONCLUSIVE and not cmp.passed


def test_feature_size():
    assert feature_size([rect(0, 0, 0, 1, 1), rect(1, 3, 0, 4, 1)]) == pytest.approx(1.0)
    # the crossing points of the lens sit one unit from the opposite edges
    assert feature_size(SMALL["lens"]()) == pytest.approx(1.0)
    assert required_resolution([rect(0, 0, 0, 1, 1)]) == int(np.ceil(1.1 * 3 / 1.0))


def test_raster_regions_and_weights():
    r = rasterize(SMALL["lens"](), 80)
    assert r.count == 4
    assert sorted(r.masks) == [0, 1, 2, 3]
    # the outside touches the purple region only diagonally at crossings: weight 2, not adjacent
    outside = r.masks.index(0)
    purple = r.masks.index(3)
    pair = tuple(sorted((outside, purple)))
    assert r.weights.get(pair, 2) == 2 and pair not in r.adjacency()


@pytest.mark.parametrize("seed, inst", resolvable_random(5), ids=lambda x: str(x) if isinstance(x, int) else "")
def test_random_instances_agree(seed, inst):
    cmp = compare_with_exact(build_arrangement(inst.disks))
    assert cmp.passed, cmp.notes
    assert cmp.status == CONCLUSIVE and cmp.agreement == AGREE


def test_sub_pixel_neck_is_inconclusive():
    # one face here has a neck 0.05 units wide; rasters up to 1600 split it in two
    from diskarr.generators import random_instance
    a = build_arrangement(random_instance(3, 12, 7).disks)
    cmp = compare_with_exact(a)
    assert cmp.status == INCONCLUSIVE and cmp.agreement is None
