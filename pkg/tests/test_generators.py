import pytest

from diskarr.analysis import diameter, dual_graph, maximal_faces, overlap_number, st_distance
from diskarr.arrangement import build_arrangement
from diskarr.generators import (
    GeneratorError,
    comb_pair,
    grid_instance,
    instance_from_disks,
    random_instance,
    spiral_pair,
    thicken,
)
from diskarr.geometry import GeometryError, pt, validate_general_position
from diskarr.io import serialize_instance


@pytest.mark.parametrize("delta", [2, 3, 4, 5, 6, 7, 8])
def test_spiral_pair(delta):
    inst = spiral_pair(delta)
    assert validate_general_position(inst.disks).ok
    a = build_arrangement(inst.disks)
    assert overlap_number(a) == delta == inst.expected["delta"]
    assert diameter(dual_graph(a)) == 2 * delta == inst.expected["diameter"]
    assert len(maximal_faces(a)) == delta
    d = st_distance(a, inst.markers["inner"], inst.markers["outer"])
    assert d.hops == inst.expected["marker_distance"] == 2 * delta
    # both markers sit in blue-only faces
    assert a.locate_face(inst.markers["inner"]).label == {1}
    assert a.locate_face(inst.markers["outer"]).label == {1}


def test_spiral_rejects_small_delta():
    with pytest.raises(GeneratorError):
        spiral_pair(1)


@pytest.mark.parametrize("n, k", [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2)])
def test_grid_instance(n, k):
    inst = grid_instance(n, k)
    assert validate_general_position(inst.disks).ok
    a = build_arrangement(inst.disks)
    assert overlap_number(a) == 2 * k * k == inst.expected["delta"]
    assert len(maximal_faces(a)) == n * (n - 1) * k * k == inst.expected["mu"]


@pytest.mark.parametrize("n, k", [(1, 1), (2, 0)])
def test_grid_rejects_bad_params(n, k):
    with pytest.raises(GeneratorError):
        grid_instance(n, k)


def test_comb_pair():
    faces = []
    for t in range(1, 6):
        inst = comb_pair(t)
        assert validate_general_position(inst.disks).ok
        a = build_arrangement(inst.disks)
        assert overlap_number(a) == 1
        assert diameter(dual_graph(a)) <= 2
        faces.append(len(a.faces))
    assert faces == [4, 6, 8, 10, 12]
    with pytest.raises(GeneratorError):
        comb_pair(0)


def test_random_is_deterministic():
    a = serialize_instance(random_instance(3, 10, 42))
    b = serialize_instance(random_instance(3, 10, 42))
    assert a == b
    assert a != serialize_instance(random_instance(3, 10, 43))


@pytest.mark.parametrize("seed", range(20))
def test_random_in_general_position(seed):
    inst = random_instance(1 + seed % 5, 10, seed)
    assert inst.n == 1 + seed % 5
    assert validate_general_position(inst.disks).ok
    assert [d.id for d in inst.disks] == list(range(inst.n))


def test_random_rejects_bad_params():
    with pytest.raises(GeneratorError):
        random_instance(0)
    with pytest.raises(GeneratorError):
        random_instance(2, max_vertices=2)


def test_random_gives_a_range_of_overlaps():
    deltas = {overlap_number(build_arrangement(random_instance(2, 10, s).disks)) for s in range(40)}
    assert {0, 1, 2} <= deltas and max(deltas) >= 4


def test_thicken():
    poly = thicken([(0, 0), (4, 0), (4, 4)], 2)
    assert poly == [pt(0, 1), pt(3, 1), pt(3, 4), pt(5, 4), pt(5, -1), pt(0, -1)]
    with pytest.raises(GeometryError):
        thicken([(0, 0), (1, 1)], 1)


def test_instance_from_disks():
    inst = instance_from_disks(comb_pair(2).disks, "mine", teeth=2)
    assert inst.generator == "mine" and inst.params == {"teeth": 2} and inst.expected == {}
