import random
from fractions import Fraction

import pytest

from conftest import SMALL, rect
from diskarr.arrangement import CORNER, CROSSING, BoundaryPointError, UnionFind, build_arrangement
from diskarr.generators import comb_pair, grid_instance, random_instance, spiral_pair
from diskarr.geometry import INSIDE, GeneralPositionError, point_in_disk, pt


def instances():
    for name, make in sorted(SMALL.items()):
        yield name, make()
    yield "spiral5", spiral_pair(5).disks
    yield "comb3", comb_pair(3).disks
    yield "grid31", grid_instance(3, 1).disks
    for seed in range(6):
        yield f"random{seed}", random_instance(2 + seed % 3, 10, seed).disks


ALL = list(instances())


@pytest.fixture(params=[name for name, _ in ALL])
def arr(request):
    return build_arrangement(dict(ALL)[request.param])


def test_single_square():
    a = build_arrangement([rect(0, 0, 0, 1, 1)])
    assert (len(a.vertices), a.num_edges, len(a.faces)) == (4, 4, 2)
    assert a.unbounded.label == frozenset()
    inside = [f for f in a.faces if f.bounded]
    assert len(inside) == 1 and inside[0].label == {0}
    assert all(v.kind == CORNER for v in a.vertices)


@pytest.mark.parametrize("name, counts", [
    ("lens", (10, 12, 4)),
    ("plus", (12, 16, 6)),
    ("octagram", (16, 24, 10)),
    ("bars_comb", (48, 74, 28)),
])
def test_face_counts(name, counts):
    # frozen from runs cross-checked against the raster oracle (tests/test_oracle.py)
    a = build_arrangement(SMALL[name]())
    assert (len(a.vertices), a.num_edges, len(a.faces)) == counts


def test_octagram_faces_by_ply():
    a = build_arrangement(SMALL["octagram"]())
    plies = sorted(f.ply for f in a.faces)
    assert plies == [0] + [1] * 8 + [2]


def test_halfedge_invariants(arr):
    hs = arr.halfedges
    for h in hs:
        assert hs[h.twin].twin == h.id
        assert hs[h.twin].origin == arr.dest(h.id)
        assert hs[h.twin].disk == h.disk
        assert hs[h.twin].forward != h.forward
        # next continues from the destination along the same face
        assert hs[h.next].origin == arr.dest(h.id)
        assert hs[h.next].face == h.face
    # next pointers form a permutation, hence closed cycles
    assert sorted(h.next for h in hs) == list(range(len(hs)))


def test_faces_own_their_cycles(arr):
    seen = []
    for f in arr.faces:
        for cyc in f.cycles():
            for h in cyc:
                assert arr.halfedges[h].face == f.id
            seen.extend(cyc)
    assert sorted(seen) == list(range(len(arr.halfedges)))
    assert arr.unbounded.outer is None
    assert sum(1 for f in arr.faces if not f.bounded) == 1


def test_vertex_degrees(arr):
    for v in arr.vertices:
        assert v.degree == (4 if v.kind == CROSSING else 2)


def test_euler_relation(arr):
    assert arr.euler_characteristic() == 1 + arr.curve_components


def test_label_flip(arr):
    for h in arr.halfedges:
        left = arr.faces[h.face].label
        right = arr.faces[arr.halfedges[h.twin].face].label
        assert left ^ right == {h.disk}
        # the disk lies on the left of forward half-edges
        assert (h.disk in left) == h.forward


def test_labels_match_membership(arr):
    for f in arr.faces:
        assert f.label == {d.id for d in arr.disks if point_in_disk(f.rep, d) == INSIDE}


def test_double_counting(arr):
    per_disk = sum(sum(1 for f in arr.faces if d.id in f.label) for d in arr.disks)
    assert sum(f.ply for f in arr.faces) == per_disk


def test_locate_round_trip(arr):
    for f in arr.faces:
        assert arr.locate_face(f.rep) is f


def test_locate_far_point():
    a = build_arrangement(spiral_pair(3).disks)
    assert a.locate_face(pt(10**6, -(10**6))) is a.unbounded


def test_locate_random_points_against_membership():
    rng = random.Random(11)
    checked = 0
    seed = 0
    while checked < 1000:
        inst = random_instance(3, 10, 500 + seed)
        seed += 1
        a = build_arrangement(inst.disks)
        xs = [int(p.x) for d in inst.disks for p in d.vertices]
        ys = [int(p.y) for d in inst.disks for p in d.vertices]
        for _ in range(100):
            p = pt(Fraction(rng.randint(min(xs) - 10, max(xs) + 10)) + Fraction(rng.randint(1, 10), 11),
                   Fraction(rng.randint(min(ys) - 10, max(ys) + 10)) + Fraction(rng.randint(1, 10), 11))
            try:
                f = a.locate_face(p)
            except BoundaryPointError:
                continue
            assert f.label == {d.id for d in a.disks if point_in_disk(p, d) == INSIDE}
            checked += 1


def test_locate_rejects_boundary_points():
    a = build_arrangement([rect(0, 0, 0, 1, 1)])
    with pytest.raises(BoundaryPointError):
        a.locate_face(pt(1, Fraction(1, 2)))


def test_nested_disks_make_a_hole():
    a = build_arrangement([rect(0, 0, 0, 10, 10), rect(1, 3, 3, 5, 5)])
    assert len(a.faces) == 3 and a.curve_components == 2
    ring = a.locate_face(pt(1, 1))
    assert ring.label == {0} and len(ring.holes) == 1
    assert a.locate_face(pt(4, 4)).label == {0, 1}
    assert a.euler_characteristic() == 3


def test_neighbors_examples():
    a = build_arrangement([rect(0, 0, 0, 1, 1)])
    inside = next(f for f in a.faces if f.bounded)
    assert a.neighbors(inside) == {a.unbounded}

    plus = build_arrangement(SMALL["plus"]())
    centre = next(f for f in plus.faces if f.ply == 2)
    arms = {f for f in plus.faces if f.ply == 1}
    assert plus.neighbors(centre) == arms

    # in a lens the purple face meets the outside only at the two crossing vertices
    lens = build_arrangement(SMALL["lens"]())
    purple = next(f for f in lens.faces if f.ply == 2)
    assert lens.unbounded not in lens.neighbors(purple)
    assert {f.ply for f in lens.neighbors(purple)} == {1}


def test_unbounded_neighbors_of_spiral():
    a = build_arrangement(spiral_pair(6).disks)
    labels = sorted(sorted(f.label) for f in a.neighbors(a.unbounded))
    # two red and two blue faces; the raster oracle sees the same four
    assert labels == [[0], [0], [1], [1]]


def test_build_is_deterministic():
    disks = random_instance(4, 10, 3).disks
    a, b = build_arrangement(disks), build_arrangement(disks)
    assert [v.point for v in a.vertices] == [v.point for v in b.vertices]
    assert [(h.origin, h.twin, h.next, h.face) for h in a.halfedges] == \
        [(h.origin, h.twin, h.next, h.face) for h in b.halfedges]
    assert [f.label for f in a.faces] == [f.label for f in b.faces]


def test_vertices_sorted_by_coordinates(arr):
    pts = [v.point for v in arr.vertices]
    assert pts == sorted(pts)


def test_rejects_general_position_violations():
    with pytest.raises(GeneralPositionError) as exc:
        build_arrangement([rect(0, 0, 0, 2, 2), rect(1, 2, 0, 4, 2)])
    assert not exc.value.report.ok


def test_rejects_bad_ids():
    with pytest.raises(ValueError):
        build_arrangement([rect(1, 0, 0, 1, 1)])


def test_union_find():
    uf = UnionFind(5)
    assert uf.union(0, 1) and uf.union(3, 4) and not uf.union(1, 0)
    assert sorted(sorted(g) for g in uf.groups().values()) == [[0, 1], [2], [3, 4]]
