"""Half-edge (DCEL) construction of the arrangement induced by disk boundaries.

Faces may have holes.  Every face carries the set of disks containing it,
so ply and the dual graph fall out directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .geometry import (
    INSIDE,
    OUTSIDE,
    Disk,
    GeneralPositionError,
    GeometryError,
    Point,
    point_in_disk,
    point_in_polygon,
    scan_boundaries,
    signed_area,
)

CROSSING, CORNER = "crossing", "corner"


class BoundaryPointError(GeometryError):
    """A query point lies on a disk boundary, where no face is defined."""


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def groups(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass(eq=False)
class Vertex:
    id: int
    point: Point
    kind: str
    outgoing: list[int] = field(default_factory=list)  # counterclockwise

    @property
    def degree(self) -> int:
        return len(self.outgoing)


@dataclass(eq=False)
class HalfEdge:
    id: int
    origin: int
    twin: int
    disk: int
    # True when the half-edge runs counterclockwise along its disk, i.e. the
    # disk interior is on its left
    forward: bool
    next: int = -1
    face: int = -1


@dataclass(eq=False)
class Face:
    id: int
    outer: tuple[int, ...] | None
    holes: list[tuple[int, ...]] = field(default_factory=list)
    label: frozenset = frozenset()
    rep: Point | None = None
    area: Fraction = Fraction(0)

    @property
    def ply(self) -> int:
        return len(self.label)

    @property
    def bounded(self) -> bool:
        return self.outer is not None

    def cycles(self):
        if self.outer is not None:
            yield self.outer
        yield from self.holes


class Arrangement:
    """Immutable once :func:`build_arrangement` returns it."""

    def __init__(self, disks, vertices, halfedges, faces, components):
        self.disks: list[Disk] = disks
        self.vertices: list[Vertex] = vertices
        self.halfedges: list[HalfEdge] = halfedges
        self.faces: list[Face] = faces
        self.unbounded: Face = faces[0]
        self.curve_components: int = components
        adj: list[set[int]] = [set() for _ in faces]
        for h in halfedges:
            adj[h.face].add(halfedges[h.twin].face)
        self._adj = [sorted(a) for a in adj]
        self._outer_polys = {
            f.id: [self.vertices[self.halfedges[h].origin].point for h in f.outer]
            for f in faces if f.outer is not None
        }

    @property
    def n(self) -> int:
        return len(self.disks)

    @property
    def num_edges(self) -> int:
        return len(self.halfedges) // 2

    def dest(self, h: int) -> int:
        return self.halfedges[self.halfedges[h].twin].origin

    def segment(self, h: int) -> tuple[Point, Point]:
        e = self.halfedges[h]
        return self.vertices[e.origin].point, self.vertices[self.dest(h)].point

    def adjacency(self) -> list[list[int]]:
        return self._adj

    def neighbors(self, f: Face | int) -> set[Face]:
        fid = f if isinstance(f, int) else f.id
        return {self.faces[g] for g in self._adj[fid]}

    def euler_characteristic(self) -> int:
        return len(self.vertices) - self.num_edges + len(self.faces)

    def locate_face(self, p: Point) -> Face:
        """Face whose interior contains ``p``; raises on boundary points."""
        p = Point(Fraction(p[0]), Fraction(p[1]))
        for d in self.disks:
            if point_in_disk(p, d) == "boundary":
                raise BoundaryPointError(f"{p} lies on the boundary of disk {d.id}")
        best = self.unbounded
        for fid, poly in self._outer_polys.items():
            face = self.faces[fid]
            if best.bounded and face.area >= best.area:
                continue
            if point_in_polygon(p, poly) == INSIDE:
                best = face
        return best

    def face_polygon(self, f: Face) -> list[list[Point]]:
        """Vertex loops of every boundary cycle of ``f`` (outer first)."""
        return [[self.vertices[self.halfedges[h].origin].point for h in cyc] for cyc in f.cycles()]


def _direction_cmp(u, v) -> int:
    """Counterclockwise angular order of direction vectors starting at angle 0."""
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _ray_hit(m: Point, nrm, a: Point, b: Point):
    """Smallest t > 0 with m + t*nrm on segment ab, or None."""
    ex, ey = b.x - a.x, b.y - a.y
    den = nrm[0] * ey - nrm[1] * ex
    wx, wy = a.x - m.x, a.y - m.y
    if den == 0:
        if wx * nrm[1] - wy * nrm[0] != 0:
            return None
        # collinear with the ray: first endpoint ahead of m
        ts = []
        for p in (a, b):
            dx, dy = p.x - m.x, p.y - m.y
            t = (dx * nrm[0] + dy * nrm[1]) / (nrm[0] ** 2 + nrm[1] ** 2)
            if t > 0:
                ts.append(t)
        return min(ts) if ts else None
    t = (wx * ey - wy * ex) / den
    s = (wx * nrm[1] - wy * nrm[0]) / den
    if t > 0 and 0 <= s <= 1:
        return t
    return None


def _interior_point(arr_segments, a: Point, b: Point) -> Point:
    """A point strictly left of the edge ab, closer than anything else."""
    m = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    nrm = (-(b.y - a.y), b.x - a.x)
    best = None
    for p, q in arr_segments:
        t = _ray_hit(m, nrm, p, q)
        if t is not None and (best is None or t < best):
            best = t
    t = Fraction(1) if best is None else best / 2
    return Point(m.x + t * nrm[0], m.y + t * nrm[1])


def build_arrangement(disks: Sequence[Disk]) -> Arrangement:
    """Exact arrangement of the disk boundaries.

    Raises :class:`GeneralPositionError` if the input violates general position.
    """
    disks = list(disks)
    for k, d in enumerate(disks):
        if d.id != k:
            raise GeometryError(f"disk at position {k} has id {d.id}; ids must be 0..n-1 in order")
    report, crossings = scan_boundaries(disks)
    if not report.ok:
        raise GeneralPositionError(report)

    splits: dict[tuple[int, int], list[Point]] = {}
    uf = UnionFind(len(disks))
    kinds: dict[Point, str] = {}
    for i, ka, j, kb, p in crossings:
        splits.setdefault((i, ka), []).append(p)
        splits.setdefault((j, kb), []).append(p)
        uf.union(i, j)
        kinds[p] = CROSSING
    for d in disks:
        for p in d.vertices:
            kinds[p] = CORNER

    vertices = [Vertex(k, p, kinds[p]) for k, p in enumerate(sorted(kinds))]
    vid = {v.point: v.id for v in vertices}

    halfedges: list[HalfEdge] = []
    for d in disks:
        for k, (a, b) in enumerate(d.edges):
            inner = splits.get((d.id, k), [])
            dx, dy = b.x - a.x, b.y - a.y
            inner.sort(key=lambda p: (p.x - a.x) * dx + (p.y - a.y) * dy)
            chain = [a, *inner, b]
            for p, q in zip(chain, chain[1:]):
                h = len(halfedges)
                halfedges.append(HalfEdge(h, vid[p], h + 1, d.id, True))
                halfedges.append(HalfEdge(h + 1, vid[q], h, d.id, False))

    pts = [v.point for v in vertices]
    for h in halfedges:
        vertices[h.origin].outgoing.append(h.id)
    for v in vertices:
        def direction(h, _o=v.point):
            q = pts[halfedges[halfedges[h].twin].origin]
            return (q.x - _o.x, q.y - _o.y)
        v.outgoing.sort(key=cmp_to_key(lambda g, h: _direction_cmp(direction(g), direction(h))))
        expected = 4 if v.kind == CROSSING else 2
        if v.degree != expected:
            raise GeometryError(f"vertex {v.point} has degree {v.degree}, expected {expected}")

    position = {}
    for v in vertices:
        for k, h in enumerate(v.outgoing):
            position[h] = k
    for h in halfedges:
        v = vertices[halfedges[h.twin].origin]
        h.next = v.outgoing[position[h.twin] - 1]

    # trace boundary cycles
    seen = [False] * len(halfedges)
    cycles = []
    for h in halfedges:
        if seen[h.id]:
            continue
        cyc = []
        g = h.id
        while not seen[g]:
            seen[g] = True
            cyc.append(g)
            g = halfedges[g].next
        area = signed_area([pts[halfedges[g].origin] for g in cyc])
        cycles.append((tuple(cyc), area))

    faces = [Face(0, None)]
    holes = []
    for cyc, area in cycles:
        if area > 0:
            faces.append(Face(len(faces), cyc, area=area))
        else:
            holes.append(cyc)

    comp_of_face = {f.id: uf.find(halfedges[f.outer[0]].disk) for f in faces[1:]}
    for cyc in holes:
        comp = uf.find(halfedges[cyc[0]].disk)
        q = pts[halfedges[cyc[0]].origin]
        parent = faces[0]
        for f in faces[1:]:
            if comp_of_face[f.id] == comp or (parent.bounded and f.area >= parent.area):
                continue
            if point_in_polygon(q, [pts[halfedges[g].origin] for g in f.outer]) == INSIDE:
                parent = f
        parent.holes.append(cyc)

    for f in faces:
        for cyc in f.cycles():
            for g in cyc:
                halfedges[g].face = f.id

    segments = [e for d in disks for e in d.edges]
    lo_x = min(p.x for p in pts)
    lo_y = min(p.y for p in pts)
    faces[0].rep = Point(lo_x - 1, lo_y - 1)
    for f in faces[1:]:
        h = min(f.outer, key=lambda g: (pts[halfedges[g].origin].x + pts[halfedges[halfedges[g].twin].origin].x,
                                        pts[halfedges[g].origin].y + pts[halfedges[halfedges[g].twin].origin].y))
        f.rep = _interior_point(segments, pts[halfedges[h].origin], pts[halfedges[halfedges[h].twin].origin])
    for f in faces:
        f.label = frozenset(d.id for d in disks if point_in_disk(f.rep, d) == INSIDE)

    components = len(uf.groups()) if disks else 0
    return Arrangement(disks, vertices, halfedges, faces, components)


__all__ = [
    "Arrangement",
    "BoundaryPointError",
    "CORNER",
    "CROSSING",
    "Face",
    "HalfEdge",
    "OUTSIDE",
    "UnionFind",
    "Vertex",
    "build_arrangement",
]
