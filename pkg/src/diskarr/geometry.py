"""Exact rational geometry: points, segments, simple polygons, and the
general-position checks the arrangement code relies on.

Every predicate works on :class:`fractions.Fraction` coordinates, so no
result ever depends on rounding.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence


class GeometryError(ValueError):
    """Raised for invalid geometric input (degenerate or non-simple polygons)."""


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def pt(x, y) -> Point:
    """Build a point from anything :class:`Fraction` accepts (ints, strings, Fractions)."""
    return Point(Fraction(x), Fraction(y))


Segment = tuple[Point, Point]


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear."""
    c = cross(p, q, r)
    return (c > 0) - (c < 0)


def signed_area(points: Sequence[Point]) -> Fraction:
    total = Fraction(0)
    n = len(points)
    for k in range(n):
        a, b = points[k], points[(k + 1) % n]
        total += a.x * b.y - a.y * b.x
    return total / 2


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment ab (assumes nothing about collinearity)."""
    if not (min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)):
        return False
    return orientation(a, b, p) == 0


@dataclass(frozen=True)
class Touch:
    """Segments meet at a single point that is an endpoint of at least one of them."""

    point: Point


@dataclass(frozen=True)
class Overlap:
    """Collinear segments sharing a sub-segment of positive length."""

    start: Point
    end: Point


def segment_intersection(s1: Segment, s2: Segment) -> Point | Touch | Overlap | None:
    """Classify how two closed segments meet.

    Returns the crossing point for a proper crossing of the two interiors,
    a :class:`Touch` when they meet in one point that is an endpoint of
    either segment, an :class:`Overlap` for a collinear overlap of positive
    length, and ``None`` when they are disjoint.
    """
    a, b = s1
    c, d = s2
    if a == b or c == d:
        raise GeometryError("degenerate segment")
    # bounding-box rejection first; it is the common case
    if (max(a.x, b.x) < min(c.x, d.x) or max(c.x, d.x) < min(a.x, b.x)
            or max(a.y, b.y) < min(c.y, d.y) or max(c.y, d.y) < min(a.y, b.y)):
        return None
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 == o2 == 0:
        # collinear: project on the dominant axis
        key = (lambda p: (p.x, p.y)) if a.x != b.x else (lambda p: (p.y, p.x))
        lo1, hi1 = sorted((a, b), key=key)
        lo2, hi2 = sorted((c, d), key=key)
        lo = max(lo1, lo2, key=key)
        hi = min(hi1, hi2, key=key)
        if key(lo) > key(hi):
            return None
        if lo == hi:
            return Touch(lo)
        return Overlap(*sorted((lo, hi)))
    if o1 * o2 < 0 and o3 * o4 < 0:
        return _line_crossing(a, b, c, d)
    if o1 * o2 <= 0 and o3 * o4 <= 0:
        # one endpoint lies on the other segment
        for p, (u, v) in ((c, s1), (d, s1), (a, s2), (b, s2)):
            if _on_segment(p, u, v):
                return Touch(p)
    return None


def _line_crossing(a: Point, b: Point, c: Point, d: Point) -> Point:
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    denom = rx * sy - ry * sx
    t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom
    return Point(a.x + t * rx, a.y + t * ry)


@dataclass(frozen=True)
class Disk:
    """Closed region bounded by a simple counterclockwise polygon."""

    id: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = tuple(Point(Fraction(p[0]), Fraction(p[1])) for p in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 3:
            raise GeometryError(f"disk {self.id}: needs at least 3 vertices")
        for k in range(len(vs)):
            if vs[k] == vs[(k + 1) % len(vs)]:
                raise GeometryError(f"disk {self.id}: repeated consecutive vertex {vs[k]}")
        area = signed_area(vs)
        if area == 0:
            raise GeometryError(f"disk {self.id}: zero area")
        if area < 0:
            raise GeometryError(f"disk {self.id}: vertices must be counterclockwise")
        bad = polygon_self_intersection(vs)
        if bad is not None:
            raise GeometryError(f"disk {self.id}: polygon is not simple (edges {bad[0]} and {bad[1]})")

    @classmethod
    def from_points(cls, id: int, points: Iterable) -> Disk:
        """Like the constructor but accepts either orientation."""
        vs = [Point(Fraction(p[0]), Fraction(p[1])) for p in points]
        if len(vs) >= 3 and signed_area(vs) < 0:
            vs.reverse()
        return cls(id, tuple(vs))

    def canonical(self) -> Disk:
        """Same polygon, listed from its lexicographically smallest vertex."""
        k = self.vertices.index(min(self.vertices))
        return Disk(self.id, self.vertices[k:] + self.vertices[:k])

    @property
    def edges(self) -> list[Segment]:
        vs = self.vertices
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]

    @property
    def area(self) -> Fraction:
        return signed_area(self.vertices)

    def bbox(self):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def polygon_self_intersection(vs: Sequence[Point]) -> tuple[int, int] | None:
    """Return indices of two offending edges if the closed polyline is not simple."""
    n = len(vs)
    edges = [(vs[k], vs[(k + 1) % n]) for k in range(n)]
    boxes = [(min(a.x, b.x), min(a.y, b.y), max(a.x, b.x), max(a.y, b.y)) for a, b in edges]
    for i in range(n):
        a, b = edges[i]
        for j in range(i + 1, n):
            bi, bj = boxes[i], boxes[j]
            if bi[2] < bj[0] or bj[2] < bi[0] or bi[3] < bj[1] or bj[3] < bi[1]:
                continue
            hit = segment_intersection(edges[i], edges[j])
            if hit is None:
                continue
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent and isinstance(hit, Touch):
                # the shared corner is allowed, nothing else
                shared = b if j == i + 1 else a
                if hit.point == shared:
                    continue
            return i, j
    return None


INSIDE, BOUNDARY, OUTSIDE = "inside", "boundary", "outside"


def point_in_polygon(p: Point, vs: Sequence[Point]) -> str:
    """Exact crossing-number test with explicit boundary detection."""
    n = len(vs)
    inside = False
    for k in range(n):
        a, b = vs[k], vs[(k + 1) % n]
        if _on_segment(p, a, b):
            return BOUNDARY
        # half-open rule on y avoids double counting at vertices
        if (a.y > p.y) != (b.y > p.y):
            x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x > p.x:
                inside = not inside
    return INSIDE if inside else OUTSIDE


def point_in_disk(p: Point, disk: Disk) -> str:
    return point_in_polygon(p, disk.vertices)


def winding_number(p: Point, vs: Sequence[Point]) -> int:
    """Winding number of the closed polyline around p (p must not be on it)."""
    w = 0
    n = len(vs)
    for k in range(n):
        a, b = vs[k], vs[(k + 1) % n]
        if a.y <= p.y:
            if b.y > p.y and orientation(a, b, p) > 0:
                w += 1
        elif b.y <= p.y and orientation(a, b, p) < 0:
            w -= 1
    return w


# -- general position -------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str  # "touch", "overlap" or "triple"
    disks: tuple[int, ...]
    witness: Point


@dataclass
class GeneralPositionReport:
    violations: list[Violation] = field(default_factory=list)
    crossings: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"general position ok ({self.crossings} crossings)"
        lines = [f"{len(self.violations)} general-position violation(s):"]
        for v in self.violations[:20]:
            lines.append(f"  {v.kind} disks={v.disks} at ({v.witness.x}, {v.witness.y})")
        return "\n".join(lines)


class GeneralPositionError(GeometryError):
    def __init__(self, report: GeneralPositionReport):
        super().__init__(report.summary())
        self.report = report


def _candidate_pairs(disks: Sequence[Disk]):
    """Yield (disk a, edge a, disk b, edge b) for boxes that overlap, a < b."""
    boxes = [d.bbox() for d in disks]
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            bi, bj = boxes[i], boxes[j]
            if bi[2] < bj[0] or bj[2] < bi[0] or bi[3] < bj[1] or bj[3] < bi[1]:
                continue
            ej = disks[j].edges
            ej_boxes = [(min(c.x, d.x), min(c.y, d.y), max(c.x, d.x), max(c.y, d.y)) for c, d in ej]
            for ka, ea in enumerate(disks[i].edges):
                a, b = ea
                x0, y0, x1, y1 = min(a.x, b.x), min(a.y, b.y), max(a.x, b.x), max(a.y, b.y)
                for kb, box in enumerate(ej_boxes):
                    if x1 < box[0] or box[2] < x0 or y1 < box[1] or box[3] < y0:
                        continue
                    yield i, ka, j, kb


def boundary_crossings(disks: Sequence[Disk]):
    """All intersections between edges of distinct disks.

    Yields ``(i, edge_i, j, edge_j, result)`` with ``result`` as returned by
    :func:`segment_intersection` (never ``None``).
    """
    for i, ka, j, kb in _candidate_pairs(disks):
        hit = segment_intersection(disks[i].edges[ka], disks[j].edges[kb])
        if hit is not None:
            yield i, ka, j, kb, hit


def scan_boundaries(disks: Sequence[Disk]):
    """Validate general position and collect proper crossings in one pass.

    Returns ``(report, crossings)`` where ``crossings`` lists
    ``(i, edge_i, j, edge_j, point)`` by disk position.
    """
    report = GeneralPositionReport()
    crossings = []
    at_point: dict[Point, set[int]] = defaultdict(set)
    for i, ka, j, kb, hit in boundary_crossings(disks):
        di, dj = disks[i].id, disks[j].id
        if isinstance(hit, Touch):
            report.violations.append(Violation("touch", (di, dj), hit.point))
        elif isinstance(hit, Overlap):
            report.violations.append(Violation("overlap", (di, dj), hit.start))
        else:
            crossings.append((i, ka, j, kb, hit))
            at_point[hit].update((di, dj))
    report.crossings = len(crossings)
    for p, ids in sorted(at_point.items()):
        if len(ids) >= 3:
            report.violations.append(Violation("triple", tuple(sorted(ids)), p))
    return report, crossings


def validate_general_position(disks: Sequence[Disk]) -> GeneralPositionReport:
    """Check proper crossings only, no touching, no collinear overlap, no triple points."""
    return scan_boundaries(disks)[0]
