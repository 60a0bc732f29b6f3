"""Disk sets with known ground truth: the spiral pair, the diagonal grid,
the comb pair, and seeded random star-shaped instances.

All coordinates are exact rationals on a small lattice.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .geometry import Disk, GeometryError, Point, pt, validate_general_position


class GeneratorError(ValueError):
    pass


@dataclass
class GeneratedInstance:
    disks: list[Disk]
    generator: str
    params: dict
    expected: dict = field(default_factory=dict)
    markers: dict[str, Point] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.disks)


def thicken(path: Sequence[tuple], width) -> list[Point]:
    """Polygon of a rectilinear polyline swept by a square pen of the given width.

    Consecutive segments must turn by exactly 90 degrees.
    """
    pts = [pt(*p) for p in path]
    h = Fraction(width) / 2
    normals = []
    for a, b in zip(pts, pts[1:]):
        dx, dy = b.x - a.x, b.y - a.y
        if dx != 0 and dy != 0:
            raise GeometryError("thicken() needs axis-parallel segments")
        length = abs(dx) + abs(dy)
        normals.append((-dy / length, dx / length))
    for (ax, ay), (bx, by) in zip(normals, normals[1:]):
        if ax * bx + ay * by != 0:
            raise GeometryError("thicken() needs 90 degree turns")
    left, right = [], []
    for k, p in enumerate(pts):
        if k == 0:
            nx, ny = normals[0]
        elif k == len(pts) - 1:
            nx, ny = normals[-1]
        else:
            nx = normals[k - 1][0] + normals[k][0]
            ny = normals[k - 1][1] + normals[k][1]
        left.append(Point(p.x + h * nx, p.y + h * ny))
        right.append(Point(p.x - h * nx, p.y - h * ny))
    return left + right[::-1]


# -- spiral pair ---------------------------------------------------------------

def _spiral_paths(delta: int):
    """Centerlines of the red and blue spirals with ``delta`` crossings.

    Blue winds counterclockwise outward with arm t at distance 2t+1
    (arms alternate right, top, left, bottom).  Red winds the other way on
    the even levels and jogs horizontally across blue's vertical arms at
    y = 0, once per half turn, alternating right and left.
    """
    def dist(t):
        return 2 * t + 1

    blue = [(dist(1), -1)]
    t = 1
    for _ in range(2 * delta - 2):
        # arm t ends where arm t+1 starts
        side = t % 4
        if side == 1:    # right arm going up, turns onto top arm
            blue.append((dist(t), dist(t + 1)))
        elif side == 2:  # top arm going left
            blue.append((-dist(t + 1), dist(t)))
        elif side == 3:  # left arm going down
            blue.append((-dist(t), -dist(t + 1)))
        else:            # bottom arm going right
            blue.append((dist(t + 1), -dist(t)))
        t += 1
    last_sign = 1 if delta % 2 else -1
    blue.append((last_sign * dist(2 * delta - 1), last_sign))

    red = [(dist(1) - 1, 1), (dist(1) - 1, 0)]
    for j in range(1, delta + 1):
        s = 1 if j % 2 else -1
        d = dist(2 * j - 1)
        red.append((s * (d + 1), 0))
        if j == delta:
            red.append((s * (d + 1), -s))
            break
        red.append((s * (d + 1), -s * (dist(2 * j - 2) + 1)))
        red.append((-s * (dist(2 * j + 1) - 1), -s * (dist(2 * j - 2) + 1)))
        red.append((-s * (dist(2 * j + 1) - 1), 0))
    return red, blue


def spiral_pair(delta: int) -> GeneratedInstance:
    """Two interleaved rectilinear spirals with overlap number ``delta`` and dual diameter 2*delta.

    Disk 0 is red and disk 1 is blue.  Markers ``inner`` and ``outer`` sit
    in the innermost and outermost blue faces.
    """
    if delta < 2:
        raise GeneratorError("spiral_pair needs delta >= 2")
    red, blue = _spiral_paths(delta)
    width = Fraction(1, 2)
    disks = [Disk.from_points(0, thicken(red, width)), Disk.from_points(1, thicken(blue, width))]
    last = blue[-1]
    markers = {
        "inner": pt(blue[0][0], Fraction(blue[0][1]) / 2),
        "outer": pt(last[0], Fraction(last[1]) / 2),
    }
    return GeneratedInstance(
        disks, "spiral", {"delta": delta},
        expected={"delta": delta, "diameter": 2 * delta, "mu": delta, "marker_distance": 2 * delta},
        markers=markers,
    )


# -- diagonal grid -------------------------------------------------------------

def _grid_disk(i: int, n: int, k: int) -> Disk:
    cell = 2 * k + 2
    side = n * cell
    lo = i * cell + Fraction(1, 2)
    hi = (i + 1) * cell - Fraction(1, 2)
    centers = [i * cell + 2 * m for m in range(1, k + 1)]
    h = Fraction(1, 2)
    pts = [(lo, lo)]
    for c in centers:  # bottom side, strains down
        pts += [(c - h, lo), (c - h, 0), (c + h, 0), (c + h, lo)]
    pts.append((hi, lo))
    for c in centers:  # right side, strains right
        pts += [(hi, c - h), (side, c - h), (side, c + h), (hi, c + h)]
    pts.append((hi, hi))
    for c in reversed(centers):  # top side, strains up
        pts += [(c + h, hi), (c + h, side), (c - h, side), (c - h, hi)]
    pts.append((lo, hi))
    for c in reversed(centers):  # left side, strains left
        pts += [(lo, c + h), (0, c + h), (0, c - h), (lo, c - h)]
    return Disk(i, tuple(pt(*p) for p in pts))


def grid_instance(n: int, k: int) -> GeneratedInstance:
    """Disks in the diagonal cells of an n x n grid, each with k strains to all four sides."""
    if n < 2 or k < 1:
        raise GeneratorError("grid_instance needs n >= 2 and k >= 1")
    disks = [_grid_disk(i, n, k) for i in range(n)]
    return GeneratedInstance(
        disks, "grid", {"n": n, "k": k},
        expected={"delta": 2 * k * k, "mu": n * (n - 1) * k * k},
    )


# -- comb pair -----------------------------------------------------------------

def _comb(teeth: int) -> list[tuple]:
    """Counterclockwise comb: base [0, 2t-1] x [0, 1], teeth [2m, 2m+1] x [1, 4]."""
    w = 2 * teeth - 1
    pts = [(0, 0), (w, 0), (w, 4), (w - 1, 4)]
    for m in range(teeth - 2, -1, -1):
        pts += [(2 * m + 2, 1), (2 * m + 1, 1), (2 * m + 1, 4), (2 * m, 4)]
    return pts


def comb_pair(teeth: int) -> GeneratedInstance:
    """Two overlapping combs, the second shifted by a small off-lattice vector.

    The boundaries cross several times per tooth, yet the intersection stays
    connected, so the overlap number is 1 however many faces there are.
    """
    if teeth < 1:
        raise GeneratorError("comb_pair needs teeth >= 1")
    base = _comb(teeth)
    dx, dy = Fraction(1, 3), Fraction(1, 5)
    moved = [(x + dx, y + dy) for x, y in base]
    disks = [Disk.from_points(0, base), Disk.from_points(1, moved)]
    return GeneratedInstance(disks, "comb", {"teeth": teeth}, expected={"delta": 1, "mu": 1})


# -- random --------------------------------------------------------------------

def _star_polygon(rng: random.Random, cx, cy, radius, nverts: int):
    angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(nverts))
    pts = []
    for a in angles:
        r = radius * rng.uniform(0.1, 1.0)
        pts.append((round(cx + r * math.cos(a)), round(cy + r * math.sin(a))))
    return pts


def _worm_path(rng: random.Random, cells: int, steps: int):
    """Self-avoiding lattice walk with straight runs merged into single segments."""
    pos = (rng.randrange(cells), rng.randrange(cells))
    walk = [pos]
    seen = {pos}
    for _ in range(steps):
        x, y = walk[-1]
        options = [(x + dx, y + dy) for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
                   if 0 <= x + dx < cells and 0 <= y + dy < cells and (x + dx, y + dy) not in seen]
        if not options:
            break
        nxt = rng.choice(options)
        walk.append(nxt)
        seen.add(nxt)
    corners = [walk[0]]
    for k in range(1, len(walk) - 1):
        a, b, c = walk[k - 1], walk[k], walk[k + 1]
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            corners.append(b)
    corners.append(walk[-1])
    return corners if len(walk) > 1 else None


def _worm_polygon(rng: random.Random, spacing: int, cells: int, steps: int):
    path = _worm_path(rng, cells, steps)
    if path is None:
        return None
    ox, oy = rng.randint(-spacing // 3, spacing // 3), rng.randint(-spacing // 3, spacing // 3)
    origin = -(cells * spacing) // 2
    scaled = [(origin + x * spacing + ox, origin + y * spacing + oy) for x, y in path]
    return thicken(scaled, 2 * (spacing // 5))


def random_instance(n: int, max_vertices: int = 10, seed: int = 0, *, spread: float = 300.0,
                    radius: float = 500.0, worms: float = 0.5, retries: int = 200) -> GeneratedInstance:
    """Seeded random disks on an integer lattice, redrawn until in general position.

    Each disk is, with probability ``worms``, a thickened self-avoiding
    rectilinear walk (these tend to cross each other many times), and
    otherwise a star-shaped polygon with up to ``max_vertices`` vertices.
    """
    if n < 1:
        raise GeneratorError("random_instance needs n >= 1")
    if max_vertices < 3:
        raise GeneratorError("max_vertices must be at least 3")
    rng = random.Random(seed)
    spacing = 100
    cells = max(3, int(radius) // spacing + 1)
    for _ in range(retries):
        disks = []
        while len(disks) < n:
            if rng.random() < worms:
                pts = _worm_polygon(rng, spacing, cells, rng.randint(3, 3 * max_vertices))
            else:
                nv = rng.randint(3, max_vertices)
                cx, cy = rng.uniform(-spread, spread), rng.uniform(-spread, spread)
                pts = _star_polygon(rng, cx, cy, radius, nv)
            if pts is None:
                continue
            try:
                disks.append(Disk.from_points(len(disks), pts))
            except GeometryError:
                continue
        if validate_general_position(disks).ok:
            return GeneratedInstance(disks, "random", {"n": n, "max_vertices": max_vertices, "seed": seed})
    raise GeneratorError(f"no general-position instance after {retries} attempts (seed {seed})")


def instance_from_disks(disks: Sequence[Disk], name: str = "custom", **params) -> GeneratedInstance:
    return GeneratedInstance(list(disks), name, dict(params))
