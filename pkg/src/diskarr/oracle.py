"""Brute-force raster oracle for the exact pipeline.

Pixel centres of a square grid are classified against every disk in
floating point, equal-label pixels are flood-filled into 8-connected
regions, and crossing distances come from Dijkstra over the region graph
with edge cost equal to the number of boundaries separating neighbouring
pixels.  Nothing here touches the half-edge structure.

A single resolution can merge thin features or split narrow necks, so a
comparison only counts when two resolutions agree with each other.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import ndimage
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components, dijkstra

from .geometry import Disk, Point

CONCLUSIVE, INCONCLUSIVE = "conclusive", "inconclusive"
AGREE, DISAGREE = "agree", "disagree"


def _inside(xs: np.ndarray, ys: np.ndarray, disk: Disk) -> np.ndarray:
    """Even-odd crossing test for many points at once."""
    vx = np.array([float(p.x) for p in disk.vertices])
    vy = np.array([float(p.y) for p in disk.vertices])
    ax, ay = vx, vy
    bx, by = np.roll(vx, -1), np.roll(vy, -1)
    inside = np.zeros(xs.shape, dtype=bool)
    for k in range(len(vx)):
        if ay[k] == by[k]:
            continue
        straddle = (ay[k] > ys) != (by[k] > ys)
        xcross = ax[k] + (ys - ay[k]) * (bx[k] - ax[k]) / (by[k] - ay[k])
        inside ^= straddle & (xcross > xs)
    return inside


@dataclass
class Raster:
    resolution: int
    x0: float
    y0: float
    step: float
    regions: np.ndarray  # region id per pixel, shape (rows, cols)
    masks: list[int]  # disk bitmask per region
    sizes: list[int]
    weights: dict  # (a, b) -> boundary count between raster-neighbouring regions, a < b

    @property
    def count(self) -> int:
        return len(self.masks)

    def adjacency(self) -> set[tuple[int, int]]:
        """Region pairs separated by exactly one boundary (vertex contacts excluded)."""
        return {pair for pair, w in self.weights.items() if w == 1}

    def centre(self, row: int, col: int) -> tuple[float, float]:
        return self.x0 + (col + 0.5) * self.step, self.y0 + (row + 0.5) * self.step

    def region_at(self, x: float, y: float) -> int:
        col = int((x - self.x0) / self.step)
        row = int((y - self.y0) / self.step)
        return int(self.regions[row, col])

    def distances(self, source: int) -> np.ndarray:
        n = self.count
        rows, cols, vals = [], [], []
        for (a, b), w in self.weights.items():
            rows += [a, b]
            cols += [b, a]
            vals += [w, w]
        graph = coo_matrix((vals, (rows, cols)), shape=(n, n)).tocsr()
        return dijkstra(graph, indices=source)

    def interior_pixel(self, region: int) -> tuple[int, int]:
        """Pixel of the region farthest from any other region."""
        mask = self.regions == region
        depth = ndimage.distance_transform_cdt(np.pad(mask, 1), metric="taxicab")[1:-1, 1:-1]
        r, c = np.unravel_index(np.argmax(np.where(mask, depth, -1)), mask.shape)
        return int(r), int(c)

    def degree_sequence(self) -> list[int]:
        deg = [0] * self.count
        for a, b in self.adjacency():
            deg[a] += 1
            deg[b] += 1
        return sorted(deg, reverse=True)


def rasterize(disks: Sequence[Disk], resolution: int, margin: float = 0.05) -> Raster:
    """Label pixels, flood-fill regions, and glue regions across vertex neighbourhoods.

    Inside a ball smaller than a corner's or crossing's clearance only that
    vertex's own edges pass, so each label there is a single wedge of a
    single face.  Regions sharing a label inside such a ball are merged; this
    repairs the sub-pixel tapers at sharp wedges that no resolution removes.
    """
    xs = [float(p.x) for d in disks for p in d.vertices]
    ys = [float(p.y) for d in disks for p in d.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    step = span * (1 + 2 * margin) / resolution
    x0 = min(xs) - span * margin - 2 * step
    y0 = min(ys) - span * margin - 2 * step
    cols = int(np.ceil((max(xs) - x0) / step)) + 3
    rows = int(np.ceil((max(ys) - y0) / step)) + 3
    gx = x0 + (np.arange(cols) + 0.5) * step
    gy = y0 + (np.arange(rows) + 0.5) * step
    X, Y = np.meshgrid(gx, gy)
    label = np.zeros(X.shape, dtype=np.int64)
    for k, d in enumerate(disks):
        label |= _inside(X, Y, d).astype(np.int64) << k

    raw = np.full(X.shape, -1, dtype=np.int64)
    raw_masks = []
    for value in np.unique(label):
        # 8-connected: opposite wedges at a crossing never share a label, so
        # diagonal contact cannot merge distinct faces once pixels resolve the feature size
        comp, ncomp = ndimage.label(label == value, structure=np.ones((3, 3), dtype=bool))
        sel = comp > 0
        raw[sel] = comp[sel] - 1 + len(raw_masks)
        raw_masks += [int(value)] * ncomp

    glue_a, glue_b = [], []
    points, clearance = _features(disks)
    for (px, py), rho in zip(points, 0.9 * clearance):
        c0 = max(int((px - rho - x0) / step), 0)
        c1 = min(int((px + rho - x0) / step) + 1, cols)
        r0 = max(int((py - rho - y0) / step), 0)
        r1 = min(int((py + rho - y0) / step) + 1, rows)
        if c0 >= c1 or r0 >= r1:
            continue
        near = (X[r0:r1, c0:c1] - px) ** 2 + (Y[r0:r1, c0:c1] - py) ** 2 < rho * rho
        first = {}
        for reg in np.unique(raw[r0:r1, c0:c1][near]):
            m = raw_masks[reg]
            if m in first:
                glue_a.append(first[m])
                glue_b.append(int(reg))
            else:
                first[m] = int(reg)
    nraw = len(raw_masks)
    glue = coo_matrix((np.ones(len(glue_a)), (glue_a, glue_b)), shape=(nraw, nraw))
    _, remap = connected_components(glue, directed=False)
    regions = remap[raw]
    masks = [0] * (int(remap.max()) + 1)
    for k, m in enumerate(raw_masks):
        masks[remap[k]] = m
    sizes = np.bincount(regions.ravel(), minlength=len(masks)).tolist()

    weights = {}
    for a, b in ((regions[:, :-1], regions[:, 1:]), (regions[:-1, :], regions[1:, :])):
        diff = a != b
        pairs = np.unique(np.stack([np.minimum(a[diff], b[diff]), np.maximum(a[diff], b[diff])], axis=1), axis=0)
        for u, v in pairs:
            weights[(int(u), int(v))] = bin(masks[u] ^ masks[v]).count("1")
    return Raster(resolution, x0, y0, step, regions, masks, sizes, weights)


def _features(disks: Sequence[Disk]) -> tuple[np.ndarray, np.ndarray]:
    """Corners and boundary crossings, each with its clearance: the distance
    to the nearest edge not through it."""
    a, b, owner = [], [], []
    for d in disks:
        vs = [(float(p.x), float(p.y)) for p in d.vertices]
        for k in range(len(vs)):
            a.append(vs[k])
            b.append(vs[(k + 1) % len(vs)])
            owner.append(d.id)
    a, b, owner = np.array(a), np.array(b), np.array(owner)
    m = len(a)
    seg_index = np.arange(m)

    pts, incident = [], []
    start = 0
    for d in disks:
        k = len(d.vertices)
        for j in range(k):
            pts.append(a[start + j])
            incident.append((start + j, start + (j - 1) % k))
        start += k
    # crossings between edges of different disks
    r = b - a
    for i in range(m):
        other = owner != owner[i]
        den = r[i, 0] * r[:, 1] - r[i, 1] * r[:, 0]
        w = a - a[i]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (w[:, 0] * r[:, 1] - w[:, 1] * r[:, 0]) / den
            u = (w[:, 0] * r[i, 1] - w[:, 1] * r[i, 0]) / den
        hit = other & (den != 0) & (t > 0) & (t < 1) & (u > 0) & (u < 1) & (seg_index > i)
        for j in np.nonzero(hit)[0]:
            pts.append(a[i] + t[j] * r[i])
            incident.append((i, int(j)))
    P = np.array(pts)
    # point-to-segment distances, shape (points, segments)
    rr = np.einsum("ij,ij->i", r, r)
    w = P[:, None, :] - a[None, :, :]
    t = np.clip(np.einsum("pij,ij->pi", w, r) / rr, 0.0, 1.0)
    closest = a[None, :, :] + t[..., None] * r[None, :, :]
    dist = np.linalg.norm(P[:, None, :] - closest, axis=2)
    for k, (e1, e2) in enumerate(incident):
        dist[k, e1] = np.inf
        dist[k, e2] = np.inf
    return P, dist.min(axis=1)


def feature_size(disks: Sequence[Disk]) -> float:
    """Smallest distance from a corner or boundary crossing to an edge not through it.

    Any neck or sliver of a face is at least this wide.  Computed in
    floating point from the polygons alone.
    """
    return float(_features(disks)[1].min())


@dataclass
class OracleComparison:
    status: str  # CONCLUSIVE or INCONCLUSIVE
    agreement: str | None  # AGREE / DISAGREE when conclusive
    resolution: int
    exact_faces: int
    raster_faces: int | None = None
    adjacency_ok: bool | None = None
    distance_samples: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == CONCLUSIVE and self.agreement == AGREE


def _stable(coarse: Raster, fine: Raster, min_pixels: int) -> list[str]:
    notes = []
    if coarse.count != fine.count:
        notes.append(f"region count changes with resolution ({coarse.count} -> {fine.count})")
    elif coarse.degree_sequence() != fine.degree_sequence():
        notes.append("region adjacency changes with resolution")
    if min(fine.sizes) < min_pixels:
        notes.append(f"smallest region has {min(fine.sizes)} pixels (< {min_pixels})")
    return notes


def required_resolution(disks: Sequence[Disk], margin: float = 0.05, pixels_per_feature: float = 3.0) -> int:
    xs = [float(p.x) for d in disks for p in d.vertices]
    ys = [float(p.y) for d in disks for p in d.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) * (1 + 2 * margin)
    return int(np.ceil(span * pixels_per_feature / feature_size(disks)))


def compare_with_exact(arr, resolution: int = 200, samples: int = 10, seed: int = 0,
                       max_resolution: int = 3200, min_pixels: int = 4, pairs=()) -> OracleComparison:
    """Raster oracle against the exact arrangement, refining until two resolutions agree.

    The starting resolution is raised until pixels resolve the instance's
    feature size.  Returns an inconclusive result, never agreement, when
    ``max_resolution`` does not suffice.  ``pairs`` adds explicit (s, t)
    point pairs to the sampled ones.
    """
    from .analysis import st_distance

    res = max(resolution, required_resolution(arr.disks))
    if 2 * res > max_resolution:
        return OracleComparison(INCONCLUSIVE, None, res, len(arr.faces),
                                notes=[f"feature size needs resolution {res}, above the cap {max_resolution}"])
    coarse = rasterize(arr.disks, res)
    while True:
        fine = rasterize(arr.disks, 2 * res)
        notes = _stable(coarse, fine, min_pixels)
        if not notes:
            break
        if 4 * res > max_resolution:
            return OracleComparison(INCONCLUSIVE, None, 2 * res, len(arr.faces), fine.count, notes=notes)
        res *= 2
        coarse = fine

    out = OracleComparison(CONCLUSIVE, AGREE, fine.resolution, len(arr.faces), fine.count)
    if fine.count != len(arr.faces):
        out.agreement = DISAGREE
        out.notes.append(f"face count: exact {len(arr.faces)}, raster {fine.count}")
        return out

    # match raster regions to exact faces through a deep interior pixel of each region
    to_face = {}
    for r in range(fine.count):
        row, col = fine.interior_pixel(r)
        x, y = fine.centre(row, col)
        to_face[r] = arr.locate_face(Point(Fraction(x), Fraction(y))).id
    if len(set(to_face.values())) != len(arr.faces):
        out.agreement = DISAGREE
        out.notes.append("raster regions do not map one-to-one onto faces")
        return out
    raster_adj = {tuple(sorted((to_face[a], to_face[b]))) for a, b in fine.adjacency()}
    exact_adj = {(f, g) for f, nbrs in enumerate(arr.adjacency()) for g in nbrs if f < g}
    out.adjacency_ok = raster_adj == exact_adj
    if not out.adjacency_ok:
        out.agreement = DISAGREE
        out.notes.append(f"adjacency differs on {len(raster_adj ^ exact_adj)} pair(s)")

    rng = random.Random(seed)
    points = []
    for k in range(samples):
        # first sample is s = t; the rest land in random regions
        a = fine.centre(*fine.interior_pixel(rng.randrange(fine.count)))
        b = a if k == 0 else fine.centre(*fine.interior_pixel(rng.randrange(fine.count)))
        points.append((a, b))
    for s, t in pairs:
        points.append(((float(s.x), float(s.y)), (float(t.x), float(t.y))))
    for sa, sb in points:
        raster_d = int(round(fine.distances(fine.region_at(*sa))[fine.region_at(*sb)]))
        exact = st_distance(arr, Point(Fraction(sa[0]), Fraction(sa[1])),
                            Point(Fraction(sb[0]), Fraction(sb[1]))).hops
        out.distance_samples.append({"s": sa, "t": sb, "exact": exact, "raster": raster_d})
        if exact != raster_d:
            out.agreement = DISAGREE
            out.notes.append(f"s-t distance {sa}->{sb}: exact {exact}, raster {raster_d}")
    return out
