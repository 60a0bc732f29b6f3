"""Combinatorial quantities of a disk arrangement and the bound checks on them.

Terminology: the *ply* of a face is the number of disks containing it; a
face is *maximal* if its ply exceeds that of every edge-neighbour; the
*overlap number* is the largest number of connected components of a
pairwise intersection D_i & D_j.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .arrangement import CROSSING, Arrangement, Face, UnionFind
from .geometry import Point


# -- dual graph ----------------------------------------------------------------

@dataclass(frozen=True)
class DualGraph:
    adjacency: tuple[tuple[int, ...], ...]
    ply: tuple[int, ...]

    def __len__(self):
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree_sequence(self) -> list[int]:
        return sorted((len(a) for a in self.adjacency), reverse=True)


def dual_graph(arr: Arrangement) -> DualGraph:
    return DualGraph(tuple(tuple(a) for a in arr.adjacency()), tuple(f.ply for f in arr.faces))


def bfs(adjacency: Sequence[Sequence[int]], source: int, allowed=None) -> list[int]:
    """Hop distances from ``source``; -1 for unreachable nodes.

    ``allowed`` optionally restricts the search to a node subset.
    """
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] < 0 and (allowed is None or allowed[w]):
                dist[w] = du
                queue.append(w)
    return dist


def eccentricities(g: DualGraph) -> list[int]:
    out = []
    for s in range(len(g)):
        dist = bfs(g.adjacency, s)
        if min(dist) < 0:
            raise ValueError("dual graph is not connected")
        out.append(max(dist))
    return out


def diameter(g: DualGraph) -> int:
    """Exact diameter by breadth-first search from every node."""
    return max(eccentricities(g))


def shortest_path(adjacency, s: int, t: int) -> list[int]:
    parent = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for w in adjacency[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if t not in parent:
        raise ValueError(f"no path from {s} to {t}")
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


@dataclass(frozen=True)
class StDistance:
    hops: int
    path: tuple[int, ...]


def st_distance(arr: Arrangement, s: Point, t: Point) -> StDistance:
    """Minimum number of boundary crossings on a curve from s to t, with a face witness."""
    fs = arr.locate_face(s)
    ft = arr.locate_face(t)
    path = shortest_path(arr.adjacency(), fs.id, ft.id)
    return StDistance(len(path) - 1, tuple(path))


# -- overlap number ------------------------------------------------------------

@dataclass(frozen=True)
class ComponentDecomposition:
    pair: tuple[int, int]
    components: tuple[frozenset, ...]
    face_component: dict = field(compare=False, hash=False)

    @property
    def count(self) -> int:
        return len(self.components)


def intersection_components(arr: Arrangement, i: int, j: int) -> ComponentDecomposition:
    """Connected components of D_i & D_j as sets of face ids.

    Faces inside both disks are merged only across shared edges.  Vertex
    contacts never need merging: at a crossing of the boundaries of D_i and
    D_j exactly one of the four quadrants lies in both disks, and at a
    crossing of one of them with a third boundary the two quadrants inside
    both disks share an edge (the piece of the third boundary between them).
    """
    if i == j:
        raise ValueError("need two distinct disks")
    if i > j:
        i, j = j, i
    inside = [i in f.label and j in f.label for f in arr.faces]
    members = [f.id for f in arr.faces if inside[f.id]]
    uf = UnionFind(len(arr.faces))
    for h in arr.halfedges:
        a, b = h.face, arr.halfedges[h.twin].face
        if inside[a] and inside[b]:
            uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for fid in members:
        groups.setdefault(uf.find(fid), []).append(fid)
    comps = tuple(frozenset(g) for g in sorted(groups.values(), key=min))
    face_component = {fid: k for k, comp in enumerate(comps) for fid in comp}
    return ComponentDecomposition((i, j), comps, face_component)


def all_components(arr: Arrangement) -> dict[tuple[int, int], ComponentDecomposition]:
    return {(i, j): intersection_components(arr, i, j) for i, j in combinations(range(arr.n), 2)}


def overlap_matrix(arr: Arrangement, decomps=None) -> list[list[int]]:
    decomps = decomps or all_components(arr)
    m = [[0] * arr.n for _ in range(arr.n)]
    for (i, j), dec in decomps.items():
        m[i][j] = m[j][i] = dec.count
    return m


def overlap_number(arr: Arrangement, decomps=None) -> int:
    decomps = decomps or all_components(arr)
    return max((d.count for d in decomps.values()), default=0)


# -- maximal faces -------------------------------------------------------------

def is_maximal(arr: Arrangement, f: Face) -> bool:
    return all(arr.faces[g].ply < f.ply for g in arr.adjacency()[f.id])


def maximal_faces(arr: Arrangement) -> list[Face]:
    return [f for f in arr.faces if is_maximal(arr, f)]


def max_ply(arr: Arrangement) -> int:
    return max(f.ply for f in arr.faces)


# -- two disks -----------------------------------------------------------------

WHITE, RED, BLUE, PURPLE = "white", "red", "blue", "purple"


def two_disk_classification(arr: Arrangement) -> dict[int, str]:
    """Colour faces of a two-disk arrangement: D_0 only red, D_1 only blue, both purple."""
    if arr.n != 2:
        raise ValueError(f"two-disk classification needs exactly 2 disks, got {arr.n}")
    colours = {frozenset(): WHITE, frozenset({0}): RED, frozenset({1}): BLUE, frozenset({0, 1}): PURPLE}
    return {f.id: colours[f.label] for f in arr.faces}


@dataclass
class TwoDiskPaths:
    purple_path_max: int  # longest shortest colored path between purple faces
    purple_path_bound: int
    white_ok: bool  # every white face sees two purple faces at distance two
    even_parity: bool  # every purple-purple distance is even

    @property
    def ok(self) -> bool:
        return self.purple_path_max <= self.purple_path_bound and self.white_ok and self.even_parity


def check_two_disk_paths(arr: Arrangement) -> TwoDiskPaths:
    """Colored-path bound between purple faces and the white-face two-hop property."""
    colour = two_disk_classification(arr)
    adj = arr.adjacency()
    purple = [f for f, c in colour.items() if c == PURPLE]
    delta = len(purple)
    coloured = [colour[f] != WHITE for f in range(len(arr.faces))]
    worst = 0
    even = True
    for u in purple:
        restricted = bfs(adj, u, allowed=coloured)
        full = bfs(adj, u)
        for v in purple:
            if restricted[v] < 0:
                worst = max(worst, 10 ** 9)
            else:
                worst = max(worst, restricted[v])
            if full[v] % 2:
                even = False
    white_ok = True
    if delta >= 2:
        for f, c in colour.items():
            if c != WHITE:
                continue
            dist = bfs(adj, f)
            if len({v for v in purple if dist[v] == 2}) < 2:
                white_ok = False
    return TwoDiskPaths(worst, max(0, 2 * delta - 2), white_ok, even)


# -- boundary intervals --------------------------------------------------------

@dataclass(frozen=True)
class ElementaryInterval:
    start: int  # crossing vertex id
    end: int
    halfedges: tuple[int, ...]
    face: int  # boundary face inside the disk
    components: tuple  # sorted ((pair), component index) items
    maximal: bool

    @property
    def component_set(self) -> dict:
        return dict(self.components)


@dataclass(frozen=True)
class BoundaryIntervalReport:
    disk: int
    intervals: tuple[ElementaryInterval, ...]
    trivial: bool = False

    def counterexamples(self) -> list[tuple[ElementaryInterval, ElementaryInterval]]:
        """Pairs with equal component sets and maximal but distinct boundary faces."""
        seen: dict[tuple, ElementaryInterval] = {}
        bad = []
        for iv in self.intervals:
            if not iv.maximal:
                continue
            prev = seen.setdefault(iv.components, iv)
            if prev.face != iv.face:
                bad.append((prev, iv))
        return bad

    def distinct_component_sets(self) -> int:
        return len({iv.components for iv in self.intervals})


def boundary_cycle(arr: Arrangement, i: int) -> list[int]:
    """Forward half-edges of disk ``i`` in counterclockwise order along its boundary."""
    start = next(h.id for h in arr.halfedges if h.disk == i and h.forward)
    # forward half-edges of one disk edge are stored consecutively, so follow by destination
    by_origin = {h.origin: h.id for h in arr.halfedges if h.disk == i and h.forward}
    out = [start]
    while True:
        g = by_origin[arr.dest(out[-1])]
        if g == start:
            return out
        out.append(g)


def boundary_interval_report(arr: Arrangement, i: int, decomps=None) -> BoundaryIntervalReport:
    """Split the boundary of disk ``i`` at crossings and record each piece's component set."""
    decomps = decomps or all_components(arr)
    cyc = boundary_cycle(arr, i)
    cuts = [k for k, h in enumerate(cyc) if arr.vertices[arr.halfedges[h].origin].kind == CROSSING]
    if not cuts:
        return BoundaryIntervalReport(i, (), trivial=True)
    maximal = {f.id for f in maximal_faces(arr)}
    intervals = []
    for a, b in zip(cuts, cuts[1:] + [cuts[0] + len(cyc)]):
        hs = tuple(cyc[k % len(cyc)] for k in range(a, b))
        faces = {arr.halfedges[h].face for h in hs}
        assert len(faces) == 1, "elementary interval borders more than one face"
        f = faces.pop()
        label = sorted(arr.faces[f].label)
        lam = tuple(sorted(
            ((p, q), decomps[(p, q)].face_component[f]) for p, q in combinations(label, 2)
        ))
        intervals.append(ElementaryInterval(
            arr.halfedges[hs[0]].origin, arr.dest(hs[-1]), hs, f, lam, f in maximal,
        ))
    return BoundaryIntervalReport(i, tuple(intervals))


# -- monotone partition --------------------------------------------------------

@dataclass(frozen=True)
class MonotonePartition:
    maximal: tuple[int, ...]  # maximal face ids, ascending
    assignment: tuple[int, ...]  # face id -> index into ``maximal``
    paths: tuple[tuple[int, ...], ...]  # face id -> monotone witness path
    contracted: tuple[tuple[int, ...], ...]  # adjacency between parts

    def parts(self) -> list[list[int]]:
        out = [[] for _ in self.maximal]
        for f, k in enumerate(self.assignment):
            out[k].append(f)
        return out


def monotone_partition(arr: Arrangement) -> MonotonePartition:
    """Assign every face to the first maximal face it reaches by a ply-increasing path."""
    adj = arr.adjacency()
    ply = [f.ply for f in arr.faces]
    maximal = tuple(f.id for f in maximal_faces(arr))
    index = {f: k for k, f in enumerate(maximal)}
    # bitmask of maximal faces reachable along monotone paths
    reach = [0] * len(ply)
    for f in sorted(range(len(ply)), key=lambda f: -ply[f]):
        if f in index:
            reach[f] = 1 << index[f]
        else:
            for g in adj[f]:
                if ply[g] == ply[f] + 1:
                    reach[f] |= reach[g]
    assignment = []
    paths = []
    for f in range(len(ply)):
        k = (reach[f] & -reach[f]).bit_length() - 1
        assignment.append(k)
        bit = 1 << k
        path = [f]
        while path[-1] != maximal[k]:
            u = path[-1]
            path.append(min(g for g in adj[u] if ply[g] == ply[u] + 1 and reach[g] & bit))
        paths.append(tuple(path))
    contracted = [set() for _ in maximal]
    for f in range(len(ply)):
        for g in adj[f]:
            if assignment[f] != assignment[g]:
                contracted[assignment[f]].add(assignment[g])
    return MonotonePartition(maximal, tuple(assignment), tuple(paths),
                             tuple(tuple(sorted(c)) for c in contracted))


# -- bound verification --------------------------------------------------------

PASS, FAIL = "PASS", "FAIL"


@dataclass(frozen=True)
class Verdict:
    name: str
    value: int
    bound: int
    relation: str  # "<=" or "=="

    @property
    def ok(self) -> bool:
        return self.value <= self.bound if self.relation == "<=" else self.value == self.bound

    @property
    def status(self) -> str:
        return PASS if self.ok else FAIL

    @property
    def slack(self) -> int:
        return self.bound - self.value


@dataclass
class AnalysisReport:
    n: int
    faces: int
    overlap_matrix: list[list[int]]
    delta: int
    p_max: int
    mu: int
    diameter: int
    verdicts: list[Verdict]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.ok]


def diameter_bound_two(delta: int) -> int:
    return max(2, 2 * delta)


def maximal_face_bound(n: int, delta: int) -> int:
    return n * (delta + 1) ** (n * (n - 1) // 2)


def diameter_bound_general(n: int, delta: int) -> int:
    return 2 * n * min(n, delta + 1) * (delta + 1) ** (n * (n - 1) // 2)


def verify_bounds(arr: Arrangement) -> AnalysisReport:
    """Measure overlap number, maximal faces, ply and diameter, and check every bound."""
    decomps = all_components(arr)
    delta = overlap_number(arr, decomps)
    mu = len(maximal_faces(arr))
    p_max = max_ply(arr)
    diam = diameter(dual_graph(arr))
    n = arr.n
    verdicts = [Verdict("ply<=n", p_max, n, "<=")]
    if n == 2:
        verdicts.append(Verdict("two-disk:diam<=max(2,2delta)", diam, diameter_bound_two(delta), "<="))
        verdicts.append(Verdict("two-disk:mu", mu, delta if delta > 0 else 2, "=="))
    elif n > 2:
        verdicts.append(Verdict("mu<=n(delta+1)^(n(n-1)/2)", mu, maximal_face_bound(n, delta), "<="))
        verdicts.append(Verdict("diam<=2n*min(n,delta+1)*(delta+1)^(n(n-1)/2)", diam,
                                diameter_bound_general(n, delta), "<="))
    verdicts.append(Verdict("partition:diam<=2*pmax*mu", diam, 2 * p_max * mu, "<="))
    return AnalysisReport(n, len(arr.faces), overlap_matrix(arr, decomps), delta, p_max, mu, diam, verdicts)
