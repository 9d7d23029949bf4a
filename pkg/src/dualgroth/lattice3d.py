"""The weighted 3D lattice layer.

Geometry.  A lattice path starts on the floor plane y = 0, where steps
(x, 0, z) -> (x, 0, z-1) carry weight t_z and steps (x, 0, z) -> (x-1, 0, z-1)
carry weight 1, and then climbs a wall plane z = const, where steps
(x, y, z) -> (x, y+1, z) carry weight 1 and diagonal steps
(x, y, z) -> (x+1, y+1, z) carry weight x_{m-y}.  For a column pair whose
source level sits strictly above the sink plane these are ordinary paths;
when the two levels coincide (an empty column of the skew shape) the pair
is realized by a wall-only path whose initial vertex is not counted for
vertex-disjointness.  That convention makes the pairwise enumerators equal
the e-matrix entries for every nested pair of partitions, so the signed
path-system sum matches the determinant exactly.

Path systems are stored sink-ordered: ``paths[j-1]`` ends at sink j, and
``sources[j-1]`` names the source column feeding it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .polyring import Poly
from .shapes import Partition, SkewShape
from .tableaux import EMPTY, RPP, ReducedFilling, complete_filling, reduce_filling

Vertex = tuple[int, int, int]

_SLIDE_CAP = 100_000


class ContractViolation(RuntimeError):
    """A structural assumption of a path operation failed to hold."""


# ---------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class LatticePath:
    """A floor-then-wall path stored as its full vertex sequence.

    ``wall_start`` marks the wall-only paths of empty columns; their first
    vertex is excluded from disjointness checks.
    """

    vertices: tuple[Vertex, ...]
    wall_start: bool = False

    @property
    def source(self) -> Vertex:
        return self.vertices[0]

    @property
    def sink(self) -> Vertex:
        return self.vertices[-1]

    @property
    def m(self) -> int:
        return self.sink[1]

    @property
    def plane(self) -> int:
        """The z-plane carrying the wall portion."""
        return self.sink[2]

    @property
    def wall_index(self) -> int:
        """Index of the wall-start vertex (the last floor vertex)."""
        return self.vertices[0][2] - self.plane

    def floor_vertex_index(self, level: int) -> int | None:
        """Index of the floor vertex at z = level, if the path has one."""
        idx = self.vertices[0][2] - level
        if 0 <= idx <= self.wall_index:
            return idx
        return None

    def counted_vertices(self) -> tuple[Vertex, ...]:
        return self.vertices[1:] if self.wall_start else self.vertices

    def validate(self) -> None:
        verts = self.vertices
        if not verts:
            raise ContractViolation("empty path")
        wi = self.wall_index
        if not 0 <= wi < len(verts):
            raise ContractViolation(f"inconsistent wall index in {verts}")
        if self.wall_start and wi != 0:
            raise ContractViolation(f"wall-only path with floor steps: {verts}")
        for p, (a, b) in enumerate(zip(verts, verts[1:])):
            dx, dy, dz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
            if p < wi:
                if a[1] != 0 or dy != 0 or dz != -1 or dx not in (0, -1):
                    raise ContractViolation(f"bad floor step {a} -> {b}")
                if dx == 0 and a[2] <= 0:
                    raise ContractViolation(f"t-step below level 1: {a} -> {b}")
            else:
                if dz != 0 or dy != 1 or dx not in (0, 1):
                    raise ContractViolation(f"bad wall step {a} -> {b}")
        if verts[-1][1] != self.m or len(verts) != wi + 1 + self.m:
            raise ContractViolation(f"wall does not span y = 0..m: {verts}")

    def weight(self) -> Poly:
        """Product of the step weights (a single monomial)."""
        t_exps: dict[int, int] = {}
        x_exps: dict[int, int] = {}
        wi = self.wall_index
        m = self.m
        for p, (a, b) in enumerate(zip(self.vertices, self.vertices[1:])):
            if p < wi:
                if b[0] == a[0]:
                    t_exps[a[2]] = t_exps.get(a[2], 0) + 1
            else:
                if b[0] == a[0] + 1:
                    s = m - a[1]
                    x_exps[s] = x_exps.get(s, 0) + 1

        def vec(d: dict[int, int]) -> tuple[int, ...]:
            return tuple(d.get(i, 0) for i in range(1, max(d) + 1)) if d else ()

        return Poly.monomial(1, vec(x_exps), vec(t_exps))


def _build_path(start: Vertex, sink_z: int, t_levels: frozenset[int],
                x_vars: frozenset[int], m: int) -> tuple[Vertex, ...]:
    x, _, z = start
    verts = [start]
    for level in range(z, sink_z, -1):
        if level not in t_levels:
            x -= 1
        verts.append((x, 0, level - 1))
    for y in range(m):
        if (m - y) in x_vars:
            x += 1
        verts.append((x, y + 1, sink_z))
    return tuple(verts)


def enumerate_paths(a: Vertex, b: Vertex, m: int) -> list[LatticePath]:
    """All floor-then-wall paths from a (on the floor) to b (on a wall).

    Unreachable endpoint pairs give the empty list.
    """
    ax, ay, az = a
    bx, by, bz = b
    if ay != 0 or by != m:
        raise ValueError("source must lie on the floor and sink at wall height m")
    if az < bz:
        return []
    out: list[LatticePath] = []
    levels = list(range(bz + 1, az + 1))
    for n_t in range(len(levels) + 1):
        d = bx - ax + (len(levels) - n_t)
        if d < 0 or d > m:
            continue
        for t_levels in combinations(levels, n_t):
            if any(lv <= 0 for lv in t_levels):
                continue
            for x_vars in combinations(range(1, m + 1), d):
                verts = _build_path(a, bz, frozenset(t_levels), frozenset(x_vars), m)
                if verts[-1] == b:
                    out.append(LatticePath(verts))
    return out


def _wall_only_paths(start_x: int, sink_x: int, z: int, m: int) -> list[LatticePath]:
    d = sink_x - start_x
    if d < 0 or d > m:
        return []
    out = []
    for x_vars in combinations(range(1, m + 1), d):
        verts = _build_path((start_x, 0, z), z, frozenset(), frozenset(x_vars), m)
        out.append(LatticePath(verts, wall_start=True))
    return out


def source_point(outer_conj: Partition, s: int) -> Vertex:
    return (s - 1, 0, outer_conj.part(s) - 1)


def sink_point(inner_conj: Partition, j: int, m: int) -> Vertex:
    return (j, m, inner_conj.part(j))


def pair_paths(outer: Partition, inner: Partition, src: int, snk: int, m: int) -> list[LatticePath]:
    """All admissible paths from source column ``src`` to sink column ``snk``."""
    oc, ic = outer.conjugate(), inner.conjugate()
    hi, lo = oc.part(src), ic.part(snk)
    if hi > lo:
        return enumerate_paths(source_point(oc, src), sink_point(ic, snk, m), m)
    if hi == lo:
        return _wall_only_paths(src, snk, lo, m)
    return []


def pair_enumerator(outer: Partition, inner: Partition, src: int, snk: int, m: int) -> Poly:
    """Sum of path weights from source ``src`` to sink ``snk``."""
    total = Poly.zero()
    for path in pair_paths(outer, inner, src, snk, m):
        total = total + path.weight()
    return total


def path_with_weight(outer: Partition, inner: Partition, src: int, snk: int, m: int,
                     monomial: Poly) -> LatticePath | None:
    """The unique path of the given square-free monomial weight, if it exists."""
    for path in pair_paths(outer, inner, src, snk, m):
        if path.weight() == monomial:
            return path
    return None


# ---------------------------------------------------------------------------
# systems


def _perm_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class PathSystem:
    outer: Partition
    inner: Partition
    n: int
    m: int
    paths: tuple[LatticePath, ...]
    sources: tuple[int, ...]

    @property
    def sign(self) -> int:
        return _perm_sign(self.sources)

    def weight(self) -> Poly:
        total = Poly.one()
        for path in self.paths:
            total = total * path.weight()
        return total

    def is_disjoint(self) -> bool:
        seen: set[Vertex] = set()
        for path in self.paths:
            pts = path.counted_vertices()
            for v in pts:
                if v in seen:
                    return False
            seen.update(pts)
        return True

    def validate(self) -> None:
        oc, ic = self.outer.conjugate(), self.inner.conjugate()
        if len(self.paths) != self.n or sorted(self.sources) != list(range(1, self.n + 1)):
            raise ContractViolation("inconsistent system slots")
        for j, (path, src) in enumerate(zip(self.paths, self.sources), start=1):
            path.validate()
            if path.sink != sink_point(ic, j, self.m):
                raise ContractViolation(f"path {j} does not end at its sink")
            expected = (src, 0, oc.part(src)) if path.wall_start else source_point(oc, src)
            if path.source != expected:
                raise ContractViolation(f"path {j} does not start at source {src}")


def enumerate_systems(outer: Partition, inner: Partition, n: int, m: int
                      ) -> Iterator[tuple[PathSystem, int]]:
    """All vertex-disjoint systems with their signs, deterministically ordered."""
    if not outer.contains(inner):
        raise ValueError("inner partition must be contained in the outer one")
    if n < max(outer.part(1), inner.part(1)):
        raise ValueError(f"n={n} must be at least the largest part of both partitions")
    if n == 0:
        yield PathSystem(outer, inner, 0, m, (), ()), 1
        return
    families = {(s, j): pair_paths(outer, inner, s, j, m)
                for s in range(1, n + 1) for j in range(1, n + 1)}

    for perm in permutations(range(1, n + 1)):
        if any(not families[(perm[j], j + 1)] for j in range(n)):
            continue
        sign = _perm_sign(perm)
        chosen: list[LatticePath] = []
        occupied: set[Vertex] = set()

        def place(j: int) -> Iterator[tuple[PathSystem, int]]:
            if j == n:
                system = PathSystem(outer, inner, n, m, tuple(chosen), tuple(perm))
                yield system, sign
                return
            for path in families[(perm[j], j + 1)]:
                pts = path.counted_vertices()
                if any(v in occupied for v in pts):
                    continue
                occupied.update(pts)
                chosen.append(path)
                yield from place(j + 1)
                chosen.pop()
                occupied.difference_update(pts)

        yield from place(0)


def count_path_tuples(outer: Partition, inner: Partition, n: int, m: int) -> int:
    """Upper bound for the system enumeration (disjointness ignored)."""
    if n == 0:
        return 1
    sizes = {(s, j): len(pair_paths(outer, inner, s, j, m))
             for s in range(1, n + 1) for j in range(1, n + 1)}
    total = 0
    for perm in permutations(range(1, n + 1)):
        prod = 1
        for j in range(n):
            prod *= sizes[(perm[j], j + 1)]
            if prod == 0:
                break
        total += prod
    return total


def lgv_signed_sum(outer: Partition, inner: Partition, n: int, m: int) -> Poly:
    """Sum of sign * weight over all vertex-disjoint systems."""
    total = Poly.zero()
    for system, sign in enumerate_systems(outer, inner, n, m):
        w = system.weight()
        total = total + (w if sign > 0 else -w)
    return total


# ---------------------------------------------------------------------------
# projections and cut edges


@dataclass(frozen=True)
class WallProjection:
    """A path's shadow on the plane z = ``plane``.

    The wall portion is translated up the floor (shifted right by the
    number of weight-1 floor steps crossed), clipped at the sink's
    x-coordinate and finished with a vertical run to (sink_x, m).  Edge p
    joins points p and p+1; edges with p < clip_index are translated
    images of the wall edges with the same index.
    """

    plane: int
    sink_x: int
    delta: int
    points: tuple[tuple[int, int], ...]
    clip_index: int

    @property
    def t_point(self) -> Vertex:
        x, y = self.points[self.clip_index]
        return (x, y, self.plane)

    def point_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.points)


def project(path: LatticePath, k: int) -> WallProjection | None:
    """The projection on z = k, or None where it is undefined."""
    sink_x, m, plane = path.sink
    if k < plane or k > path.vertices[0][2]:
        return None
    fv_idx = path.floor_vertex_index(k)
    if fv_idx is None:
        return None
    cx = path.vertices[fv_idx][0]
    if cx > sink_x:
        return None
    wi = path.wall_index
    delta = cx - path.vertices[wi][0]
    pts: list[tuple[int, int]] = [(cx, 0)]
    consumed = 0
    cur_x = cx
    for p in range(wi, len(path.vertices) - 1):
        if cur_x == sink_x:
            break
        nxt = path.vertices[p + 1]
        cur_x = nxt[0] + delta
        pts.append((cur_x, nxt[1]))
        consumed += 1
    if pts[-1][0] != sink_x:
        raise ContractViolation(f"projection never reaches x = {sink_x}: {path.vertices}")
    clip = len(pts) - 1
    for y in range(pts[-1][1] + 1, m + 1):
        pts.append((sink_x, y))
    return WallProjection(k, sink_x, delta, tuple(pts), clip)


def _intersect(a: LatticePath, b: LatticePath, k: int) -> bool:
    pa = project(a, k)
    if pa is None:
        return False
    pb = project(b, k)
    if pb is None:
        return False
    return bool(pa.point_set() & pb.point_set())


@dataclass(frozen=True)
class CutEdge:
    """Bookkeeping segment on the plane x = owner between z = level, level+1."""

    owner: int
    level: int
    kind: str  # "t" | "x"
    index: int  # t_{level+1} or the x-variable subscript
    weight: Poly
    endpoints: tuple[Vertex, Vertex]

    @property
    def height(self) -> int:
        """y-coordinate of the endpoint on the lower plane (comparison key)."""
        return self.endpoints[0][1]


def _floor_edge_kind(path: LatticePath, k: int) -> str | None:
    """Kind of the floor edge between z = k and z = k + 1 ("t" or "one")."""
    hi = path.floor_vertex_index(k + 1)
    lo = path.floor_vertex_index(k)
    if hi is None or lo is None or lo > path.wall_index:
        return None
    return "t" if path.vertices[hi][0] == path.vertices[lo][0] else "one"


def cut_edge(path: LatticePath, k: int) -> CutEdge | None:
    """The cut edge of the path between the planes z = k and z = k + 1."""
    pk = project(path, k)
    pk1 = project(path, k + 1)
    if pk is None or pk1 is None:
        return None
    tk = pk.t_point
    tk1 = pk1.t_point
    owner = path.sink[0]
    if tk[1] == tk1[1]:
        if _floor_edge_kind(path, k) != "t":
            raise ContractViolation(f"level-aligned clip points without a t floor edge at k={k}")
        return CutEdge(owner, k, "t", k + 1, Poly.t(k + 1), (tk, tk1))
    if tk1[1] > tk[1]:
        raise ContractViolation(f"clip points rose from z={k} to z={k + 1}")
    if _floor_edge_kind(path, k) != "one":
        raise ContractViolation(f"descending clip points without a weight-1 floor edge at k={k}")
    wi = path.wall_index
    m = path.m
    diagonals = []
    for p in range(pk1.clip_index, pk.clip_index):
        a, b = path.vertices[wi + p], path.vertices[wi + p + 1]
        if b[0] == a[0] + 1:
            diagonals.append(m - a[1])
    if len(diagonals) != 1:
        raise ContractViolation(
            f"expected exactly one vanishing diagonal between z={k} and z={k + 1}, got {diagonals}")
    s = diagonals[0]
    t_prime = (tk[0], tk[1] - 1, k + 1)
    return CutEdge(owner, k, "x", s, Poly.x(s), (tk, t_prime))


# ---------------------------------------------------------------------------
# step / slide operations


def _shift_range(path: LatticePath, lo: int, hi: int, dx: int) -> LatticePath:
    verts = list(path.vertices)
    for p in range(lo, hi + 1):
        x, y, z = verts[p]
        verts[p] = (x + dx, y, z)
    new = LatticePath(tuple(verts), path.wall_start)
    new.validate()
    return new


def _common_points(pa: WallProjection, pb: WallProjection) -> list[tuple[int, int]]:
    return sorted(pa.point_set() & pb.point_set(), key=lambda pt: pt[1])


def _step(paths: list[LatticePath], k: int) -> list[LatticePath] | None:
    """One forward step between the planes z = k and z = k + 1, or None.

    Only pairs in which both paths cross the slab (both have a floor edge
    between the two planes) qualify; intersections at z = k + 1 involving
    a path that sinks on that plane are left for the transpose operation.
    """
    sel = None
    for idx in range(len(paths) - 1):
        a, b = paths[idx], paths[idx + 1]
        if _floor_edge_kind(a, k) is None or _floor_edge_kind(b, k) is None:
            continue
        if _intersect(a, b, k + 1) and not _intersect(a, b, k):
            sel = idx
            break
    if sel is None:
        return None
    a, b = paths[sel], paths[sel + 1]
    if _floor_edge_kind(a, k) != "one" or _floor_edge_kind(b, k) != "t":
        raise ContractViolation(
            f"forward step at k={k}: floor edges are not (1, t) for pair {sel + 1}, {sel + 2}")
    pa, pb = project(a, k + 1), project(b, k + 1)
    c = _common_points(pa, pb)[0]
    ia, ib = pa.points.index(c), pb.points.index(c)
    if ia < 1 or ib < 1:
        raise ContractViolation(f"first common point at k+1={k + 1} has no preceding edges")
    if ia - 1 >= pa.clip_index or pa.points[ia - 1][0] != c[0] - 1:
        raise ContractViolation("left path's edge before the meeting point is not a real diagonal")
    if ib - 1 >= pb.clip_index or pb.points[ib - 1][0] != c[0]:
        raise ContractViolation("right path's edge before the meeting point is not a real vertical")
    fa = a.floor_vertex_index(k)
    fb = b.floor_vertex_index(k)
    new_a = _shift_range(a, fa, a.wall_index + ia - 1, +1)
    new_b = _shift_range(b, fb, b.wall_index + ib - 1, -1)
    out = list(paths)
    out[sel], out[sel + 1] = new_a, new_b
    return out


def _rstep(paths: list[LatticePath], k: int) -> list[LatticePath] | None:
    """One reverse step between the planes z = k and z = k + 1, or None."""
    sel = None
    for idx in range(len(paths) - 2, -1, -1):
        a, b = paths[idx], paths[idx + 1]
        if _floor_edge_kind(a, k) is None or _floor_edge_kind(b, k) is None:
            continue
        if not (_intersect(a, b, k) and not _intersect(a, b, k + 1)):
            continue
        pa, pb = project(a, k), project(b, k)
        if pa.t_point[1] < pb.t_point[1]:
            continue  # left cut edge strictly below the right one
        sel = idx
        break
    if sel is None:
        return None
    a, b = paths[sel], paths[sel + 1]
    if _floor_edge_kind(a, k) != "t" or _floor_edge_kind(b, k) != "one":
        raise ContractViolation(
            f"reverse step at k={k}: floor edges are not (t, 1) for pair {sel + 1}, {sel + 2}")
    pa, pb = project(a, k), project(b, k)
    d = _common_points(pa, pb)[-1]
    ia, ib = pa.points.index(d), pb.points.index(d)
    if ia + 1 >= len(pa.points) or ib + 1 >= len(pb.points):
        raise ContractViolation(f"last common point at k={k} has no succeeding edges")
    if ia >= pa.clip_index or pa.points[ia + 1][0] != d[0]:
        raise ContractViolation("left path's edge after the meeting point is not a real vertical")
    if ib >= pb.clip_index or pb.points[ib + 1][0] != d[0] + 1:
        raise ContractViolation("right path's edge after the meeting point is not a real diagonal")
    fa = a.floor_vertex_index(k)
    fb = b.floor_vertex_index(k)
    new_a = _shift_range(a, fa, a.wall_index + ia, -1)
    new_b = _shift_range(b, fb, b.wall_index + ib, +1)
    out = list(paths)
    out[sel], out[sel + 1] = new_a, new_b
    return out


def _slide(paths: list[LatticePath], k: int) -> list[LatticePath]:
    for _ in range(_SLIDE_CAP):
        stepped = _step(paths, k)
        if stepped is None:
            return paths
        paths = stepped
    raise ContractViolation(f"forward slide at k={k} did not terminate")


def _rslide(paths: list[LatticePath], k: int) -> list[LatticePath]:
    for _ in range(_SLIDE_CAP):
        stepped = _rstep(paths, k)
        if stepped is None:
            return paths
        paths = stepped
    raise ContractViolation(f"reverse slide at k={k} did not terminate")


def step_slide(system: PathSystem, k: int, direction: str = "forward",
               check: bool = True) -> PathSystem:
    """Slide the system between the planes z = k and z = k + 1 until stable."""
    if direction not in ("forward", "reverse"):
        raise ValueError(f"unknown direction {direction!r}")
    paths = list(system.paths)
    if check:
        if direction == "forward":
            for i in range(len(paths)):
                for j in range(i + 1, len(paths)):
                    if _intersect(paths[i], paths[j], k):
                        raise ValueError(
                            f"forward slide requires no intersections on z = {k}")
        else:
            heights = []
            for i in range(len(paths)):
                for j in range(i + 1, len(paths)):
                    if _intersect(paths[i], paths[j], k + 1):
                        raise ValueError(
                            f"reverse slide requires no intersections on z = {k + 1}")
                pk = project(paths[i], k)
                pk1 = project(paths[i], k + 1)
                if pk is not None and pk1 is not None:
                    heights.append(pk.t_point[1])
            if any(a < b for a, b in zip(heights, heights[1:])):
                raise ValueError("reverse slide requires non-increasing cut edges")
    paths = _slide(paths, k) if direction == "forward" else _rslide(paths, k)
    return replace(system, paths=tuple(paths))


# ---------------------------------------------------------------------------
# transpose and the involution


def _transpose(paths: list[LatticePath], sources: list[int], k: int
               ) -> tuple[list[LatticePath], list[int]] | None:
    """Exchange the tails of two paths meeting on the plane z = k.

    The undefined corner of the construction is resolved as follows: the
    floor segment of the lower-sinking path is translated in x so that it
    hangs from the sink-plane path's floor exit, and the wall segments are
    translated between the two planes by the x/z offsets forced by gluing
    the pieces endpoint-to-endpoint (the projection shift of the lower
    path).  Step weights depend only on the z-level (floor) or the
    y-height (wall), so every translated piece keeps its weight.
    """
    n = len(paths)
    candidates: list[tuple[tuple[int, int], int, int]] = []
    for a in range(n):
        if paths[a].plane != k:
            continue
        proj_a = project(paths[a], k)
        for b in range(n):
            if b == a:
                continue
            proj_b = project(paths[b], k)
            if proj_b is None:
                continue
            for pt in proj_a.point_set() & proj_b.point_set():
                candidates.append((pt, a, b))
    if not candidates:
        return None
    c = min(pt for pt, _, _ in candidates)
    through = sorted({slot for pt, a, b in candidates if pt == c for slot in (a, b)})
    i, j = through[0], through[1]
    pi, pj = paths[i], paths[j]
    if pi.plane != k:
        raise ContractViolation(
            f"transpose at z={k}: lower-index path through the meeting point has no sink there")
    kp = pj.plane
    if kp > k:
        raise ContractViolation(f"transpose partner sinks above the plane z={k}")
    if pi.wall_start and kp < k:
        raise ContractViolation(
            "transpose would hang floor steps below a wall-only path")
    proj_j = project(pj, k)
    idx_c_i = pi.vertices.index((c[0], c[1], k))
    idx_c_proj = proj_j.points.index(c)
    if idx_c_proj > proj_j.clip_index:
        raise ContractViolation("meeting point lies on the partner's vertical tail")
    jc = pj.wall_index + idx_c_proj
    delta = proj_j.delta
    ei = pi.wall_index
    ej = pj.floor_vertex_index(k)
    fj = pj.wall_index
    shift_x = pi.vertices[ei][0] - pj.vertices[ej][0]
    dz = kp - k
    if pj.vertices[ej][0] - pj.vertices[fj][0] != delta:
        raise ContractViolation("projection shift mismatch while splicing")

    new_sink_j = (
        list(pi.vertices[:ei + 1])
        + [(v[0] + shift_x, v[1], v[2]) for v in pj.vertices[ej + 1:fj + 1]]
        + [(v[0] - delta, v[1], v[2] + dz) for v in pi.vertices[ei + 1:idx_c_i + 1]]
        + list(pj.vertices[jc + 1:])
    )
    new_sink_i = (
        list(pj.vertices[:ej + 1])
        + [(v[0] + delta, v[1], k) for v in pj.vertices[fj + 1:jc + 1]]
        + list(pi.vertices[idx_c_i + 1:])
    )
    path_sink_i = LatticePath(tuple(new_sink_i), pj.wall_start)
    path_sink_j = LatticePath(tuple(new_sink_j), pi.wall_start)
    path_sink_i.validate()
    path_sink_j.validate()
    out_paths = list(paths)
    out_paths[i], out_paths[j] = path_sink_i, path_sink_j
    out_sources = list(sources)
    out_sources[i], out_sources[j] = out_sources[j], out_sources[i]
    return out_paths, out_sources


def transpose_k(system: PathSystem, k: int) -> PathSystem:
    """The tail-exchange operation on the plane z = k (identity when idle)."""
    result = _transpose(list(system.paths), list(system.sources), k)
    if result is None:
        return system
    paths, sources = result
    return replace(system, paths=tuple(paths), sources=tuple(sources))


def path_involution(system: PathSystem) -> PathSystem:
    """The sign-reversing, weight-preserving involution on disjoint systems.

    For the minimal plane index k where slide up, transpose at z = k + 1
    and slide back changes the system, that image is returned; fixed
    points are the good systems.
    """
    ell = system.outer.length
    if ell == 0:
        return system
    slid = list(system.paths)
    for k in range(ell):
        slid = _slide(slid, k)
        result = _transpose(list(slid), list(system.sources), k + 1)
        if result is None:
            continue
        t_paths, t_sources = result
        back = t_paths
        for kk in range(k, -1, -1):
            back = _rslide(back, kk)
        candidate = replace(system, paths=tuple(back), sources=tuple(t_sources))
        if candidate != system:
            return candidate
    return system


def good_systems(outer: Partition, inner: Partition, n: int, m: int) -> list[PathSystem]:
    out = []
    for system, _sign in enumerate_systems(outer, inner, n, m):
        if path_involution(system) == system:
            out.append(system)
    return out


def good_sum(outer: Partition, inner: Partition, n: int, m: int) -> Poly:
    """Sum of weights over involution-fixed systems."""
    total = Poly.zero()
    for system in good_systems(outer, inner, n, m):
        total = total + system.weight()
    return total


# ---------------------------------------------------------------------------
# bijection with reverse plane partitions


def _lift_sources(system: PathSystem) -> list[LatticePath]:
    """Shift each source one step up-right onto the wall-level floor point."""
    oc = system.outer.conjugate()
    out = []
    for j, (path, src) in enumerate(zip(system.paths, system.sources), start=1):
        if src != j:
            raise ValueError("the correspondence applies to identity-permutation systems")
        if path.wall_start:
            out.append(path)
            continue
        top = (src, 0, oc.part(src))
        expected = source_point(oc, src)
        if path.source != expected:
            raise ContractViolation(f"path {j} does not start at its source")
        out.append(LatticePath((top,) + path.vertices, path.wall_start))
    return out


def _strip_sources(paths: list[LatticePath], outer: Partition) -> list[LatticePath]:
    oc = outer.conjugate()
    out = []
    for j, path in enumerate(paths, start=1):
        if path.wall_start:
            out.append(path)
            continue
        first, second = path.vertices[0], path.vertices[1]
        if first != (j, 0, oc.part(j)) or second != (j - 1, 0, oc.part(j) - 1):
            raise ContractViolation(
                f"path {j} does not begin with the weight-1 source step after reverse slides")
        out.append(LatticePath(path.vertices[1:], path.wall_start))
    return out


def reduced_filling_of(system: PathSystem) -> ReducedFilling:
    """Collect the cut edges of a good system into a reduced filling."""
    lam, mu = system.outer, system.inner
    shape = SkewShape(lam, mu)
    paths = _lift_sources(system)
    cells: dict[tuple[int, int], int | None] = {}
    for k in range(lam.length):
        paths = _slide(paths, k)
        for col in range(mu.part(k + 1) + 1, lam.part(k + 1) + 1):
            ce = cut_edge(paths[col - 1], k)
            if ce is None:
                raise ContractViolation(f"cut edge of column {col} at level {k} is undefined")
            cells[(k + 1, col)] = EMPTY if ce.kind == "t" else ce.index
    rows = tuple(
        tuple(cells[(r, c)] for c in range(mu.part(r) + 1, lam.part(r) + 1))
        for r in range(1, lam.length + 1)
    )
    return ReducedFilling(shape, rows)


def to_rpp(system: PathSystem, check_good: bool = False) -> RPP:
    """The reverse plane partition carrying the same weight as a good system.

    The caller is expected to pass a good system; ``check_good=True`` pays
    for an explicit fixed-point check first.
    """
    if check_good and path_involution(system) != system:
        raise ValueError("the correspondence is defined on good systems only")
    return complete_filling(reduced_filling_of(system))


def _column_path(col: int, filling: ReducedFilling, m: int) -> LatticePath:
    shape = filling.shape
    oc, ic = shape.outer.conjugate(), shape.inner.conjugate()
    hi, lo = oc.part(col), ic.part(col)
    x = col
    verts: list[Vertex] = [(col, 0, hi)]
    filled: set[int] = set()
    for r in range(hi, lo, -1):
        v = filling.entry(r, col)
        if v is EMPTY:
            verts.append((x, 0, r - 1))
        else:
            if v > m:
                raise ValueError(f"entry {v} exceeds the variable count m={m}")
            filled.add(v)
            x -= 1
            verts.append((x, 0, r - 1))
    for y in range(m):
        if (m - y) in filled:
            x += 1
        verts.append((x, y + 1, lo))
    path = LatticePath(tuple(verts), wall_start=(hi == lo))
    path.validate()
    if path.sink != (col, m, lo):
        raise ContractViolation(f"column path {col} misses its sink")
    return path


def from_rpp(t: RPP, m: int, n: int | None = None) -> PathSystem:
    """Rebuild the good path system whose weight matches the given RPP."""
    shape = t.shape
    lam, mu = shape.outer, shape.inner
    if t.max_entry() > m:
        raise ValueError(f"entries exceed the variable count m={m}")
    if n is None:
        n = max(lam.part(1), mu.part(1))
    if n < max(lam.part(1), mu.part(1)):
        raise ValueError("n must cover every column of the shape")
    filling = reduce_filling(t)
    paths = [_column_path(col, filling, m) for col in range(1, n + 1)]
    for k in range(lam.length - 1, -1, -1):
        paths = _rslide(paths, k)
    stripped = _strip_sources(paths, lam)
    system = PathSystem(lam, mu, n, m, tuple(stripped), tuple(range(1, n + 1)))
    system.validate()
    return system


# ---------------------------------------------------------------------------
# serialization


def system_to_json_obj(system: PathSystem) -> dict:
    return {
        "shape": str(SkewShape(system.outer, system.inner)),
        "n": system.n,
        "m": system.m,
        "sources": list(system.sources),
        "paths": [[list(v) for v in path.vertices] for path in system.paths],
    }


def system_from_json_obj(obj: dict) -> PathSystem:
    from .shapes import parse_shape

    shape = parse_shape(obj["shape"])
    lam, mu = shape.outer, shape.inner
    n, m = obj["n"], obj["m"]
    sources = tuple(obj["sources"])
    oc = lam.conjugate()
    paths = []
    for j, verts in enumerate(obj["paths"], start=1):
        vertices = tuple(tuple(v) for v in verts)
        src = sources[j - 1]
        wall_start = vertices[0][0] == src
        paths.append(LatticePath(vertices, wall_start))
    system = PathSystem(lam, mu, n, m, tuple(paths), sources)
    system.validate()
    return system
