"""Exact planar geometry: directions, convex polygons, U-polygon checks,
cross ratios, the rescaled midpoint iteration, and discrete parallel X-rays.

Every yes/no decision (parallelism, convexity, orientation, line membership)
is made on exact ring elements; floats appear only in slopes, angles, the
midpoint iteration, and diagnostics, where closed-form identities back the
tolerances.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .cyclo import CycInt, cross_sign, imag_part_sign, is_parallel, real_part_sign


class Direction:
    """A direction of the plane with an exact ring representative.

    The stored representative is the one whose angle with the positive real
    axis lies in [0, pi); the cached float angle is for sorting and display.
    """

    __slots__ = ("rep", "angle")

    def __init__(self, rep: CycInt):
        if rep.is_zero():
            raise ValueError("zero vector has no direction")
        sy = imag_part_sign(rep)
        if sy < 0 or (sy == 0 and real_part_sign(rep) < 0):
            rep = -rep
            sy = -sy
        object.__setattr__(self, "rep", rep)
        if sy == 0:
            angle = 0.0
        else:
            x, y = rep.embed_xy()
            angle = math.atan2(y, x)
        object.__setattr__(self, "angle", angle)

    def __setattr__(self, name, value):
        raise AttributeError("Direction is immutable")

    def __repr__(self) -> str:
        return f"Direction({self.rep!r}, angle={self.angle:.6f})"

    def is_parallel(self, other: "Direction" | CycInt) -> bool:
        rep = other.rep if isinstance(other, Direction) else other
        return is_parallel(self.rep, rep)

    def slope(self) -> float:
        """Slope tan(angle); vertical directions give +inf."""
        if self.rep == -self.rep.conj():
            return math.inf
        if self.rep == self.rep.conj():
            return 0.0
        x, y = self.rep.embed_xy()
        return y / x


class DirectionSet:
    """Pairwise non-parallel directions, sorted by angle."""

    __slots__ = ("dirs",)

    def __init__(self, directions):
        dirs = sorted(directions, key=lambda d: d.angle)
        for i, d in enumerate(dirs):
            for e in dirs[i + 1:]:
                if d.is_parallel(e):
                    raise ValueError(f"parallel pair in direction set: {d!r}, {e!r}")
        object.__setattr__(self, "dirs", tuple(dirs))

    def __setattr__(self, name, value):
        raise AttributeError("DirectionSet is immutable")

    def __len__(self) -> int:
        return len(self.dirs)

    def __iter__(self):
        return iter(self.dirs)

    def __getitem__(self, i):
        return self.dirs[i]

    def __repr__(self) -> str:
        return f"DirectionSet({list(self.dirs)!r})"

    def contains_parallel(self, vec: CycInt | Direction) -> bool:
        rep = vec.rep if isinstance(vec, Direction) else vec
        return any(d.is_parallel(rep) for d in self.dirs)


def direction_classes(vectors) -> list[Direction]:
    """Directions of the given vectors, one per parallel class, angle order."""
    classes: list[Direction] = []
    for v in vectors:
        rep = v.rep if isinstance(v, Direction) else v
        if not any(c.is_parallel(rep) for c in classes):
            classes.append(Direction(rep))
    classes.sort(key=lambda d: d.angle)
    return classes


class Polygon:
    """Strictly convex polygon with exact vertices in counterclockwise order.

    A clockwise vertex list is reversed on construction; anything collinear,
    self-crossing, or with consecutive parallel edges is rejected.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        verts = tuple(vertices)
        if len(verts) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        n = verts[0].n
        if any(v.n != n for v in verts):
            raise ValueError("vertices live in different rings")
        signs = _turn_signs(verts)
        if all(s < 0 for s in signs):
            verts = tuple(reversed(verts))
            signs = [-s for s in signs]
        if not all(s > 0 for s in signs):
            raise ValueError("vertices are not in strictly convex position")
        _check_single_winding(verts)
        object.__setattr__(self, "vertices", verts)

    def __setattr__(self, name, value):
        raise AttributeError("Polygon is immutable")

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Polygon(<{len(self.vertices)} vertices in Z[zeta_{self.n}]>)"

    @property
    def n(self) -> int:
        return self.vertices[0].n

    def edge_vectors(self) -> list[CycInt]:
        verts = self.vertices
        return [verts[(i + 1) % len(verts)] - verts[i] for i in range(len(verts))]

    def as_floats(self) -> np.ndarray:
        return np.array([v.embed_xy() for v in self.vertices], dtype=float)

    def is_centrally_symmetric(self) -> bool:
        s = len(self.vertices)
        if s % 2:
            return False
        half = s // 2
        return all(self.vertices[(i + half) % s] == -self.vertices[i] for i in range(s))


def _turn_signs(verts) -> list[int]:
    s = len(verts)
    edges = [verts[(i + 1) % s] - verts[i] for i in range(s)]
    if any(e.is_zero() for e in edges):
        raise ValueError("repeated consecutive vertices")
    return [cross_sign(edges[i], edges[(i + 1) % s]) for i in range(s)]


def _check_single_winding(verts) -> None:
    # All-left turns also hold for star polygons winding several times; the
    # total turning angle separates those, and float precision is ample for
    # distinguishing integers.
    pts = [v.embed_xy() for v in verts]
    s = len(pts)
    total = 0.0
    for i in range(s):
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % s]
        cx, cy = pts[(i + 2) % s]
        ux, uy = bx - ax, by - ay
        vx, vy = cx - bx, cy - by
        total += math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
    if abs(total - 2 * math.pi) > 0.5:
        raise ValueError("vertex cycle winds more than once; not a convex polygon")


def edge_directions(polygon: Polygon) -> list[Direction]:
    """Canonical direction of each edge, in cyclic order with multiplicity."""
    return [Direction(e) for e in polygon.edge_vectors()]


def convex_hull_exact(points) -> list[CycInt]:
    """Convex hull vertices, counterclockwise, via exact predicates."""
    unique = list(dict.fromkeys(points))
    if len(unique) < 3:
        raise ValueError("hull needs at least 3 distinct points")

    def cmp(a: CycInt, b: CycInt) -> int:
        d = a - b
        s = real_part_sign(d)
        return s if s else imag_part_sign(d)

    pts = sorted(unique, key=functools.cmp_to_key(cmp))

    def build(seq):
        chain: list[CycInt] = []
        for p in seq:
            while len(chain) >= 2 and cross_sign(chain[-1] - chain[-2], p - chain[-1]) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise ValueError("points are collinear")
    return hull


def is_u_polygon(polygon: Polygon, dirs: DirectionSet) -> bool:
    """Whether every line through a vertex in a direction of the set meets
    another vertex, decided exactly."""
    if len(dirs) == 0:
        raise ValueError("need at least one direction")
    verts = polygon.vertices
    for u in dirs:
        for i, v in enumerate(verts):
            hit = False
            for j, w in enumerate(verts):
                if i != j and u.is_parallel(w - v):
                    hit = True
                    break
            if not hit:
                return False
    s = len(verts)
    if s % 2 != 0 or s < 2 * len(dirs):
        # A true verdict forces an even edge count 2m with m >= card(U).
        raise RuntimeError(
            f"internal error: U-polygon verdict with {s} vertices against "
            f"{len(dirs)} directions violates the evenness consequence"
        )
    return True


def u_class(polygon: Polygon, dirs: DirectionSet) -> int:
    """Maximal number of consecutive edges with directions in the set,
    capped at card(U) per the definition's range."""
    if not is_u_polygon(polygon, dirs):
        raise ValueError("u_class requires a U-polygon for the given directions")
    flags = [dirs.contains_parallel(e) for e in polygon.edge_vectors()]
    cap = len(dirs)
    if all(flags):
        return cap
    best = 0
    run = 0
    for f in flags + flags:  # doubled to count runs across the wrap
        run = run + 1 if f else 0
        best = max(best, run)
    best = min(best, len(flags))
    assert best >= 1, "U-polygon with no edge parallel to the direction set"
    return min(best, cap)


def alternate_vertex_split(polygon: Polygon) -> tuple[list[CycInt], list[CycInt]]:
    """Vertices at even and odd cyclic positions."""
    if len(polygon) % 2 != 0:
        raise ValueError("alternate split needs an even vertex count")
    return list(polygon.vertices[0::2]), list(polygon.vertices[1::2])


# --- cross ratios ------------------------------------------------------------


def cross_ratio(t1: float, t2: float, t3: float, t4: float) -> float:
    """Cross ratio of four distinct extended reals (math.inf allowed)."""
    vals = (t1, t2, t3, t4)
    for i in range(4):
        for j in range(i + 1, 4):
            if vals[i] == vals[j]:
                raise ValueError(f"cross ratio needs distinct values, got {vals}")

    def diff(a: float, b: float) -> float:
        return 1.0 if math.isinf(a) or math.isinf(b) else a - b

    return (diff(t3, t1) * diff(t4, t2)) / (diff(t3, t2) * diff(t4, t1))


def slope_of_vector(x: float, y: float) -> float:
    return math.inf if x == 0.0 else y / x


def cross_ratio_of_vectors(vectors) -> float:
    """Cross ratio of the slopes of four float vectors."""
    slopes = [slope_of_vector(x, y) for x, y in vectors]
    return cross_ratio(*slopes)


def cross_ratio_of_directions(d1: Direction, d2: Direction, d3: Direction,
                              d4: Direction) -> float:
    """Cross ratio of the slopes of four pairwise non-parallel directions."""
    ds = (d1, d2, d3, d4)
    for i in range(4):
        for j in range(i + 1, 4):
            if ds[i].is_parallel(ds[j]):
                raise ValueError("directions must be pairwise non-parallel")
    return cross_ratio(*(d.slope() for d in ds))


def consecutive_edge_cross_ratio_regular(m: int) -> float:
    """Cross ratio of slopes of four consecutive edge directions of a regular
    m-gon (m even, >= 8): (2 + 2cos(4pi/m)) / (1 + 2cos(4pi/m))."""
    if m % 2 != 0 or m < 8:
        raise ValueError(f"need an even m >= 8, got {m}")
    c = 2.0 * math.cos(4.0 * math.pi / m)
    if abs(1.0 + c) < 1e-12:
        raise ArithmeticError("degenerate denominator")
    q = (2.0 + c) / (1.0 + c)
    if abs(q / (q - 1.0) - 2.0 - c) > 1e-12:
        raise ArithmeticError("cross-ratio identity check failed")
    return q


# --- float polygons: midpoints, rescaled iteration, affine residual ----------


@dataclass
class AffineMap:
    """Non-singular affine map of the plane on float coordinates."""

    matrix: np.ndarray
    shift: np.ndarray = field(default_factory=lambda: np.zeros(2))

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=float).reshape(2, 2)
        self.shift = np.asarray(self.shift, dtype=float).reshape(2)
        if abs(np.linalg.det(self.matrix)) <= 1e-9:
            raise ValueError("affine map is singular")

    def apply(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(points, dtype=float) @ self.matrix.T + self.shift


def _to_float_polygon(polygon) -> np.ndarray:
    if isinstance(polygon, Polygon):
        return polygon.as_floats()
    arr = np.asarray(polygon, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 3:
        raise ValueError("expected an (s, 2) array of vertices")
    return arr


def midpoint_polygon(polygon) -> np.ndarray:
    """Polygon of edge midpoints, as floats.

    Midpoints generally have half-integer ring coordinates, so even exact
    inputs come back as float polygons.
    """
    arr = _to_float_polygon(polygon)
    return (arr + np.roll(arr, -1, axis=0)) / 2.0


def vertex_centroid(polygon) -> np.ndarray:
    return _to_float_polygon(polygon).mean(axis=0)


def _check_nondegenerate(arr: np.ndarray) -> None:
    edges = np.roll(arr, -1, axis=0) - arr
    nxt = np.roll(edges, -1, axis=0)
    crosses = edges[:, 0] * nxt[:, 1] - edges[:, 1] * nxt[:, 0]
    scale = float(np.abs(edges).max()) ** 2
    if scale == 0.0 or np.any(np.abs(crosses) < 1e-12 * scale):
        raise ValueError("degenerate polygon: collinear or repeated vertices")


def darboux_iterate(polygon, k: int, keep_history: bool = False):
    """k double-steps of the rescaled midpoint iteration P -> sec(pi/s) M(P).

    The input is recentered to its vertex centroid first. Returns the final
    polygon, or the list [P_0, P_2, ..., P_2k] when keep_history is set.
    """
    arr = _to_float_polygon(polygon).copy()
    _check_nondegenerate(arr)
    arr -= arr.mean(axis=0)
    sec = 1.0 / math.cos(math.pi / len(arr))
    history = [arr.copy()]
    for _ in range(k):
        arr = midpoint_polygon(arr) * sec
        arr = midpoint_polygon(arr) * sec
        history.append(arr.copy())
    return history if keep_history else arr


def affine_regularity_residual(polygon) -> float:
    """Max vertex deviation from the best affine image of a regular polygon.

    Fits translation plus a real-linear map of the regular s-gon (rotated
    copies included) by projecting onto the two dominant discrete Fourier
    modes; zero exactly on affinely regular polygons, up to float noise.
    """
    arr = _to_float_polygon(polygon)
    s = len(arr)
    z = arr[:, 0] + 1j * arr[:, 1]
    spectrum = np.fft.fft(z) / s
    alpha, beta = spectrum[1], spectrum[-1]
    det = abs(alpha) ** 2 - abs(beta) ** 2
    scale = abs(alpha) ** 2 + abs(beta) ** 2
    if scale == 0.0 or abs(det) < 1e-12 * scale:
        raise ValueError("singular affine fit (collinear vertices)")
    ref = np.exp(2j * math.pi * np.arange(s) / s)
    fitted = spectrum[0] + alpha * ref + beta * np.conj(ref)
    return float(np.abs(z - fitted).max())


def random_convex_polygon(s: int, rng, max_tries: int = 5000) -> np.ndarray:
    """A random strictly convex s-gon with vertices on an annulus,
    rejection-sampled; deterministic for a given generator state."""
    if s < 3:
        raise ValueError("need at least 3 vertices")
    for _ in range(max_tries):
        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, s))
        gaps = np.diff(angles, append=angles[0] + 2.0 * math.pi)
        if gaps.min() < 0.05:
            continue
        radii = rng.uniform(0.7, 1.3, s)
        pts = np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])
        edges = np.roll(pts, -1, axis=0) - pts
        nxt = np.roll(edges, -1, axis=0)
        crosses = edges[:, 0] * nxt[:, 1] - edges[:, 1] * nxt[:, 0]
        if np.all(crosses > 1e-6):
            return pts
    raise RuntimeError(f"no convex {s}-gon found in {max_tries} draws")


def edges_within_directions(polygon, dirs: DirectionSet, tol: float) -> bool:
    """Whether every edge of a float polygon is angularly within tol of a
    direction of the set (angles compared mod pi)."""
    arr = _to_float_polygon(polygon)
    edges = np.roll(arr, -1, axis=0) - arr
    for ex, ey in edges:
        angle = math.atan2(ey, ex) % math.pi
        dist = min(
            min(abs(angle - u.angle), math.pi - abs(angle - u.angle)) for u in dirs
        )
        if dist > tol:
            return False
    return True


# --- discrete parallel X-rays -------------------------------------------------


@dataclass(frozen=True)
class XRayTable:
    """Counts of points per line parallel to one direction.

    Keys are the exact line invariants kappa(z) = z*conj(u) - conj(z)*u;
    two points share a key exactly when they lie on the same line parallel
    to the direction u.
    """

    direction: Direction
    lines: dict

    def total(self) -> int:
        return sum(self.lines.values())

    def sorted_items(self) -> list[tuple[CycInt, int]]:
        return sorted(self.lines.items(), key=lambda kv: kv[0].coeffs)


def xray(points, direction: Direction) -> XRayTable:
    """Discrete parallel X-ray of a finite point list in one direction."""
    u = direction.rep
    uc = u.conj()
    lines: dict[CycInt, int] = {}
    for z in points:
        if z.n != u.n:
            raise ValueError(f"modulus mismatch: {z.n} != {u.n}")
        key = z * uc - z.conj() * u
        lines[key] = lines.get(key, 0) + 1
    return XRayTable(direction=direction, lines=lines)


def xray_equal(points_a, points_b, dirs: DirectionSet) -> bool:
    """Exact equality of the X-ray tables of two point lists in every
    direction of the set."""
    return all(
        xray(points_a, u).lines == xray(points_b, u).lines for u in dirs
    )
