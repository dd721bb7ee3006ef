"""Constructors for U-polygons: affinely regular polygons with exact ring
vertices, the edge-to-edge attachment that doubles edge counts, and the
homothety search that plants a finite configuration inside a concrete
model set patch.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclo import CycInt, galois_apply, phi, primitive_2n_root
from .errors import BudgetExceeded, Inadmissible, SearchFailed
from .fields import admissible_by_divisibility, canonicalize
from .geometry import (
    DirectionSet,
    Polygon,
    convex_hull_exact,
    direction_classes,
    is_u_polygon,
    u_class,
)
from .modelset import ModelSetSpec, contains, generate, star_map


@dataclass(frozen=True)
class Homothety:
    """z -> scale * z + shift with a positive real ring element as scale.

    The scale is a k-th power of a contracting base, recorded alongside so
    that serialized output can reproduce the search result.
    """

    scale: CycInt
    k: int
    shift: CycInt

    def __post_init__(self):
        if not self.scale.is_real():
            raise ValueError("homothety scale must be a real ring element")
        if not self.scale.embed().real > 0:
            raise ValueError("homothety scale must be positive")
        if self.scale.n != self.shift.n:
            raise ValueError("scale and shift live in different rings")

    def apply(self, z: CycInt) -> CycInt:
        return self.scale * z + self.shift

    def to_dict(self) -> dict:
        return {"scale": self.scale.to_dict(), "k": self.k, "shift": self.shift.to_dict()}

    @classmethod
    def from_dict(cls, data: dict) -> "Homothety":
        return cls(
            scale=CycInt.from_dict(data["scale"]),
            k=int(data["k"]),
            shift=CycInt.from_dict(data["shift"]),
        )

    @classmethod
    def identity(cls, n: int) -> "Homothety":
        return cls(scale=CycInt.one(n), k=0, shift=CycInt.zero(n))


def regular_polygon_exact(n: int, k: int) -> Polygon:
    """The regular k-gon with vertices the k-th roots of unity in Z[zeta_n].

    Exists exactly when k divides lcm(2, n); for odd n the even-order roots
    come from -zeta^((n+1)/2), which embeds as exp(pi*i/n).
    """
    if k < 3:
        raise ValueError(f"a polygon needs at least 3 vertices, got k={k}")
    root_order = n if n % 2 == 0 else 2 * n
    if root_order % k != 0:
        raise ValueError(f"Z[zeta_{n}] contains no primitive {k}-th root of unity")
    if n % k == 0:
        rho = CycInt.zeta(n, n // k)
    else:
        rho = primitive_2n_root(n) ** (root_order // k)
    return Polygon([rho**j for j in range(k)])


def affine_parallelogram(n: int) -> Polygon:
    """The parallelogram spanned by 1 and zeta_n: vertices 0, 1, 1+zeta, zeta."""
    one = CycInt.one(n)
    z = CycInt.zeta(n)
    return Polygon([CycInt.zero(n), one, one + z, z])


def affine_hexagon(n: int) -> Polygon:
    """A centrally symmetric affinely regular hexagon with vertices in Z[zeta_n]."""
    one = CycInt.one(n)
    z = CycInt.zeta(n)
    return Polygon([one, z, z - one, -one, -z, one - z])


def affinely_regular_polygon_in_ring(n: int, k: int) -> Polygon:
    """An affinely regular k-gon with vertices in Z[zeta_n] (k even, >= 4).

    k = 4 and k = 6 always exist (any parallelogram / the spanned hexagon
    are affine images of the regular ones). Every other k reaching here
    comes from an admissible edge count m via k = lcm(m/2, 2), and then k
    divides lcm(2, n), so the exact regular k-gon itself is available:
    outside {8, 12}, admissibility means m | 2n or m = 4d with d an odd
    divisor of n. If m/2 is odd, k = m = 2d' for an odd divisor d' of n,
    and 2d' | lcm(2, n) whether n is odd or divisible by 4; if m/2 is even,
    k = m/2, and m | 2n gives k | n while m = 4d gives k = 2d | lcm(2, n)
    by the same parity split.
    """
    if k == 4:
        return affine_parallelogram(n)
    if k == 6:
        return affine_hexagon(n)
    return regular_polygon_exact(n, k)


def _centered_copy(polygon: Polygon) -> Polygon:
    """An origin-centered copy, scaling by 2 when the centroid is a half point."""
    if polygon.is_centrally_symmetric():
        return polygon
    s = len(polygon)
    total = polygon.vertices[0]
    for v in polygon.vertices[1:]:
        total = total + v
    doubled = 2 * total
    if any(c % s for c in doubled.coeffs):
        raise ValueError("cannot center this polygon inside the ring")
    c2 = CycInt(polygon.n, (c // s for c in doubled.coeffs))
    centered = Polygon([2 * v - c2 for v in polygon.vertices])
    if not centered.is_centrally_symmetric():
        raise ValueError("polygon is not centrally symmetric about its centroid")
    return centered


def attach_translates(polygon: Polygon) -> tuple[Polygon, DirectionSet]:
    """Attach one translate of the polygon across each edge and take the hull.

    For a centrally symmetric s-gon P centered at the origin, translating P
    by v_j + v_{j+1} lays a copy edge-to-edge across edge j; the hull of P
    and its s translates is a U'-polygon with 2s edges, where U' holds the
    s interpoint directions of P (its edges and all its diagonals).
    """
    verts = polygon.vertices
    s = len(verts)
    if not polygon.is_centrally_symmetric():
        raise ValueError("attachment requires a centrally symmetric polygon "
                         "centered at the origin")
    half = s // 2
    points: list[CycInt] = list(verts)
    for j in range(s):
        t = verts[j] + verts[(j + 1) % s]
        copy = [v + t for v in verts]
        # The translate must share edge j with reversed orientation.
        assert copy[(j + half) % s] == verts[(j + 1) % s]
        assert copy[(j + half + 1) % s] == verts[j]
        points.extend(copy)

    hull = Polygon(convex_hull_exact(points))
    if len(hull) != 2 * s:
        raise RuntimeError(
            f"attachment hull has {len(hull)} edges, expected {2 * s}"
        )

    diffs = [verts[i] - verts[j] for i in range(s) for j in range(i + 1, s)]
    classes = direction_classes(diffs)
    if len(classes) != s:
        raise RuntimeError(
            f"expected {s} interpoint direction classes, found {len(classes)}"
        )
    dirs = DirectionSet(classes)

    if not is_u_polygon(hull, dirs):
        raise RuntimeError("attachment hull failed the U-polygon check")
    cls = u_class(hull, dirs)
    if cls != len(dirs):
        raise RuntimeError(f"attachment class {cls} != card(U') = {len(dirs)}")
    return hull, dirs


def construct_u_polygon_ring(n: int, m: int) -> tuple[Polygon, DirectionSet]:
    """A verified U-polygon with m edges and class m/2 in Z[zeta_n].

    For odd m/2 the affinely regular m-gon itself works, with U the
    directions of m/2 consecutive edges; for even m/2 the attachment of an
    affinely regular (m/2)-gon produces it. Inadmissible (n, m) raises.
    """
    if not admissible_by_divisibility(n, m):
        raise Inadmissible(
            n, m,
            "m not in {8, 12}, m does not divide 2n, and m is not 4d "
            "for an odd divisor d of n",
        )
    half = m // 2
    if half % 2 == 1:
        poly = affinely_regular_polygon_in_ring(n, m)
        dirs = DirectionSet(direction_classes(poly.edge_vectors()[:half]))
        if len(dirs) != half or not is_u_polygon(poly, dirs):
            raise RuntimeError("regular polygon failed the U-polygon check")
        cls = u_class(poly, dirs)
        if cls != half:
            raise RuntimeError(f"class {cls} != m/2 = {half}")
        return poly, dirs
    base = _centered_copy(affinely_regular_polygon_in_ring(n, half))
    poly, dirs = attach_translates(base)
    if len(poly) != m:
        raise RuntimeError(f"attachment produced {len(poly)} edges, expected {m}")
    return poly, dirs


@lru_cache(maxsize=None)
def pisot_scaler(n: int, max_coeff: int = 9) -> CycInt:
    """A real ring element > 1 whose star-map conjugates all contract.

    Search over integer combinations of powers of zeta + conj(zeta) in a
    fixed order (growing coefficient bound, lexicographic within a bound),
    returning the first hit, so results are reproducible constants.
    """
    if n != canonicalize(n) or n < 3:
        raise ValueError(f"index must be canonical and >= 3, got {n}")
    if n in (3, 4):
        raise ValueError("lattice cases need no scaler")
    degree = phi(n) // 2
    beta = CycInt.zeta(n) + CycInt.zeta(n).conj()
    powers = [beta**i for i in range(degree)]
    reps = [a for a in range(2, (n + 1) // 2) if math.gcd(a, n) == 1]
    rows = [[p.embed().real for p in powers]]
    for a in reps:
        rows.append([galois_apply(a, p).embed().real for p in powers])

    for bound in range(1, max_coeff + 1):
        for coeffs in itertools.product(range(-bound, bound + 1), repeat=degree):
            if max(abs(c) for c in coeffs) != bound:
                continue
            value = sum(c * r for c, r in zip(coeffs, rows[0]))
            if not value > 1.0:
                continue
            if all(
                abs(sum(c * r for c, r in zip(coeffs, row))) < 1.0
                for row in rows[1:]
            ):
                scaler = CycInt.zero(n)
                for c, p in zip(coeffs, powers):
                    scaler = scaler + c * p
                assert scaler.is_real()
                return scaler
    raise BudgetExceeded(
        f"no contracting scaler for n={n} with coefficients up to {max_coeff}"
    )


def embed_in_model_set(
    points,
    spec: ModelSetSpec,
    k_max: int = 25,
    patch_radius: float = 12.0,
    margin: float = 1e-6,
    budget: int = 10**8,
) -> tuple[Homothety, list[CycInt]]:
    """Find z -> scale^k * z + t mapping the points into the model set.

    Powers of the contracting scaler shrink the star image of the
    configuration geometrically; the translate t is then searched among
    generated patch points ordered by internal distance to the window
    center, so the first feasible translate is the most robust one. Every
    accepted image is confirmed by the exact membership test with the
    requested interior margin.
    """
    points = list(points)
    if not points:
        raise ValueError("nothing to embed")
    if any(z.n != spec.n for z in points):
        raise ValueError("points and spec live in different rings")
    if spec.internal_dim == 0:
        return Homothety.identity(spec.n), points

    scaler = pisot_scaler(spec.n)
    patch = generate(spec, patch_radius, budget=budget)
    if not patch.points:
        raise SearchFailed(f"no candidate translates in a patch of radius {patch_radius}")

    def offset(t: CycInt) -> tuple[float, ...]:
        return tuple(v - s for v, s in zip(star_map(spec, t), spec.shift))

    candidates = []
    for t in patch.points:
        off = offset(t)
        dist = math.hypot(*off)
        candidates.append((dist, t.coeffs, off, t))
    candidates.sort(key=lambda item: (item[0], item[1]))

    for k in range(k_max + 1):
        factor = scaler**k
        scaled = [factor * z for z in points]
        cluster = [star_map(spec, z) for z in scaled]
        for _, _, off, t in candidates:
            # Additivity of the star map holds to ~1e-12, far inside the
            # margin, so the cheap shifted-cluster test never rejects a
            # translate that the exact confirmation would accept.
            ok = all(
                spec.window.contains(
                    tuple(c + o for c, o in zip(vec, off)), margin=margin / 2
                )
                for vec in cluster
            )
            if not ok:
                continue
            if all(contains(spec, z + t, margin=margin) for z in scaled):
                homothety = Homothety(scale=factor, k=k, shift=t)
                return homothety, [homothety.apply(z) for z in points]
    raise SearchFailed(
        f"no admissible translate for contraction powers up to {k_max} "
        f"in a patch of radius {patch_radius}"
    )


def construct_u_polygon_in_model_set(
    spec: ModelSetSpec,
    m: int,
    k_max: int = 25,
    patch_radius: float = 12.0,
    budget: int = 10**8,
) -> tuple[Polygon, DirectionSet, Homothety]:
    """A verified U-polygon with m edges inside the given model set.

    Composes the ring-level construction with the homothety embedding;
    homotheties with real positive scale preserve directions exactly, so
    the ring-level direction set verifies the embedded polygon too.
    """
    ring_poly, dirs = construct_u_polygon_ring(spec.n, m)
    homothety, embedded = embed_in_model_set(
        ring_poly.vertices, spec, k_max=k_max, patch_radius=patch_radius, budget=budget
    )
    poly = Polygon(embedded)
    if len(poly) != m:
        raise RuntimeError(f"embedded polygon has {len(poly)} edges, expected {m}")
    if not is_u_polygon(poly, dirs):
        raise RuntimeError("embedded polygon failed the U-polygon check")
    cls = u_class(poly, dirs)
    if cls != m // 2:
        raise RuntimeError(f"embedded class {cls} != m/2 = {m // 2}")
    if not all(contains(spec, v) for v in poly.vertices):
        raise RuntimeError("embedded vertex fell outside the model set")
    return poly, dirs, homothety
