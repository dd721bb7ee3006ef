"""Cut-and-project generation of cyclotomic model sets.

A model set here is {z in Z[zeta_n] : star(z) in W + shift} for a window W
in internal space R^(phi(n)-2), where star concatenates the numeric
embeddings of one Galois automorphism per complex-conjugate pair (identity
and conjugation excluded). For n in {3, 4} internal space is empty and the
set is the full triangular / square lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cyclo import CycInt, galois_apply, phi
from .errors import BudgetExceeded
from .fields import canonicalize


@dataclass(frozen=True)
class BallWindow:
    """Centered open euclidean ball in internal space."""

    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("window radius must be positive")

    def contains(self, vec, margin: float = 0.0) -> bool:
        r = self.radius - margin
        if r <= 0:
            return False
        return math.fsum(v * v for v in vec) < r * r

    def halfwidths(self, dim: int) -> tuple[float, ...]:
        return (self.radius,) * dim

    def to_dict(self) -> dict:
        return {"kind": "ball", "radius": self.radius}


@dataclass(frozen=True)
class BoxWindow:
    """Centered open axis-aligned box in internal space."""

    half_widths: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "half_widths", tuple(float(w) for w in self.half_widths))
        if not all(w > 0 for w in self.half_widths):
            raise ValueError("window half-widths must be positive")

    def contains(self, vec, margin: float = 0.0) -> bool:
        if len(vec) != len(self.half_widths):
            raise ValueError("internal dimension mismatch")
        return all(abs(v) < w - margin for v, w in zip(vec, self.half_widths))

    def halfwidths(self, dim: int) -> tuple[float, ...]:
        if dim != len(self.half_widths):
            raise ValueError("internal dimension mismatch")
        return self.half_widths

    def to_dict(self) -> dict:
        return {"kind": "box", "half_widths": list(self.half_widths)}


def window_from_dict(data: dict) -> BallWindow | BoxWindow:
    if data["kind"] == "ball":
        return BallWindow(float(data["radius"]))
    if data["kind"] == "box":
        return BoxWindow(tuple(data["half_widths"]))
    raise ValueError(f"unknown window kind {data['kind']!r}")


def default_automorphism_reps(n: int) -> list[int]:
    """One residue per conjugate pair of non-trivial automorphisms, ascending.

    Takes the smaller member a of each pair {a, n-a} with gcd(a, n) = 1,
    skipping the identity/conjugation pair {1, n-1}.
    """
    if n < 3 or n % 4 == 2:
        raise ValueError(f"index must be >= 3 and not 2 mod 4, got {n}")
    return [a for a in range(2, (n + 1) // 2) if math.gcd(a, n) == 1]


# Small fixed offsets keep lattice directions off the window boundary; the
# values just need to look like nothing the arithmetic will ever produce.
_SHIFT_POOL = (0.01, 0.013, 0.017, 0.019, 0.023, 0.029, 0.031, 0.037,
               0.041, 0.043, 0.047, 0.053, 0.059, 0.061, 0.067, 0.071)


def default_shift(dim: int) -> tuple[float, ...]:
    if dim > len(_SHIFT_POOL):
        raise ValueError(f"no default shift for internal dimension {dim}")
    return _SHIFT_POOL[:dim]


@dataclass(frozen=True)
class ModelSetSpec:
    """One concrete cyclotomic model set: index, star map choice, window, offsets."""

    n: int
    reps: tuple[int, ...]
    window: BallWindow | BoxWindow
    shift: tuple[float, ...]
    translate: CycInt

    def __post_init__(self):
        if self.n != canonicalize(self.n) or self.n < 3:
            raise ValueError(f"index must be canonical (not 2 mod 4) and >= 3, got {self.n}")
        expected = tuple(default_automorphism_reps(self.n))
        if tuple(sorted(self.reps)) != expected:
            raise ValueError(
                f"automorphism representatives {self.reps} do not pick the smaller "
                f"member of each conjugate pair; expected {expected}"
            )
        object.__setattr__(self, "reps", tuple(self.reps))
        object.__setattr__(self, "shift", tuple(float(s) for s in self.shift))
        if len(self.shift) != self.internal_dim:
            raise ValueError(
                f"shift has dimension {len(self.shift)}, internal space has {self.internal_dim}"
            )
        if isinstance(self.window, BoxWindow) and len(self.window.half_widths) != self.internal_dim:
            raise ValueError("box window dimension does not match internal space")
        if self.translate.n != self.n:
            raise ValueError("translate lives in a different ring")

    @property
    def internal_dim(self) -> int:
        return phi(self.n) - 2

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "reps": list(self.reps),
            "window": self.window.to_dict(),
            "shift": list(self.shift),
            "translate": self.translate.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ModelSetSpec:
        return cls(
            n=int(data["n"]),
            reps=tuple(int(a) for a in data["reps"]),
            window=window_from_dict(data["window"]),
            shift=tuple(float(s) for s in data["shift"]),
            translate=CycInt.from_dict(data["translate"]),
        )


def make_spec(n: int, window: BallWindow | BoxWindow | None = None,
              shift: tuple[float, ...] | None = None,
              translate: CycInt | None = None) -> ModelSetSpec:
    """Build a spec with canonicalized index and sensible defaults."""
    n = canonicalize(n)
    dim = phi(n) - 2
    if window is None:
        window = BallWindow(1.0)
    if shift is None:
        shift = default_shift(dim)
    if translate is None:
        translate = CycInt.zero(n)
    return ModelSetSpec(n=n, reps=tuple(default_automorphism_reps(n)),
                        window=window, shift=shift, translate=translate)


# Generic ball windows stand in for the published vertex-set windows of the
# named tilings, hence the "-like" labels on everything these produce.
PRESETS: dict[str, dict] = {
    "ttt5": {"n": 5, "window": BallWindow(1.2)},
    "ab8": {"n": 8, "window": BallWindow(1.3)},
    "shield12": {"n": 12, "window": BallWindow(1.4)},
}


def preset_spec(name: str) -> ModelSetSpec:
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; have {sorted(PRESETS)}")
    p = PRESETS[name]
    return make_spec(p["n"], window=p["window"])


def star_map(spec: ModelSetSpec, z: CycInt) -> tuple[float, ...]:
    """Internal-space image of z: embeddings of the chosen Galois conjugates."""
    if z.n != spec.n:
        raise ValueError(f"modulus mismatch: {z.n} != {spec.n}")
    out: list[float] = []
    for a in spec.reps:
        x, y = galois_apply(a, z).embed_xy()
        out.append(x)
        out.append(y)
    return tuple(out)


def contains(spec: ModelSetSpec, z: CycInt, margin: float = 0.0) -> bool:
    """Whether z belongs to the model set (star image in the open window)."""
    if z.n != spec.n:
        raise ValueError(f"modulus mismatch: {z.n} != {spec.n}")
    if spec.internal_dim == 0:
        return True
    vec = star_map(spec, z)
    rel = tuple(v - s for v, s in zip(vec, spec.shift))
    return spec.window.contains(rel, margin=margin)


@dataclass(frozen=True)
class PointSet:
    """A finite patch of a model set: physical representatives before translation."""

    spec: ModelSetSpec
    points: tuple[CycInt, ...]

    def embedded(self) -> np.ndarray:
        return np.array([z.embed_xy() for z in self.points], dtype=float)

    def validate(self) -> None:
        seen = set()
        for z in self.points:
            if z in seen:
                raise ValueError(f"duplicate point {z!r}")
            seen.add(z)
            if not contains(self.spec, z):
                raise ValueError(f"point {z!r} is not in the model set")


@lru_cache(maxsize=None)
def _basis_matrix(n: int, reps: tuple[int, ...]) -> np.ndarray:
    """Columns are (physical, internal) embeddings of the power basis."""
    deg = phi(n)
    cols = []
    for j in range(deg):
        zj = CycInt.zeta(n, j)
        col = list(zj.embed_xy())
        for a in reps:
            col.extend(galois_apply(a, zj).embed_xy())
        cols.append(col)
    return np.array(cols, dtype=float).T


def generate(spec: ModelSetSpec, radius: float, budget: int = 10**8) -> PointSet:
    """All model set points with physical norm <= radius, sorted by coefficients.

    The physical disk times the window bounding box is pulled back through
    the inverse basis matrix to an integer coordinate box; candidates are
    prefiltered vectorized with a little slack and then confirmed one by one
    with the exact same predicates contains() uses.
    """
    if not radius > 0:
        raise ValueError("radius must be positive")
    n = spec.n
    deg = phi(n)
    basis = _basis_matrix(n, spec.reps)
    inv = np.linalg.inv(basis)

    lo_v = [-radius, -radius]
    hi_v = [radius, radius]
    if spec.internal_dim > 0:
        for s, w in zip(spec.shift, spec.window.halfwidths(spec.internal_dim)):
            lo_v.append(s - w)
            hi_v.append(s + w)
    lo_v = np.array(lo_v)
    hi_v = np.array(hi_v)

    pos = np.where(inv > 0, inv, 0.0)
    neg = np.where(inv < 0, inv, 0.0)
    c_lo = pos @ lo_v + neg @ hi_v
    c_hi = pos @ hi_v + neg @ lo_v
    lows = np.floor(c_lo - 1e-9).astype(int)
    highs = np.ceil(c_hi + 1e-9).astype(int)
    sizes = highs - lows + 1
    total = int(np.prod(sizes.astype(object)))
    if total > budget:
        raise BudgetExceeded(
            f"coordinate box holds {total} candidates, over the budget of {budget}"
        )

    phys_rows = basis[:2]
    int_rows = basis[2:]
    shift_arr = np.array(spec.shift)
    slack = 1e-9 * (1.0 + radius)
    r2 = (radius + slack) ** 2

    survivors: list[tuple[int, ...]] = []
    chunk = 1 << 19  # bounds peak memory for high-degree rings
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total))
        coords = np.column_stack(np.unravel_index(idx, sizes)) + lows
        xy = coords @ phys_rows.T
        mask = (xy * xy).sum(axis=1) <= r2
        coords = coords[mask]
        if spec.internal_dim > 0 and len(coords):
            internal = coords @ int_rows.T - shift_arr
            if isinstance(spec.window, BallWindow):
                wr = spec.window.radius + slack
                mask = (internal * internal).sum(axis=1) < wr * wr
            else:
                hw = np.array(spec.window.half_widths) + slack
                mask = (np.abs(internal) < hw).all(axis=1)
            coords = coords[mask]
        survivors.extend(tuple(int(c) for c in row) for row in coords)

    points = []
    for coeffs in survivors:
        z = CycInt(n, coeffs)
        x, y = z.embed_xy()
        if x * x + y * y <= radius * radius and contains(spec, z):
            points.append(z)
    points.sort(key=lambda z: z.coeffs)
    return PointSet(spec=spec, points=tuple(points))


def delone_diagnostics(ps: PointSet, radius: float,
                       grid_step: float = 0.2) -> tuple[float, float]:
    """(min pairwise distance, largest empty-circle radius estimate).

    Both are measured on the region within 0.8 * radius of the origin so
    that truncation at the patch boundary does not fake holes; the hole
    estimate still measures distances against the full patch.
    """
    if not ps.points:
        raise ValueError("empty point set")
    from scipy.spatial import cKDTree

    xy = ps.embedded()
    interior_limit = 0.8 * radius
    norms = np.hypot(xy[:, 0], xy[:, 1])
    interior = xy[norms <= interior_limit]
    if len(interior) < 2:
        raise ValueError("fewer than 2 interior points; enlarge the patch")

    tree_interior = cKDTree(interior)
    dists, _ = tree_interior.query(interior, k=2)
    min_pair = float(dists[:, 1].min())

    ticks = np.arange(-interior_limit, interior_limit + grid_step / 2, grid_step)
    gx, gy = np.meshgrid(ticks, ticks)
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    grid = grid[np.hypot(grid[:, 0], grid[:, 1]) <= interior_limit]
    tree_all = cKDTree(xy)
    hole_dists, _ = tree_all.query(grid, k=1)
    max_hole = float(hole_dists.max())
    return min_pair, max_hole
