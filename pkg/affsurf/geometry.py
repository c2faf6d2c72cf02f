"""Convex-body representations and exact primitive geometry.

Bodies are immutable dataclasses. Every representation answers support and radial
queries for a single direction ``(n,)`` or a batch ``(k, n)``, and knows its volume,
centroid and affine images. Factories re-center bodies at their centroid unless the
caller passes ``recenter=False``.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, Delaunay, HalfspaceIntersection, QhullError
from scipy.special import gamma

from . import planar
from .constants import DEFAULT_GRID, DEFAULT_SEED, POLYGONIZE_POINTS
from .errors import (
    DegenerateBody,
    InvalidBody,
    NonConvex,
    OriginNotInterior,
    SingularMap,
    UnsupportedBody,
)

MC_VOLUME_SAMPLES = 200_000


def unit_ball_volume(n: int) -> float:
    """|B_2^n|."""
    return float(math.pi ** (n / 2.0) / gamma(n / 2.0 + 1.0))


def _dirs(u: np.ndarray) -> tuple[np.ndarray, bool]:
    arr = np.asarray(u, dtype=float)
    return np.atleast_2d(arr), arr.ndim == 1


def _out(values: np.ndarray, single: bool) -> np.ndarray | float:
    return float(values[0]) if single else values


def sphere_directions(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform directions on S^{n-1}."""
    g = rng.standard_normal((count, n))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def direction_grid(n: int, count: int | None = None) -> np.ndarray:
    """Deterministic direction set: uniform angles in the plane, a Fibonacci lattice otherwise."""
    if n == 2:
        k = count or 4096
        return planar.unit(2.0 * math.pi * np.arange(k) / k)
    k = count or 4000
    if n == 3:
        i = np.arange(k) + 0.5
        z = 1.0 - 2.0 * i / k
        phi = math.pi * (1.0 + 5**0.5) * i
        s = np.sqrt(1.0 - z * z)
        return np.stack([s * np.cos(phi), s * np.sin(phi), z], axis=1)
    return sphere_directions(n, k, np.random.default_rng(DEFAULT_SEED))


# ----------------------------------------------------------------------------
# Affine maps
# ----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AffineMap:
    """x -> matrix @ x + translation with an invertible linear part."""

    matrix: np.ndarray
    translation: np.ndarray

    def __post_init__(self) -> None:
        m = np.atleast_2d(np.asarray(self.matrix, dtype=float))
        t = np.asarray(self.translation, dtype=float).reshape(-1)
        if m.shape[0] != m.shape[1] or t.shape[0] != m.shape[0]:
            raise SingularMap(f"inconsistent affine map shapes {m.shape} and {t.shape}")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", t)
        scale = max(float(np.abs(m).max()), 1e-300) ** m.shape[0]
        if not np.isfinite(self.abs_det) or self.abs_det <= 1e-13 * scale:
            raise SingularMap(f"linear part is singular (|det T| = {self.abs_det:.3e})")

    @cached_property
    def abs_det(self) -> float:
        return float(abs(np.linalg.det(self.matrix)))

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(np.eye(n), np.zeros(n))

    @classmethod
    def linear(cls, matrix: np.ndarray) -> "AffineMap":
        m = np.asarray(matrix, dtype=float)
        return cls(m, np.zeros(m.shape[0]))

    @classmethod
    def scaling(cls, factor: float, n: int) -> "AffineMap":
        return cls(factor * np.eye(n), np.zeros(n))

    @classmethod
    def translation_by(cls, shift: np.ndarray) -> "AffineMap":
        s = np.asarray(shift, dtype=float)
        return cls(np.eye(len(s)), s)

    @cached_property
    def inverse_matrix(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)

    def inverse(self) -> "AffineMap":
        inv = self.inverse_matrix
        return AffineMap(inv, -inv @ self.translation)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self ∘ other."""
        return AffineMap(self.matrix @ other.matrix, self.matrix @ other.translation + self.translation)

    def __call__(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        return pts @ self.matrix.T + self.translation

    def is_similarity(self, tol: float = 1e-12) -> bool:
        gram = self.matrix @ self.matrix.T
        s2 = gram[0, 0]
        return bool(np.allclose(gram, s2 * np.eye(self.dim), atol=tol * max(s2, 1.0)))


# ----------------------------------------------------------------------------
# Shared polytope machinery
# ----------------------------------------------------------------------------


def _simplex_moments(points: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    """Exact volume, first and second moments of conv(points) by Delaunay triangulation."""
    n = points.shape[1]
    tri = Delaunay(points)
    simplices = points[tri.simplices]  # (s, n+1, n)
    edges = simplices[:, 1:, :] - simplices[:, :1, :]
    vols = np.abs(np.linalg.det(edges)) / math.factorial(n)
    sums = simplices.sum(axis=1)
    first = (vols[:, None] * sums).sum(axis=0) / (n + 1)
    outer = np.einsum("sij,sik->sjk", simplices, simplices) + np.einsum("sj,sk->sjk", sums, sums)
    second = (vols[:, None, None] * outer).sum(axis=0) / ((n + 1) * (n + 2))
    return float(vols.sum()), first, second


def _halfspace_radial(normals: np.ndarray, offsets: np.ndarray, dirs: np.ndarray) -> np.ndarray:
    if offsets.min() <= 0.0:
        raise OriginNotInterior("origin is not interior to the polytope")
    proj = dirs @ normals.T
    with np.errstate(divide="ignore"):
        ratios = np.where(proj > 0.0, offsets / np.where(proj > 0.0, proj, 1.0), np.inf)
    return ratios.min(axis=1)


def _halfspace_chord(
    normals: np.ndarray, offsets: np.ndarray, x: np.ndarray, d: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    slack = offsets[None, :] - x @ normals.T
    rate = d @ normals.T
    with np.errstate(divide="ignore", invalid="ignore"):
        t = slack / rate
    t_hi = np.where(rate > 0.0, t, np.inf).min(axis=1)
    t_lo = np.where(rate < 0.0, t, -np.inf).max(axis=1)
    return t_lo, t_hi


def chebyshev_center(normals: np.ndarray, offsets: np.ndarray) -> tuple[np.ndarray, float]:
    """Center and radius of the largest inscribed ball (LP)."""
    n = normals.shape[1]
    res = linprog(
        np.r_[np.zeros(n), -1.0],
        A_ub=np.hstack([normals, np.linalg.norm(normals, axis=1, keepdims=True)]),
        b_ub=offsets,
        bounds=[(None, None)] * n + [(0.0, None)],
    )
    if not res.success:
        raise DegenerateBody(f"unable to find an interior point: {res.message}")
    return res.x[:-1], float(res.x[-1])


def _unique_rows(points: np.ndarray, decimals: int = 12) -> np.ndarray:
    _, idx = np.unique(np.round(points, decimals), axis=0, return_index=True)
    return points[np.sort(idx)]


def _monte_carlo(
    contains: Callable[[np.ndarray], np.ndarray],
    lower: np.ndarray,
    upper: np.ndarray,
    samples: int,
    seed: int,
) -> tuple[float, float, np.ndarray]:
    """Rejection estimate of (volume, standard error, centroid) inside a bounding box."""
    rng = np.random.default_rng(seed)
    box = float(np.prod(upper - lower))
    pts = lower + (upper - lower) * rng.random((samples, len(lower)))
    hit = contains(pts)
    frac = float(hit.mean())
    if frac == 0.0:
        raise DegenerateBody("Monte Carlo volume estimate found no interior samples")
    stderr = box * math.sqrt(frac * (1.0 - frac) / samples)
    return box * frac, stderr, pts[hit].mean(axis=0)


class _Polytope:
    """Mixin for bodies with an exact half-space description."""

    label: str

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def halfspaces(self) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    @property
    def vertices(self) -> np.ndarray:
        raise NotImplementedError

    def support(self, u: np.ndarray) -> np.ndarray | float:
        dirs, single = _dirs(u)
        return _out((dirs @ self.vertices.T).max(axis=1), single)

    def radial(self, u: np.ndarray) -> np.ndarray | float:
        dirs, single = _dirs(u)
        a, b = self.halfspaces()
        return _out(_halfspace_radial(a, b, dirs), single)

    def contains(self, x: np.ndarray, tol: float = 1e-12) -> np.ndarray | bool:
        pts, single = _dirs(x)
        a, b = self.halfspaces()
        inside = (pts @ a.T <= b + tol * max(1.0, float(np.abs(b).max()))).all(axis=1)
        return bool(inside[0]) if single else inside

    def chord(self, x: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        a, b = self.halfspaces()
        return _halfspace_chord(a, b, np.atleast_2d(x), np.atleast_2d(d))

    def _exact_moments(self) -> tuple[float, np.ndarray, np.ndarray] | None:
        if self.dim <= 3:
            return _simplex_moments(self.vertices)
        return None

    def volume(self) -> float:
        return volume_with_error(self)[0]  # type: ignore[arg-type]

    def centroid(self) -> np.ndarray:
        moments = self._exact_moments()
        if moments is not None:
            vol, first, _ = moments
            return first / vol
        return _polytope_monte_carlo(self)[2]

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        return self.vertices.min(axis=0), self.vertices.max(axis=0)


def _polytope_monte_carlo(
    body: _Polytope, samples: int = MC_VOLUME_SAMPLES, seed: int = DEFAULT_SEED
) -> tuple[float, float, np.ndarray]:
    lo, hi = body.bounding_box()
    return _monte_carlo(lambda pts: np.asarray(body.contains(pts)), lo, hi, samples, seed)


# ----------------------------------------------------------------------------
# Balls and ellipsoids
# ----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Ball:
    """Euclidean ball {x : |x - center| <= radius}."""

    center: np.ndarray
    radius: float
    label: str = ""

    def __post_init__(self) -> None:
        c = np.asarray(self.center, dtype=float).reshape(-1)
        if len(c) < 2 or not self.radius > 0:
            raise InvalidBody(f"ball needs n >= 2 and positive radius, got n={len(c)} r={self.radius}")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", float(self.radius))

    @classmethod
    def centered(cls, radius: float, n: int = 2, label: str = "") -> "Ball":
        return cls(np.zeros(n), radius, label)

    @property
    def dim(self) -> int:
        return len(self.center)

    def to_ellipsoid(self) -> "Ellipsoid":
        return Ellipsoid(self.center, np.eye(self.dim) / self.radius**2, self.label)

    def support(self, u: np.ndarray) -> np.ndarray | float:
        dirs, single = _dirs(u)
        return _out(dirs @ self.center + self.radius * np.linalg.norm(dirs, axis=1), single)

    def radial(self, u: np.ndarray) -> np.ndarray | float:
        return self.to_ellipsoid().radial(u)

    def contains(self, x: np.ndarray, tol: float = 1e-12) -> np.ndarray | bool:
        pts, single = _dirs(x)
        inside = np.linalg.norm(pts - self.center, axis=1) <= self.radius * (1.0 + tol)
        return bool(inside[0]) if single else inside

    def chord(self, x: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return self.to_ellipsoid().chord(x, d)

    def volume(self) -> float:
        return unit_ball_volume(self.dim) * self.radius**self.dim

    def centroid(self) -> np.ndarray:
        return self.center.copy()

    def covariance(self) -> np.ndarray:
        return self.radius**2 / (self.dim + 2) * np.eye(self.dim)

    def polar(self) -> "Ball | Ellipsoid":
        if np.allclose(self.center, 0.0, atol=1e-15):
            return Ball(np.zeros(self.dim), 1.0 / self.radius, self.label)
        return self.to_ellipsoid().polar()

    def affine_image(self, amap: AffineMap) -> "Ball | Ellipsoid":
        if amap.is_similarity():
            s = math.sqrt(float((amap.matrix @ amap.matrix.T)[0, 0]))
            return Ball(amap(self.center), s * self.radius, self.label)
        return self.to_ellipsoid().affine_image(amap)


@dataclass(frozen=True, eq=False)
class Ellipsoid:
    """{x : (x - c)^T A (x - c) <= 1} with A symmetric positive definite."""

    center: np.ndarray
    shape: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        c = np.asarray(self.center, dtype=float).reshape(-1)
        a = np.atleast_2d(np.asarray(self.shape, dtype=float))
        if a.shape != (len(c), len(c)) or len(c) < 2:
            raise InvalidBody(f"ellipsoid shape {a.shape} does not match center of length {len(c)}")
        if not np.allclose(a, a.T, rtol=1e-10, atol=1e-12 * float(np.abs(a).max())):
            raise InvalidBody("ellipsoid shape matrix must be symmetric")
        a = 0.5 * (a + a.T)
        if np.linalg.eigvalsh(a).min() <= 0.0:
            raise InvalidBody("ellipsoid shape matrix must be positive definite")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "shape", a)

    @classmethod
    def axis_aligned(
        cls, semi_axes: list[float] | np.ndarray, center: np.ndarray | None = None, label: str = ""
    ) -> "Ellipsoid":
        ax = np.asarray(semi_axes, dtype=float)
        c = np.zeros(len(ax)) if center is None else np.asarray(center, dtype=float)
        return cls(c, np.diag(1.0 / ax**2), label)

    @property
    def dim(self) -> int:
        return len(self.center)

    @cached_property
    def inverse_shape(self) -> np.ndarray:
        return np.linalg.inv(self.shape)

    @cached_property
    def linear_part(self) -> np.ndarray:
        """Symmetric T with E = c + T·B_2^n."""
        w, v = np.linalg.eigh(self.shape)
        return (v / np.sqrt(w)) @ v.T

    def semi_axes(self) -> np.ndarray:
        return 1.0 / np.sqrt(np.linalg.eigvalsh(self.shape))

    def support(self, u: np.ndarray) -> np.ndarray | float:
        dirs, single = _dirs(u)
        quad_form = np.einsum("ij,jk,ik->i", dirs, self.inverse_shape, dirs)
        return _out(dirs @ self.center + np.sqrt(quad_form), single)

    def radial(self, u: np.ndarray) -> np.ndarray | float:
        dirs, single = _dirs(u)
        c, a = self.center, self.shape
        if c @ a @ c >= 1.0:
            raise OriginNotInterior("origin is not interior to the ellipsoid")
        uau = np.einsum("ij,jk,ik->i", dirs, a, dirs)
        uac = dirs @ (a @ c)
        t = (uac + np.sqrt(uac**2 - uau * (c @ a @ c - 1.0))) / uau
        return _out(t, single)

    def contains(self, x: np.ndarray, tol: float = 1e-12) -> np.ndarray | bool:
        pts, single = _dirs(x)
        y = pts - self.center
        inside = np.einsum("ij,jk,ik->i", y, self.shape, y) <= 1.0 + tol
        return bool(inside[0]) if single else inside

    def chord(self, x: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        y = np.atleast_2d(x) - self.center
        dd = np.atleast_2d(d)
        qa = np.einsum("ij,jk,ik->i", dd, self.shape, dd)
        qb = 2.0 * np.einsum("ij,jk,ik->i", dd, self.shape, y)
        qc = np.einsum("ij,jk,ik->i", y, self.shape, y) - 1.0
        root = np.sqrt(np.maximum(qb * qb - 4.0 * qa * qc, 0.0))
        return (-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)

    def volume(self) -> float:
        return unit_ball_volume(self.dim) / math.sqrt(float(np.linalg.det(self.shape)))

    def centroid(self) -> np.ndarray:
        return self.center.copy()

    def covariance(self) -> np.ndarray:
        return self.inverse_shape / (self.dim + 2)

    def polar(self) -> "Ellipsoid":
        c = self.center
        if np.allclose(c, 0.0, atol=1e-15):
            return Ellipsoid(np.zeros(self.dim), self.inverse_shape, self.label)
        if c @ self.shape @ c >= 1.0:
            raise OriginNotInterior("origin is not interior to the ellipsoid")
        m = self.inverse_shape - np.outer(c, c)
        mc = np.linalg.solve(m, c)
        return Ellipsoid(-mc, m / (1.0 + c @ mc), self.label)

    def affine_image(self, amap: AffineMap) -> "Ellipsoid":
        inv = amap.inverse_matrix
        return Ellipsoid(amap(self.center), inv.T @ self.shape @ inv, self.label)


# ----------------------------------------------------------------------------
# Polytopes
# ----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HPolytope(_Polytope):
    """{x : <a_i, x> <= b_i} with unit normals a_i."""

    normals: np.ndarray
    offsets: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        a = np.atleast_2d(np.asarray(self.normals, dtype=float))
        b = np.asarray(self.offsets, dtype=float).reshape(-1)
        if a.shape[0] != len(b) or a.shape[1] < 2:
            raise InvalidBody(f"normals {a.shape} and offsets {b.shape} are inconsistent")
        norms = np.linalg.norm(a, axis=1)
        if norms.min() <= 0.0:
            raise InvalidBody("zero normal vector")
        object.__setattr__(self, "normals", a / norms[:, None])
        object.__setattr__(self, "offsets", b / norms)

    # -- factories -----------------------------------------------------------

    @classmethod
    def from_inequalities(cls, a: np.ndarray, b: np.ndarray, recenter: bool = True, label: str = "") -> "HPolytope":
        body = cls(a, b, label)
        return body.recentered() if recenter else body

    @classmethod
    def box(cls, lower: np.ndarray, upper: np.ndarray, recenter: bool = True, label: str = "") -> "HPolytope":
        lo, hi = np.asarray(lower, dtype=float), np.asarray(upper, dtype=float)
        n = len(lo)
        return cls.from_inequalities(np.vstack([np.eye(n), -np.eye(n)]), np.r_[hi, -lo], recenter, label)

    @classmethod
    def cube(cls, n: int, half: float = 1.0, label: str = "") -> "HPolytope":
        return cls.box(-half * np.ones(n), half * np.ones(n), recenter=False, label=label or f"cube{n}")

    @classmethod
    def regular(cls, k: int, inradius: float = 1.0, phase: float = 0.0, label: str = "") -> "HPolytope":
        return cls(planar.regular_polygon(k, 1.0, phase), inradius * np.ones(k), label)

    @classmethod
    def from_vertices(cls, points: np.ndarray, recenter: bool = True, label: str = "") -> "HPolytope":
        a, b = VPolytope(points, label).halfspaces()
        return cls.from_inequalities(a, b, recenter, label)

    # -- structure -----------------------------------------------------------

    @property
    def dim(self) -> int:
        return int(self.normals.shape[1])

    def halfspaces(self) -> tuple[np.ndarray, np.ndarray]:
        return self.normals, self.offsets

    @cached_property
    def interior_point(self) -> np.ndarray:
        if self.offsets.min() > 0.0:
            return np.zeros(self.dim)
        center, radius = chebyshev_center(self.normals, self.offsets)
        if radius <= 1e-12:
            raise DegenerateBody("polytope has empty interior")
        return center

    @cached_property
    def vertices(self) -> np.ndarray:
        try:
            spread = ConvexHull(self.normals)
        except QhullError as exc:
            raise InvalidBody(f"normals do not span R^{self.dim}: {exc}") from exc
        if (-spread.equations[:, -1]).min() <= 1e-12:
            raise InvalidBody("polytope is unbounded (normals do not positively span)")
        hs = np.hstack([self.normals, -self.offsets[:, None]])
        try:
            pts = HalfspaceIntersection(hs, self.interior_point).intersections
        except QhullError as exc:
            raise DegenerateBody(f"vertex enumeration failed: {exc}") from exc
        pts = _unique_rows(pts, decimals=11)
        return planar.order_ccw(pts) if self.dim == 2 else pts

    @cached_property
    def is_box(self) -> bool:
        a = self.normals
        if len(a) != 2 * self.dim:
            return False
        return bool(np.allclose(np.abs(a).max(axis=1), 1.0) and np.allclose(np.sort(np.abs(a).sum(axis=0)), 2.0))

    def is_symmetric(self, tol: float = 1e-9) -> bool:
        """Central symmetry about the origin."""
        keys = np.hstack([self.normals, self.offsets[:, None]])
        mirrored = np.hstack([-self.normals, self.offsets[:, None]])
        for row in mirrored:
            if np.min(np.abs(keys - row).max(axis=1)) > tol:
                return False
        return True

    def _box_bounds(self) -> tuple[np.ndarray, np.ndarray]:
        a, b = self.normals, self.offsets
        n = self.dim
        hi, lo = np.zeros(n), np.zeros(n)
        for row, off in zip(a, b, strict=True):
            i = int(np.argmax(np.abs(row)))
            if row[i] > 0:
                hi[i] = off
            else:
                lo[i] = -off
        return lo, hi

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        if self.is_box:
            return self._box_bounds()
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    def support(self, u: np.ndarray) -> np.ndarray | float:
        if self.is_box:
            dirs, single = _dirs(u)
            lo, hi = self._box_bounds()
            return _out(np.where(dirs > 0, dirs * hi, dirs * lo).sum(axis=1), single)
        return super().support(u)

    def _exact_moments(self) -> tuple[float, np.ndarray, np.ndarray] | None:
        if self.is_box:
            lo, hi = self._box_bounds()
            vol = float(np.prod(hi - lo))
            mid = 0.5 * (lo + hi)
            second = vol * (np.outer(mid, mid) + np.diag((hi - lo) ** 2 / 12.0))
            return vol, vol * mid, second
        return super()._exact_moments()

    # -- duality and maps ----------------------------------------------------

    def polar(self) -> "VPolytope":
        if self.offsets.min() <= 0.0:
            raise OriginNotInterior("origin is not interior to the polytope")
        return VPolytope(self.normals / self.offsets[:, None], self.label)

    def affine_image(self, amap: AffineMap) -> "HPolytope":
        rows = self.normals @ amap.inverse_matrix
        return HPolytope(rows, self.offsets + rows @ amap.translation, self.label)

    def translated(self, shift: np.ndarray) -> "HPolytope":
        return HPolytope(self.normals, self.offsets + self.normals @ np.asarray(shift, dtype=float), self.label)

    def recentered(self) -> "HPolytope":
        return self.translated(-self.centroid())


@dataclass(frozen=True, eq=False)
class VPolytope(_Polytope):
    """Convex hull of finitely many points (reduced to hull vertices)."""

    points: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        if pts.shape[1] < 2 or pts.shape[0] <= pts.shape[1]:
            raise DegenerateBody(f"need more than n points in R^n, got {pts.shape}")
        try:
            hull = ConvexHull(pts)
        except QhullError as exc:
            raise DegenerateBody(f"points are not full-dimensional: {exc}") from exc
        object.__setattr__(self, "points", pts[hull.vertices])

    @classmethod
    def from_points(cls, points: np.ndarray, recenter: bool = True, label: str = "") -> "VPolytope":
        body = cls(points, label)
        return body.recentered() if recenter else body

    @classmethod
    def cross_polytope(cls, n: int, radius: float = 1.0, label: str = "") -> "VPolytope":
        return cls(radius * np.vstack([np.eye(n), -np.eye(n)]), label or f"cross{n}")

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    @property
    def vertices(self) -> np.ndarray:
        return self.points

    @cached_property
    def hull(self) -> ConvexHull:
        return ConvexHull(self.points)

    @cached_property
    def _halfspaces(self) -> tuple[np.ndarray, np.ndarray]:
        eq = _unique_rows(self.hull.equations, decimals=12)
        return eq[:, :-1], -eq[:, -1]

    def halfspaces(self) -> tuple[np.ndarray, np.ndarray]:
        return self._halfspaces

    @cached_property
    def cross_radii(self) -> np.ndarray | None:
        """Semi-axes when the body is an axis-aligned cross-polytope centred at 0."""
        n = self.dim
        pts = self.points
        if len(pts) != 2 * n or (np.count_nonzero(np.abs(pts) > 1e-14, axis=1) != 1).any():
            return None
        radii = np.abs(pts).max(axis=0)
        if (radii <= 0).any() or not np.allclose(np.sort(np.abs(pts).sum(axis=1)), np.sort(np.r_[radii, radii])):
            return None
        if not np.allclose(pts.sum(axis=0), 0.0, atol=1e-12):
            return None
        return radii

    def is_symmetric(self, tol: float = 1e-9) -> bool:
        for v in -self.points:
            if np.min(np.abs(self.points - v).max(axis=1)) > tol:
                return False
        return True

    def _exact_moments(self) -> tuple[float, np.ndarray, np.ndarray] | None:
        radii = self.cross_radii
        if radii is not None and self.dim > 3:
            n = self.dim
            vol = 2.0**n * float(np.prod(radii)) / math.factorial(n)
            second = vol * np.diag(2.0 * radii**2 / ((n + 1) * (n + 2)))
            return vol, np.zeros(n), second
        return super()._exact_moments()

    def polar(self) -> HPolytope:
        a, b = self.halfspaces()
        if b.min() <= 0.0:
            raise OriginNotInterior("origin is not interior to the polytope")
        norms = np.linalg.norm(self.points, axis=1)
        return HPolytope(self.points / norms[:, None], 1.0 / norms, self.label)

    def affine_image(self, amap: AffineMap) -> "VPolytope":
        return VPolytope(amap(self.points), self.label)

    def translated(self, shift: np.ndarray) -> "VPolytope":
        return VPolytope(self.points + np.asarray(shift, dtype=float), self.label)

    def recentered(self) -> "VPolytope":
        return self.translated(-self.centroid())


# ----------------------------------------------------------------------------
# Smooth planar bodies
# ----------------------------------------------------------------------------


def _spectral_derivatives(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    m = len(h)
    k = np.fft.fftfreq(m, d=1.0 / m)
    coeffs = np.fft.fft(h)
    k1 = k.copy()
    if m % 2 == 0:
        k1[m // 2] = 0.0
    h1 = np.fft.ifft(1j * k1 * coeffs).real
    h2 = np.fft.ifft(-(k**2) * coeffs).real
    return h1, h2


@dataclass(frozen=True, eq=False)
class SupportBody2D:
    """Planar body given by its support function h on a uniform angle grid.

    ``h1`` and ``h2`` hold the first and second derivatives, computed spectrally.
    The radius of curvature r = h + h'' must be positive at every node.
    """

    h: np.ndarray
    h1: np.ndarray
    h2: np.ndarray
    label: str = ""

    dim = 2

    def __post_init__(self) -> None:
        for name in ("h", "h1", "h2"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float).reshape(-1))
        if not len(self.h) == len(self.h1) == len(self.h2) or len(self.h) < 16:
            raise InvalidBody("support samples and derivatives must share a grid of at least 16 nodes")
        r_min = float(self.radius_of_curvature.min())
        if r_min <= 0.0:
            raise NonConvex(f"radius of curvature h + h'' is not positive (min {r_min:.3e})")

    # -- factories -----------------------------------------------------------

    @classmethod
    def from_values(cls, h: np.ndarray, recenter: bool = True, label: str = "") -> "SupportBody2D":
        values = np.asarray(h, dtype=float)
        h1, h2 = _spectral_derivatives(values)
        body = cls(values, h1, h2, label)
        return body.recentered() if recenter else body

    @classmethod
    def from_function(
        cls, func: Callable[[np.ndarray], np.ndarray], m: int = DEFAULT_GRID, recenter: bool = True, label: str = ""
    ) -> "SupportBody2D":
        theta = 2.0 * math.pi * np.arange(m) / m
        return cls.from_values(func(theta), recenter, label)

    @classmethod
    def ellipse(
        cls, a: float, b: float, m: int = DEFAULT_GRID, rotation: float = 0.0, label: str = ""
    ) -> "SupportBody2D":
        """Centered ellipse with semi-axes a (along angle ``rotation``) and b."""
        return cls.from_function(
            lambda t: np.sqrt((a * np.cos(t - rotation)) ** 2 + (b * np.sin(t - rotation)) ** 2),
            m,
            recenter=False,
            label=label,
        )

    @classmethod
    def from_smoothed(cls, h: np.ndarray, sigma: float, label: str = "") -> "SupportBody2D":
        """Support samples convolved with a wrapped Gaussian of width sigma (radians).

        Works for kinked inputs such as polygon support functions, whose own spectral
        curvature would not be positive.
        """
        values = np.asarray(h, dtype=float)
        k = np.fft.fftfreq(len(values), d=1.0 / len(values))
        smooth = np.fft.ifft(np.fft.fft(values) * np.exp(-0.5 * (k * sigma) ** 2)).real
        return cls.from_values(smooth, recenter=False, label=label)

    @classmethod
    def rounded_polygon(
        cls, vertices: np.ndarray, rho: float, m: int = DEFAULT_GRID, label: str = ""
    ) -> "SupportBody2D":
        """Polygon with its curvature measure Σ ℓ_i δ(θ - θ_i) spread by the Poisson kernel of radius rho.

        r = h + h'' is a positive sum of Poisson kernels, so the body is smooth and strictly
        convex for every 0 <= rho < 1, with its Steiner point at the origin. It is the mean of
        the rotated copies of the polygon, so a polygon centered in a disk keeps it inside
        that disk. rho -> 1 recovers the polygon; rho = 0 is the disk of equal perimeter.
        """
        if not 0.0 <= rho < 1.0:
            raise InvalidBody(f"Poisson radius must lie in [0, 1), got {rho}")
        ccw = planar.order_ccw(np.asarray(vertices, dtype=float))
        edges = np.roll(ccw, -1, axis=0) - ccw
        lengths = np.linalg.norm(edges, axis=1)
        normals = np.arctan2(-edges[:, 0], edges[:, 1])
        k = np.fft.fftfreq(m, d=1.0 / m)
        r_hat = np.exp(-1j * np.outer(k, normals)) @ lengths / (2.0 * math.pi)
        h_hat = np.zeros(m, dtype=complex)
        keep = np.abs(k) != 1
        h_hat[keep] = rho ** np.abs(k[keep]) * r_hat[keep] / (1.0 - k[keep] ** 2)
        return cls.from_values(m * np.fft.ifft(h_hat).real, recenter=False, label=label)

    @classmethod
    def disk(cls, radius: float = 1.0, m: int = DEFAULT_GRID, label: str = "") -> "SupportBody2D":
        return cls.from_values(radius * np.ones(m), recenter=False, label=label)

    # -- grid quantities -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.h)

    @cached_property
    def theta(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.m) / self.m

    @cached_property
    def directions(self) -> np.ndarray:
        return planar.unit(self.theta)

    @cached_property
    def radius_of_curvature(self) -> np.ndarray:
        return self.h + self.h2

    @cached_property
    def boundary_points(self) -> np.ndarray:
        u = self.directions
        tangent = np.stack([-u[:, 1], u[:, 0]], axis=1)
        return self.h[:, None] * u + self.h1[:, None] * tangent

    @cached_property
    def _coefficients(self) -> tuple[np.ndarray, np.ndarray]:
        m = self.m
        return np.fft.fftfreq(m, d=1.0 / m), np.fft.fft(self.h) / m

    def evaluate(self, phi: np.ndarray, derivative: int = 0, chunk: int = 1024) -> np.ndarray:
        """Trigonometric interpolation of h (or a derivative) at arbitrary angles."""
        k, c = self._coefficients
        weights = c * (1j * k) ** derivative
        if derivative % 2 == 1 and self.m % 2 == 0:
            weights = weights.copy()
            weights[self.m // 2] = 0.0
        angles = np.atleast_1d(np.asarray(phi, dtype=float))
        out = np.empty(len(angles))
        for start in range(0, len(angles), chunk):
            block = angles[start : start + chunk]
            out[start : start + chunk] = (np.exp(1j * np.outer(block, k)) @ weights).real
        return out

    # -- queries -------------------------------------------------------------

    def support(self, u: np.ndarray) -> np.ndarray | float:
        dirs, single = _dirs(u)
        scale = np.linalg.norm(dirs, axis=1)
        return _out(scale * self.evaluate(np.arctan2(dirs[:, 1], dirs[:, 0])), single)

    def radial(self, u: np.ndarray) -> np.ndarray | float:
        if self.h.min() <= 0.0:
            raise OriginNotInterior("origin is not interior to the body")
        dirs, single = _dirs(u)
        dirs = dirs / np.linalg.norm(dirs, axis=1, keepdims=True)
        pts = self.boundary_points
        psi = np.unwrap(np.arctan2(pts[:, 1], pts[:, 0]))
        alpha = np.arctan2(dirs[:, 1], dirs[:, 0])
        alpha = psi[0] + np.mod(alpha - psi[0], 2.0 * math.pi)
        psi_ext = np.r_[psi, psi[0] + 2.0 * math.pi]
        theta_ext = np.r_[self.theta, 2.0 * math.pi]
        theta = np.interp(alpha, psi_ext, theta_ext)
        for _ in range(4):
            h, h1, h2 = (self.evaluate(theta, d) for d in range(3))
            c, s = np.cos(theta), np.sin(theta)
            x = h * c - h1 * s
            y = h * s + h1 * c
            f = x * dirs[:, 1] - y * dirs[:, 0]
            r = h + h2
            df = r * (-s * dirs[:, 1] - c * dirs[:, 0])
            theta = theta - f / np.where(np.abs(df) > 1e-300, df, 1e-300)
        h, h1 = self.evaluate(theta), self.evaluate(theta, 1)
        c, s = np.cos(theta), np.sin(theta)
        rho = (h * c - h1 * s) * dirs[:, 0] + (h * s + h1 * c) * dirs[:, 1]
        return _out(rho, single)

    def halfspaces(self) -> tuple[np.ndarray, np.ndarray]:
        """Circumscribed polygon through the grid support lines."""
        return self.directions, self.h

    def contains(self, x: np.ndarray, tol: float = 1e-9) -> np.ndarray | bool:
        pts, single = _dirs(x)
        inside = (pts @ self.directions.T <= self.h + tol).all(axis=1)
        return bool(inside[0]) if single else inside

    def chord(self, x: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return _halfspace_chord(self.directions, self.h, np.atleast_2d(x), np.atleast_2d(d))

    def volume(self) -> float:
        return float(math.pi * np.mean(self.h * self.radius_of_curvature))

    def centroid(self) -> np.ndarray:
        w = self.h * self.radius_of_curvature
        first = 2.0 * math.pi * (self.boundary_points * w[:, None]).mean(axis=0) / 3.0
        return first / self.volume()

    def second_moment(self) -> np.ndarray:
        """∫_K x x^T dx."""
        x = self.boundary_points
        w = self.h * self.radius_of_curvature
        return 0.25 * 2.0 * math.pi * np.einsum("i,ij,ik->jk", w, x, x) / self.m

    def covariance(self) -> np.ndarray:
        g = self.centroid()
        return self.second_moment() / self.volume() - np.outer(g, g)

    def perimeter(self) -> float:
        return float(2.0 * math.pi * np.mean(self.h))

    # -- transformations -----------------------------------------------------

    def translated(self, shift: np.ndarray) -> "SupportBody2D":
        s = np.asarray(shift, dtype=float)
        u = self.directions
        along = u @ s
        across = np.stack([-u[:, 1], u[:, 0]], axis=1) @ s
        return SupportBody2D(self.h + along, self.h1 + across, self.h2 - along, self.label)

    def recentered(self) -> "SupportBody2D":
        body = self
        for _ in range(2):
            body = body.translated(-body.centroid())
        return body

    def scaled(self, factor: float) -> "SupportBody2D":
        return SupportBody2D(factor * self.h, factor * self.h1, factor * self.h2, self.label)

    def polar(self) -> "SupportBody2D":
        rho = np.asarray(self.radial(self.directions))
        return SupportBody2D.from_values(1.0 / rho, recenter=False, label=self.label)

    def affine_image(self, amap: AffineMap) -> "SupportBody2D":
        v = self.directions @ amap.matrix  # rows are T^T u
        values = np.asarray(self.support(v)) + self.directions @ amap.translation
        return SupportBody2D.from_values(values, recenter=False, label=self.label)

    def polygon(self, k: int = POLYGONIZE_POINTS) -> np.ndarray:
        """Inscribed polygon through k boundary points."""
        if k == self.m:
            return self.boundary_points
        theta = 2.0 * math.pi * np.arange(k) / k
        h, h1 = self.evaluate(theta), self.evaluate(theta, 1)
        c, s = np.cos(theta), np.sin(theta)
        return np.stack([h * c - h1 * s, h * s + h1 * c], axis=1)


# ----------------------------------------------------------------------------
# Intersections and hulls with centered balls
# ----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BallIntersection:
    """K ∩ R·B_2^n."""

    parent: "ConvexBody"
    radius: float
    label: str = ""

    @property
    def dim(self) -> int:
        return self.parent.dim

    def radial(self, u: np.ndarray) -> np.ndarray | float:
        rho = np.minimum(np.asarray(self.parent.radial(u)), self.radius)
        return float(rho) if rho.ndim == 0 else rho

    def contains(self, x: np.ndarray, tol: float = 1e-12) -> np.ndarray | bool:
        pts, single = _dirs(x)
        inside = np.asarray(self.parent.contains(pts, tol)) & (np.linalg.norm(pts, axis=1) <= self.radius * (1 + tol))
        return bool(inside[0]) if single else inside

    def chord(self, x: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        lo1, hi1 = self.parent.chord(x, d)
        lo2, hi2 = Ball(np.zeros(self.dim), self.radius).chord(x, d)
        return np.maximum(lo1, lo2), np.minimum(hi1, hi2)

    def boundary(self) -> planar.MixedBoundary:
        if self.dim != 2:
            raise UnsupportedBody("exact K ∩ RB boundaries exist only in the plane")
        return planar.MixedBoundary.polygon_cap_ball(polygonize(self.parent), self.radius, self.label)

    def support(self, u: np.ndarray) -> np.ndarray | float:
        return self.boundary().support(u)

    def volume(self) -> float:
        if self.dim == 2:
            return self.boundary().area()
        return self._monte_carlo()[0]

    def centroid(self) -> np.ndarray:
        if self.dim == 2:
            return self.boundary().centroid()
        return self._monte_carlo()[2]

    def _monte_carlo(self) -> tuple[float, float, np.ndarray]:
        box = self.radius * np.ones(self.dim)
        return _monte_carlo(lambda p: np.asarray(self.contains(p)), -box, box, MC_VOLUME_SAMPLES, DEFAULT_SEED)


@dataclass(frozen=True, eq=False)
class BallHull:
    """conv{K, R·B_2^n}, described by h(u) = max(h_K(u), R)."""

    parent: "ConvexBody"
    radius: float
    label: str = ""

    @property
    def dim(self) -> int:
        return self.parent.dim

    def support(self, u: np.ndarray) -> np.ndarray | float:
        dirs, single = _dirs(u)
        h = np.maximum(np.asarray(self.parent.support(dirs)), self.radius * np.linalg.norm(dirs, axis=1))
        return _out(h, single)

    def boundary(self) -> planar.MixedBoundary:
        if self.dim != 2:
            raise UnsupportedBody("exact conv{K, RB} boundaries exist only in the plane")
        vertices = polygonize(self.parent, circumscribed=True)
        return planar.MixedBoundary.polygon_hull_ball(vertices, self.radius, self.label)

    def radial(self, u: np.ndarray) -> np.ndarray | float:
        return self.boundary().radial(u)

    def contains(self, x: np.ndarray, tol: float = 1e-12) -> np.ndarray | bool:
        pts, single = _dirs(x)
        dirs = direction_grid(self.dim)
        inside = (pts @ dirs.T <= np.asarray(self.support(dirs)) + tol).all(axis=1)
        return bool(inside[0]) if single else inside

    def volume(self) -> float:
        return self.boundary().area()

    def centroid(self) -> np.ndarray:
        return self.boundary().centroid()


ConvexBody = (
    Ball | Ellipsoid | HPolytope | VPolytope | SupportBody2D | BallIntersection | BallHull | planar.MixedBoundary
)
Polytope = HPolytope | VPolytope


# ----------------------------------------------------------------------------
# Operations
# ----------------------------------------------------------------------------


def support(body: ConvexBody, u: np.ndarray) -> np.ndarray | float:
    """h_K(u) = max over K of <x, u>."""
    return body.support(u)


def radial(body: ConvexBody, u: np.ndarray) -> np.ndarray | float:
    """rho_K(u) = max{r >= 0 : r u in K}; requires the origin in the interior."""
    return body.radial(u)


def contains(body: ConvexBody, x: np.ndarray, tol: float = 1e-12) -> np.ndarray | bool:
    if isinstance(body, planar.MixedBoundary):
        pts, single = _dirs(x)
        a, b = _grid_halfspaces(body)
        inside = (pts @ a.T <= b + tol).all(axis=1)
        return bool(inside[0]) if single else inside
    return body.contains(x, tol)


def chord(body: ConvexBody, x: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Parameter interval [t_lo, t_hi] of the line x + t d inside the body (batched)."""
    if isinstance(body, planar.MixedBoundary | BallHull):
        return _halfspace_chord(*_grid_halfspaces(body), np.atleast_2d(x), np.atleast_2d(d))
    return body.chord(x, d)


def _grid_halfspaces(body: ConvexBody) -> tuple[np.ndarray, np.ndarray]:
    dirs = direction_grid(body.dim)
    return dirs, np.asarray(body.support(dirs))


def polar(body: ConvexBody) -> ConvexBody:
    """Polar body with respect to the origin."""
    if isinstance(body, BallIntersection | BallHull | planar.MixedBoundary):
        raise UnsupportedBody(f"polar of {type(body).__name__} is not supported")
    return body.polar()


def volume_with_error(
    body: ConvexBody, samples: int = MC_VOLUME_SAMPLES, seed: int = DEFAULT_SEED
) -> tuple[float, float]:
    """Volume and its standard error (0 for the exact branches)."""
    if isinstance(body, planar.MixedBoundary):
        return body.area(), 0.0
    if isinstance(body, HPolytope | VPolytope):
        if body.dim == 2:
            return planar.polygon_area(body.vertices), 0.0
        if body.dim == 3:
            return float(ConvexHull(body.vertices).volume), 0.0
        moments = body._exact_moments()
        if moments is not None:
            return moments[0], 0.0
        if isinstance(body, VPolytope):
            raise UnsupportedBody("general V-polytopes are supported only for n <= 3")
        vol, err, _ = _polytope_monte_carlo(body, samples, seed)
        logging.debug("Monte Carlo volume %.6g +- %.2g (n=%d, %d samples)", vol, err, body.dim, samples)
        return vol, err
    return body.volume(), 0.0


def volume(body: ConvexBody) -> float:
    return volume_with_error(body)[0]


def centroid(body: ConvexBody) -> np.ndarray:
    """Center of gravity g(K)."""
    return body.centroid()


def second_moment(body: ConvexBody) -> np.ndarray | None:
    """Covariance of the uniform distribution on the body when known exactly, else None."""
    if isinstance(body, Ball | Ellipsoid | SupportBody2D):
        return body.covariance()
    if isinstance(body, HPolytope | VPolytope):
        moments = body._exact_moments()
        if moments is None:
            return None
        vol, first, second = moments
        g = first / vol
        return second / vol - np.outer(g, g)
    return None


def apply_affine(amap: AffineMap, body: ConvexBody) -> ConvexBody:
    """Image T(K) + t in the same representation family."""
    if amap.dim != body.dim:
        raise SingularMap(f"map of dimension {amap.dim} applied to a body in R^{body.dim}")
    if isinstance(body, planar.MixedBoundary):
        s = float(amap.matrix[0, 0])
        if s > 0 and np.allclose(amap.matrix, s * np.eye(2)):
            return body.scaled(s).translated(amap.translation)
    if isinstance(body, BallIntersection | BallHull | planar.MixedBoundary):
        raise UnsupportedBody(f"affine images of {type(body).__name__} are not supported")
    return body.affine_image(amap)


def translate(body: ConvexBody, shift: np.ndarray) -> ConvexBody:
    return apply_affine(AffineMap.translation_by(shift), body)


def scale(body: ConvexBody, factor: float) -> ConvexBody:
    return apply_affine(AffineMap.scaling(factor, body.dim), body)


def recentered(body: ConvexBody) -> ConvexBody:
    """Translate so that the centroid is the origin."""
    if isinstance(body, Ball):
        return Ball(np.zeros(body.dim), body.radius, body.label)
    if isinstance(body, Ellipsoid):
        return Ellipsoid(np.zeros(body.dim), body.shape, body.label)
    if isinstance(body, HPolytope | VPolytope | SupportBody2D):
        return body.recentered()
    if isinstance(body, planar.MixedBoundary):
        return body.translated(-body.centroid())
    if body.dim == 2:
        return recentered(body.boundary())
    raise UnsupportedBody(f"cannot re-center {type(body).__name__} in R^{body.dim}")


def circumradius(body: ConvexBody) -> float:
    """max |x| over the body."""
    if isinstance(body, Ball):
        return float(np.linalg.norm(body.center) + body.radius)
    if isinstance(body, HPolytope | VPolytope):
        return float(np.linalg.norm(body.vertices, axis=1).max())
    if isinstance(body, Ellipsoid) and np.allclose(body.center, 0.0):
        return float(body.semi_axes().max())
    if isinstance(body, SupportBody2D):
        return float(np.linalg.norm(body.polygon(4 * body.m), axis=1).max())
    dirs = direction_grid(body.dim)
    return float(np.max(np.abs(np.asarray(body.support(dirs)))))


def inradius(body: ConvexBody) -> float:
    """Largest r with r·B_2^n ⊆ K (about the origin)."""
    if isinstance(body, HPolytope):
        return float(body.offsets.min())
    if isinstance(body, VPolytope):
        return float(body.halfspaces()[1].min())
    if isinstance(body, SupportBody2D):
        return float(body.evaluate(np.linspace(0, 2 * math.pi, 4 * body.m, endpoint=False)).min())
    dirs = direction_grid(body.dim)
    return float(np.asarray(body.support(dirs)).min())


def intersect_ball(body: ConvexBody, radius: float) -> ConvexBody:
    """K ∩ R·B_2^n with radial function min(rho_K, R)."""
    if radius <= 0:
        raise InvalidBody(f"radius must be positive, got {radius}")
    if isinstance(body, Ball) and np.allclose(body.center, 0.0):
        return Ball(np.zeros(body.dim), min(body.radius, radius), body.label)
    r_in = inradius(body)
    if r_in <= 0:
        raise OriginNotInterior("origin is not interior to the body")
    if radius <= r_in * (1.0 + 1e-12):
        return Ball(np.zeros(body.dim), radius, body.label)
    if radius >= circumradius(body):
        return body
    return BallIntersection(body, float(radius), body.label)


def convex_hull_with_ball(body: ConvexBody, radius: float) -> ConvexBody:
    """conv{K, R·B_2^n} with support function max(h_K, R)."""
    if radius <= 0:
        raise InvalidBody(f"radius must be positive, got {radius}")
    if radius >= circumradius(body) * (1.0 - 1e-12):
        return Ball(np.zeros(body.dim), radius, body.label)
    if radius <= inradius(body):
        return body
    return BallHull(body, float(radius), body.label)


def polygonize(body: ConvexBody, points: int = POLYGONIZE_POINTS, circumscribed: bool = False) -> np.ndarray:
    """Counter-clockwise vertices of a planar body (exact for polygons).

    Smooth bodies are replaced by an inscribed polygon through boundary points, or by the
    circumscribed polygon of their support lines when ``circumscribed`` is set.
    """
    if body.dim != 2:
        raise UnsupportedBody("polygonization is planar only")
    if isinstance(body, HPolytope | VPolytope):
        return body.vertices if isinstance(body, HPolytope) else planar.order_ccw(body.vertices)
    if isinstance(body, planar.MixedBoundary):
        return body.polygon()
    if isinstance(body, BallIntersection | BallHull):
        return body.boundary().polygon()
    smooth = to_support_body(body)
    if not circumscribed:
        return smooth.polygon(points)
    theta = 2.0 * math.pi * np.arange(points) / points
    box = planar.regular_polygon(4, 4.0 * circumradius(smooth) + 1.0, math.pi / 4)
    return planar.clip_halfplanes(box, planar.unit(theta), smooth.evaluate(theta))


def to_support_body(body: ConvexBody, m: int = DEFAULT_GRID) -> SupportBody2D:
    """Planar balls and ellipses as support-function bodies (no re-centering)."""
    if isinstance(body, SupportBody2D):
        return body
    if body.dim != 2 or not isinstance(body, Ball | Ellipsoid):
        raise UnsupportedBody(f"{type(body).__name__} has no smooth support-function form")
    theta = 2.0 * math.pi * np.arange(m) / m
    return SupportBody2D.from_values(np.asarray(body.support(planar.unit(theta))), recenter=False, label=body.label)


def hausdorff_distance(first: ConvexBody, second: ConvexBody, directions: int | None = None) -> float:
    """max_u |h_K(u) - h_L(u)| over a dense direction set."""
    dirs = direction_grid(first.dim, directions)
    return float(np.max(np.abs(np.asarray(first.support(dirs)) - np.asarray(second.support(dirs)))))


def is_symmetric(body: ConvexBody, tol: float = 1e-9) -> bool:
    """Central symmetry about the origin."""
    if isinstance(body, Ball | Ellipsoid):
        return bool(np.allclose(body.center, 0.0, atol=tol))
    if isinstance(body, HPolytope | VPolytope):
        return body.is_symmetric(tol)
    dirs = direction_grid(body.dim, 512)
    return bool(np.allclose(np.asarray(body.support(dirs)), np.asarray(body.support(-dirs)), atol=tol))
