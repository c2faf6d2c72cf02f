"""John and Löwner ellipsoids, isotropic position and the Santaló point."""

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.optimize import minimize, root

from . import geometry, planar, sampling
from .constants import BURN_IN, DEFAULT_SAMPLES, DEFAULT_SEED, KHACHIYAN_MAX_ITER, KHACHIYAN_TOL
from .curvature import polar_volume
from .errors import (
    DegenerateBody,
    NotConverged,
    OriginNotInterior,
    SingularCovariance,
    UnsupportedBody,
)
from .geometry import AffineMap, Ball, ConvexBody, Ellipsoid, HPolytope, SupportBody2D, VPolytope


@dataclass(frozen=True)
class EllipsoidFit:
    """A John (inscribed) or Löwner (circumscribed) ellipsoid with its containment certificate."""

    ellipsoid: Ellipsoid
    kind: str  # "john" or "loewner"
    containment_ratio: float
    iterations: int = 0
    gap: float = 0.0

    def record(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "center": self.ellipsoid.center.tolist(),
            "shape": self.ellipsoid.shape.tolist(),
            "containment_ratio": self.containment_ratio,
            "iterations": self.iterations,
            "gap": self.gap,
            "volume": self.ellipsoid.volume(),
        }


# ----------------------------------------------------------------------------
# Löwner ellipsoid
# ----------------------------------------------------------------------------


def khachiyan(
    points: np.ndarray, tol: float = KHACHIYAN_TOL, max_iter: int = KHACHIYAN_MAX_ITER
) -> tuple[np.ndarray, np.ndarray, int, float]:
    """Minimum-volume enclosing ellipsoid by barycentric ascent with away steps.

    Returns (center, shape, iterations, gap) where every point satisfies
    (x - c)^T A (x - c) <= 1 exactly and ``gap`` bounds the relative volume excess.
    """
    k, d = points.shape
    q = np.hstack([points, np.ones((k, 1))])
    u = np.full(k, 1.0 / k)
    gap = math.inf
    it = 0
    for it in range(1, max_iter + 1):
        x = (q.T * u) @ q
        m = np.einsum("ij,jk,ik->i", q, np.linalg.inv(x), q)
        j = int(np.argmax(m))
        active = u > 0.0
        kk = int(np.flatnonzero(active)[np.argmin(m[active])])
        up = m[j] / (d + 1) - 1.0
        down = 1.0 - m[kk] / (d + 1)
        gap = max(up, down)
        if gap <= tol:
            break
        if up >= down:
            step = (m[j] - d - 1.0) / ((d + 1) * (m[j] - 1.0))
            u *= 1.0 - step
            u[j] += step
        else:
            step = min((d + 1.0 - m[kk]) / ((d + 1) * max(m[kk] - 1.0, 1e-300)), u[kk] / (1.0 - u[kk]))
            u *= 1.0 + step
            u[kk] -= step
            u[kk] = max(u[kk], 0.0)
    else:
        logging.warning("Khachiyan stopped after %d iterations with gap %.3e", max_iter, gap)
    c = points.T @ u
    cov = (points.T * u) @ points - np.outer(c, c)
    try:
        shape = np.linalg.inv(cov) / d
    except np.linalg.LinAlgError as exc:
        raise DegenerateBody("points are not full-dimensional") from exc
    y = points - c
    worst = float(np.einsum("ij,jk,ik->i", y, shape, y).max())
    logging.debug("Khachiyan: %d iterations, gap %.3e, max violation %.3e", it, gap, worst - 1.0)
    return c, shape / max(worst, 1.0), it, gap


def _vertex_set(body: ConvexBody) -> np.ndarray:
    if isinstance(body, HPolytope | VPolytope):
        if body.dim > 3 and isinstance(body, HPolytope) and not body.is_box:
            raise UnsupportedBody("vertex enumeration is limited to n <= 3")
        if isinstance(body, HPolytope) and body.is_box:
            lo, hi = body.bounding_box()
            grids = np.meshgrid(*[[a, b] for a, b in zip(lo, hi, strict=True)], indexing="ij")
            return np.stack([g.ravel() for g in grids], axis=1)
        return body.vertices
    if isinstance(body, SupportBody2D):
        return body.boundary_points
    raise UnsupportedBody(f"Löwner ellipsoid of {type(body).__name__} is not supported")


def loewner_containment(ellipsoid: Ellipsoid, body: HPolytope | VPolytope) -> float:
    """Smallest λ with L - c ⊆ λ(K - c)."""
    a, b = body.halfspaces()
    c = ellipsoid.center
    reach = np.sqrt(np.einsum("ij,jk,ik->i", a, ellipsoid.inverse_shape, a))
    return float((reach / (b - a @ c)).max())


def john_containment(ellipsoid: Ellipsoid, body: HPolytope | VPolytope) -> float:
    """Smallest λ with K - c ⊆ λ(E - c)."""
    y = body.vertices - ellipsoid.center
    return float(np.sqrt(np.einsum("ij,jk,ik->i", y, ellipsoid.shape, y)).max())


def loewner_ellipsoid(body: ConvexBody, tol: float = KHACHIYAN_TOL) -> EllipsoidFit:
    """Minimum-volume ellipsoid containing the body's vertices."""
    if isinstance(body, Ball | Ellipsoid):
        e = body.to_ellipsoid() if isinstance(body, Ball) else body
        return EllipsoidFit(e, "loewner", 1.0)
    points = _vertex_set(body)
    c, shape, it, gap = khachiyan(points, tol)
    e = Ellipsoid(c, shape, f"L({body.label})")
    ratio = loewner_containment(e, body) if isinstance(body, HPolytope | VPolytope) else math.nan
    return EllipsoidFit(e, "loewner", ratio, it, gap)


# ----------------------------------------------------------------------------
# John ellipsoid
# ----------------------------------------------------------------------------


def _john_direct(body: HPolytope) -> Ellipsoid:
    """Maximize log det L subject to |L^T a_i| + <a_i, d> <= b_i (E = L B + d)."""
    a, b = body.halfspaces()
    n = body.dim
    center, radius = geometry.chebyshev_center(a, b)
    rows, cols = np.tril_indices(n)
    diag = rows == cols

    def unpack(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        low = np.zeros((n, n))
        low[rows, cols] = z[n:]
        return z[:n], low

    def objective(z: np.ndarray) -> float:
        return -float(np.log(z[n:][diag]).sum())

    def slack(z: np.ndarray) -> np.ndarray:
        d, low = unpack(z)
        return b - a @ d - np.linalg.norm(a @ low, axis=1)

    z0 = np.r_[center, np.where(diag, 0.9 * radius, 0.0)]
    bounds = [(None, None)] * n + [(1e-12, None) if is_diag else (None, None) for is_diag in diag]
    res = minimize(
        objective,
        z0,
        method="SLSQP",
        bounds=bounds,
        constraints=[{"type": "ineq", "fun": slack}],
        options={"ftol": 1e-12, "maxiter": 1000},
    )
    if not res.success:
        raise NotConverged(f"John ellipsoid ascent failed: {res.message}")
    d, low = unpack(res.x)
    reach = np.linalg.norm(a @ low, axis=1)
    low = low * min(1.0, float(((b - a @ d) / reach).min()))
    return Ellipsoid(d, np.linalg.inv(low @ low.T), f"J({body.label})")


def john_ellipsoid(body: HPolytope | VPolytope, tol: float = KHACHIYAN_TOL) -> EllipsoidFit:
    """Maximum-volume inscribed ellipsoid.

    Centrally symmetric bodies use polar(Löwner(polar K)); others use constrained ascent.
    """
    if not isinstance(body, HPolytope | VPolytope):
        raise UnsupportedBody(f"John ellipsoid of {type(body).__name__} is not supported")
    if body.is_symmetric():
        dual = loewner_ellipsoid(geometry.polar(body), tol)
        e = Ellipsoid(np.zeros(body.dim), dual.ellipsoid.inverse_shape, f"J({body.label})")
        return EllipsoidFit(e, "john", john_containment(e, body), dual.iterations, dual.gap)
    h = body if isinstance(body, HPolytope) else HPolytope(*body.halfspaces(), label=body.label)
    e = _john_direct(h)
    return EllipsoidFit(e, "john", john_containment(e, body))


# ----------------------------------------------------------------------------
# Isotropic position
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class IsotropicCertificate:
    """Affine map to isotropic position with the isotropic constant."""

    map: AffineMap
    L_K: float
    covariance_residual: float
    L_K_error: float = 0.0
    exact: bool = True
    samples: int = 0
    seed: int | None = None

    def record(self) -> dict[str, Any]:
        return {
            "matrix": self.map.matrix.tolist(),
            "translation": self.map.translation.tolist(),
            "L_K": self.L_K,
            "L_K_error": self.L_K_error,
            "covariance_residual": self.covariance_residual,
            "exact": self.exact,
            "samples": self.samples,
            "seed": self.seed,
        }


def _isotropic_constant(cov: np.ndarray, vol: float) -> float:
    n = len(cov)
    sign, logdet = np.linalg.slogdet(cov)
    if sign <= 0:
        raise SingularCovariance("covariance matrix is not positive definite")
    return math.exp(logdet / (2 * n)) / vol ** (1.0 / n)


def _inverse_sqrt(cov: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(cov)
    if w.min() <= 1e-14 * w.max():
        raise SingularCovariance(f"covariance is singular (eigenvalues {w})")
    return (v / np.sqrt(w)) @ v.T


def isotropic_position(
    body: ConvexBody,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    exact: bool | None = None,
    burn_in: int = BURN_IN,
    chains: int = 8,
) -> IsotropicCertificate:
    """Map T x - T g taking the body to volume 1, centroid 0 and covariance L_K^2 Id.

    Exact moments are used where available unless ``exact=False``; otherwise the
    covariance comes from hit-and-run samples and L_K carries a batch-means error.
    """
    n = body.dim
    vol = geometry.volume(body)
    cov = geometry.second_moment(body) if exact is not False else None
    if cov is not None:
        g = geometry.centroid(body)
        lk = _isotropic_constant(cov, vol)
        t = lk * _inverse_sqrt(cov)
        image = t @ cov @ t.T / lk**2
        residual = float(np.abs(image - np.eye(n)).max())
        return IsotropicCertificate(AffineMap(t, -t @ g), lk, residual)
    if exact is True:
        raise UnsupportedBody(f"no exact second moments for {type(body).__name__} in R^{n}")
    pts = sampling.hit_and_run(body, samples, burn_in, seed, chains)
    g = pts.mean(axis=0)
    cov = np.cov(pts, rowvar=False)
    lk, lk_err = sampling.batch_statistic(pts, lambda s: _isotropic_constant(np.cov(s, rowvar=False), vol))
    t = lk * _inverse_sqrt(cov)
    half = len(pts) // 2
    split = np.cov(pts[:half], rowvar=False) - np.cov(pts[half:], rowvar=False)
    residual = float(np.abs(t @ split @ t.T).max() / lk**2)
    logging.debug("isotropic position by sampling: L_K=%.6f +- %.2e, residual %.3e", lk, lk_err, residual)
    return IsotropicCertificate(AffineMap(t, -t @ g), lk, residual, lk_err, False, samples, seed)


# ----------------------------------------------------------------------------
# Santaló point and volume product
# ----------------------------------------------------------------------------


def _angular_halfspaces(body: HPolytope | VPolytope) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    a, b = body.halfspaces()
    phi = np.arctan2(a[:, 1], a[:, 0])
    order = np.argsort(phi)
    return a[order], b[order], phi[order]


def _polygon_polar(a: np.ndarray, b: np.ndarray, s: np.ndarray) -> np.ndarray | None:
    beta = b - a @ s
    if beta.min() <= 0.0:
        return None
    return a / beta[:, None]


def _smooth_polar(body: SupportBody2D, s: np.ndarray) -> tuple[float, np.ndarray] | None:
    """Area and first moment of (K - s)° from ρ = 1/(h - <s, u>)."""
    gap = body.h - body.directions @ s
    if gap.min() <= 0.0:
        return None
    rho = 1.0 / gap
    area = math.pi * float(np.mean(rho**2))
    moment = 2.0 * math.pi * (body.directions * (rho**3)[:, None]).mean(axis=0) / 3.0
    return area, moment


def polar_area_about(body: ConvexBody, s: np.ndarray) -> float:
    """|(K - s)°|, +inf when s is not interior."""
    if isinstance(body, HPolytope | VPolytope):
        a, b, _ = _angular_halfspaces(body)
        pts = _polygon_polar(a, b, s)
        return math.inf if pts is None else planar.polygon_area(pts)
    out = _smooth_polar(_planar_smooth(body), s)
    return math.inf if out is None else out[0]


def polar_centroid_about(body: ConvexBody, s: np.ndarray) -> np.ndarray:
    if isinstance(body, HPolytope | VPolytope):
        a, b, _ = _angular_halfspaces(body)
        pts = _polygon_polar(a, b, s)
        if pts is None:
            raise OriginNotInterior(f"{s} is not interior to the body")
        return planar.polygon_centroid(pts)
    out = _smooth_polar(_planar_smooth(body), s)
    if out is None:
        raise OriginNotInterior(f"{s} is not interior to the body")
    return out[1] / out[0]


def _planar_smooth(body: ConvexBody) -> SupportBody2D:
    if isinstance(body, SupportBody2D):
        return body
    return geometry.to_support_body(body)


def santalo_point(body: ConvexBody, tol: float = 1e-6) -> np.ndarray:
    """Point s minimizing |(K - s)°|, where (K - s)° has its barycenter at the origin."""
    if body.dim != 2:
        raise UnsupportedBody("the Santaló point is computed in the plane only")
    if isinstance(body, Ball | Ellipsoid):
        return body.center.copy()
    scale = geometry.circumradius(body)
    start = geometry.centroid(body)
    res = minimize(
        lambda s: polar_area_about(body, s),
        start,
        method="Nelder-Mead",
        options={"xatol": 1e-3 * tol * scale, "fatol": 1e-14, "maxiter": 4000},
    )
    polished = root(lambda s: polar_centroid_about(body, s) * scale, res.x, method="hybr")
    s = polished.x if polished.success and np.isfinite(polar_area_about(body, polished.x)) else res.x
    residual = float(np.linalg.norm(polar_centroid_about(body, s))) * scale
    logging.debug("Santaló point %s after %d simplex steps, barycenter residual %.3e", s, res.nit, residual)
    if residual > tol:
        raise NotConverged(f"polar barycenter {residual:.3e} exceeds tolerance {tol:.1e}")
    return np.asarray(s)


def volume_product(body: ConvexBody) -> float:
    """|K|·|K°| about the origin."""
    if isinstance(body, SupportBody2D):
        return body.volume() * polar_volume(body)
    return geometry.volume(body) * geometry.volume(geometry.polar(body))
