"""Quermassintegrals from the Steiner formula, and the scaling degrees of extremal areas.

|K + tB| = sum_i C(n, i) W_i(K) t^i. Each W_i is homogeneous of degree n - i, so any
linear combination of quermassintegrals is a polynomial in the scale factor; the
extremal affine surface areas scale with non-integer degrees and cannot be one.
"""

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np
from numpy.polynomial import Polynomial
from scipy.spatial import ConvexHull
from scipy.special import comb

from . import extremal, geometry, planar
from .config import RunConfig
from .constants import ExtremalKind
from .curvature import affine_exponent, ball_value
from .errors import IllConditionedGrid, UnsupportedBody
from .geometry import Ball, ConvexBody, Ellipsoid, HPolytope, SupportBody2D, VPolytope
from .models import BoundReport, SteinerFit

MAX_CONDITION = 1e10
PERIMETER_GRID = 8192
SPHERE_NODES = 96
RESIDUAL_FLOOR = 1e-10
NON_QUERMASS_DIMS = range(2, 7)

# Named estimators accepted by homogeneity_degree; OS uses p = n^2.
ESTIMATORS: dict[str, tuple[ExtremalKind, Callable[[int], float]]] = {
    "IS_1": (ExtremalKind.INNER_MAX, lambda n: 1.0),
    "os_-1": (ExtremalKind.OUTER_MIN, lambda n: -1.0),
    "OS_n2": (ExtremalKind.OUTER_MAX, lambda n: float(n * n)),
}


# ----------------------------------------------------------------------------
# Steiner polynomial
# ----------------------------------------------------------------------------


def default_t_grid(n: int) -> list[float]:
    return [0.1 * (i + 1) for i in range(n + 1)]


def _perimeter(body: ConvexBody) -> tuple[float, bool]:
    """Boundary length and whether it is exact (Cauchy's formula otherwise)."""
    if isinstance(body, HPolytope | VPolytope):
        return planar.polygon_perimeter(planar.order_ccw(body.vertices)), True
    if isinstance(body, Ball):
        return 2.0 * math.pi * body.radius, True
    if isinstance(body, SupportBody2D):
        return 2.0 * math.pi * float(np.mean(body.h)), True
    theta = 2.0 * math.pi * np.arange(PERIMETER_GRID) / PERIMETER_GRID
    h = np.asarray(body.support(planar.unit(theta)))
    # trapezoid on a periodic analytic h is exact to round-off for ellipses
    return 2.0 * math.pi * float(np.mean(h)), isinstance(body, Ellipsoid)


def _polytope_terms_3d(vertices: np.ndarray) -> np.ndarray:
    hull = ConvexHull(vertices)
    normals = hull.equations[:, :-1]
    edge_term = 0.0
    for i, simplex in enumerate(hull.simplices):
        for j, other in enumerate(hull.neighbors[i]):
            if other < i:
                continue
            a, b = hull.points[np.delete(simplex, j)]
            n1, n2 = normals[i], normals[other]
            angle = math.atan2(float(np.linalg.norm(np.cross(n1, n2))), float(n1 @ n2))
            edge_term += float(np.linalg.norm(a - b)) * angle
    return np.array([hull.volume, hull.area, 0.5 * edge_term, 4.0 * math.pi / 3.0])


def _sphere_rule(nodes: int = SPHERE_NODES) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre in cos(theta) times the trapezoid in phi."""
    z, wz = np.polynomial.legendre.leggauss(nodes)
    phi = 2.0 * math.pi * np.arange(2 * nodes) / (2 * nodes)
    zz, pp = np.meshgrid(z, phi, indexing="ij")
    s = np.sqrt(1.0 - zz**2)
    dirs = np.stack([s * np.cos(pp), s * np.sin(pp), zz], axis=-1).reshape(-1, 3)
    weights = np.repeat(wz * (math.pi / nodes), 2 * nodes)
    return dirs, weights


def _ellipsoid_terms_3d(body: Ellipsoid) -> np.ndarray:
    dirs, weights = _sphere_rule()
    a = body.shape
    area = float(np.linalg.det(a)) ** -0.5 * float(weights @ np.sqrt(np.einsum("ij,jk,ik->i", dirs, a, dirs)))
    mean_width = float(weights @ np.asarray(body.support(dirs)))
    return np.array([body.volume(), area, mean_width, 4.0 * math.pi / 3.0])


def steiner_terms(body: ConvexBody) -> tuple[np.ndarray, bool]:
    """Coefficients c_i of |K + tB| = sum c_i t^i, and whether they are exact."""
    n = body.dim
    if isinstance(body, Ball):
        terms = np.array([comb(n, i) * body.radius ** (n - i) for i in range(n + 1)])
        return terms * geometry.unit_ball_volume(n), True
    if n == 2:
        perimeter, exact = _perimeter(body)
        return np.array([geometry.volume(body), perimeter, math.pi]), exact
    if n == 3:
        if isinstance(body, HPolytope | VPolytope):
            return _polytope_terms_3d(body.vertices), True
        if isinstance(body, Ellipsoid):
            return _ellipsoid_terms_3d(body), False
    raise UnsupportedBody(f"no Steiner polynomial for {type(body).__name__} in dimension {n}")


def parallel_volume(body: ConvexBody, t: float | np.ndarray) -> float | np.ndarray:
    """|K + tB| from the Steiner polynomial."""
    terms, _ = steiner_terms(body)
    return Polynomial(terms)(t)


def _check_grid(n: int, t_grid: Sequence[float]) -> np.ndarray:
    t = np.asarray(t_grid, dtype=float)
    if np.any(t <= 0.0) or len(np.unique(t)) < n + 1:
        raise IllConditionedGrid(f"need at least {n + 1} distinct positive t values, got {list(t_grid)}")
    return t


def steiner_fit(body: ConvexBody, t_grid: Sequence[float] | None = None) -> SteinerFit:
    """Quermassintegrals W_0..W_n from outer parallel volumes on a t-grid.

    The binomial Vandermonde system is solved by least squares with columns scaled
    to unit max norm; a scaled condition number above MAX_CONDITION is refused.
    """
    n = body.dim
    t = _check_grid(n, default_t_grid(n) if t_grid is None else t_grid)
    terms, exact = steiner_terms(body)
    volumes = Polynomial(terms)(t)
    binomials = np.array([comb(n, i) for i in range(n + 1)])
    a = binomials * t[:, None] ** np.arange(n + 1)
    scale = np.abs(a).max(axis=0)
    cond = np.linalg.cond(a / scale)
    if not np.isfinite(cond) or cond > MAX_CONDITION:
        raise IllConditionedGrid(f"Steiner system condition number {cond:.3g} on t={list(t)}")
    coef, *_ = np.linalg.lstsq(a / scale, volumes, rcond=None)
    w = coef / scale
    residual = float(np.max(np.abs(a @ w - volumes)) / max(1.0, float(np.max(np.abs(volumes)))))
    logging.debug("steiner fit %s: W=%s residual %.3g cond %.3g", body.label, w, residual, cond)
    return SteinerFit(
        body_id=body.label,
        t_grid=t.tolist(),
        volumes=volumes.tolist(),
        W=w.tolist(),
        residual=residual,
        exact=exact,
    )


# ----------------------------------------------------------------------------
# Homogeneity of the extremal areas
# ----------------------------------------------------------------------------


def expected_degree(n: int, p: float) -> float:
    """Scaling degree n(n - p)/(n + p) of as_p and of every extremal area."""
    return n * affine_exponent(n, p)


def homogeneity_degree(
    estimator: str | Callable[[ConvexBody], float],
    body: ConvexBody,
    alphas: Sequence[float],
    config: RunConfig | None = None,
) -> float:
    """Slope of log estimator(alpha K) against log alpha.

    ``estimator`` is one of the names in ESTIMATORS or any callable on bodies.
    """
    scales = np.asarray(alphas, dtype=float)
    if len(np.unique(scales)) < 3 or np.any(scales <= 0.0):
        raise IllConditionedGrid(f"need at least 3 distinct positive scale factors, got {list(alphas)}")
    if isinstance(estimator, str):
        if estimator not in ESTIMATORS:
            raise ValueError(f"Unknown estimator: {estimator}")
        kind, p_of = ESTIMATORS[estimator]
        p = p_of(body.dim)
        cfg = config or RunConfig()

        def evaluate(k: ConvexBody) -> float:
            return extremal.estimate(kind, k, p, cfg).value

    else:
        evaluate = estimator
    values = np.array([evaluate(geometry.scale(body, float(a))) for a in scales])
    slope = float(np.polyfit(np.log(scales), np.log(values), 1)[0])
    logging.debug("homogeneity degree on %s: %.12g from %d scales", body.label, slope, len(scales))
    return slope


def non_quermass_report(n_list: Sequence[int], alphas: Sequence[float] | None = None) -> list[BoundReport]:
    """Per dimension, whether IS_1 fails to be a combination of quermassintegrals.

    Such a combination is a polynomial of degree n in the scale factor. The check
    passes when n(n-1)/(n+1) is not an integer and the best degree-n polynomial
    fit of alpha -> as_1(alpha B) leaves a residual above round-off.
    """
    grid = np.linspace(0.5, 2.0, 33) if alphas is None else np.asarray(alphas, dtype=float)
    reports = []
    for n in n_list:
        if n not in NON_QUERMASS_DIMS:
            raise UnsupportedBody(f"non-quermass check covers n in 2..6, got {n}")
        degree = expected_degree(n, 1.0)
        integral = abs(degree - round(degree)) < 1e-12
        values = np.array([ball_value(n, 1.0, float(a)) for a in grid])
        fit = Polynomial.fit(grid, values, n)
        residual = float(np.max(np.abs(fit(grid) - values)))
        reports.append(
            BoundReport(
                quantity=f"IS_1 is not a quermass combination, n={n}",
                value=residual,
                lower=RESIDUAL_FLOOR,
                passed=not integral and residual > RESIDUAL_FLOOR,
                witnesses=[f"B{n}"],
                detail=f"degree {degree:.6g}, polynomial residual {residual:.3g}",
            )
        )
        logging.debug("n=%d: degree %.6g integral=%s residual %.3g", n, degree, integral, residual)
    return reports
