"""L_p-affine surface areas: closed forms, quadrature, floating bodies and cap bounds.

In the plane the boundary integral is evaluated in the normal-angle parameterization:
with support function h and radius of curvature r = h + h'',

    as_p(K) = ∫_0^{2π} r(θ)^{2/(2+p)} h(θ)^{-2(p-1)/(2+p)} dθ,

using <x, N> = h, κ = 1/r and dμ = r dθ. For p = 0 this is ∫ h r dθ = 2|K|.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import geometry, planar
from .constants import (
    DEFAULT_DIRECTIONS,
    DEFAULT_GRID,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    FLOATING_DELTA0,
    FLOATING_HALVINGS,
    LIMIT_DIRECTIONS,
    AspMethod,
)
from .errors import (
    DeltaOutOfRange,
    EmptyFloatingBody,
    NonMonotoneSequence,
    NotCentered,
    OriginNotInterior,
    POutOfRange,
    PEqualsMinusN,
    UnsupportedBody,
)
from .geometry import Ball, ConvexBody, Ellipsoid, HPolytope, SupportBody2D, VPolytope
from .models import AspValue, BoundReport

FLAT_DIVERGENT = "flat boundary pieces: as_p = +inf for -n < p < 0"
FLAT_VANISHING = "curvature vanishes on flat boundary pieces"

# ----------------------------------------------------------------------------
# Exponents
# ----------------------------------------------------------------------------


def check_p(n: int, p: float) -> None:
    if p == -n:
        raise PEqualsMinusN(f"as_p is undefined for p = -n = {-n}")


def affine_exponent(n: int, p: float) -> float:
    """(n - p)/(n + p), the weight of |det T| under affine maps (-1 at p = ±inf)."""
    check_p(n, p)
    if math.isinf(p):
        return -1.0
    return (n - p) / (n + p)


def ball_value(n: int, p: float, radius: float = 1.0) -> float:
    """as_p(r B_2^n) = r^{n(n-p)/(n+p)} n |B_2^n|."""
    return radius ** (n * affine_exponent(n, p)) * n * geometry.unit_ball_volume(n)


# ----------------------------------------------------------------------------
# Evaluation
# ----------------------------------------------------------------------------


def asp_closed_form(body: Ball | Ellipsoid, p: float) -> AspValue:
    """Exact as_p of a ball or ellipsoid: |det T|^{(n-p)/(n+p)} n|B_2^n| for E = T B_2^n + c.

    The formula is about the center; off-center bodies are accepted only for p in {0, 1},
    where as_p does not depend on the origin.
    """
    if not isinstance(body, Ball | Ellipsoid):
        raise UnsupportedBody(f"no closed form for {type(body).__name__}")
    n = body.dim
    check_p(n, p)
    if p not in (0.0, 1.0) and not _is_centered(body):
        raise NotCentered(f"closed form needs the center at the origin, got {body.center}")
    if isinstance(body, Ball):
        value = ball_value(n, p, body.radius)
    else:
        det_t = 1.0 / math.sqrt(float(np.linalg.det(body.shape)))
        value = det_t ** affine_exponent(n, p) * n * geometry.unit_ball_volume(n)
    return AspValue.exact(p, value, AspMethod.CLOSED_FORM, body_id=body.label)


def _is_centered(body: Ball | Ellipsoid) -> bool:
    scale = body.radius if isinstance(body, Ball) else float(body.semi_axes().max())
    return bool(np.linalg.norm(body.center) <= 1e-12 * scale)


def _quadrature(h: np.ndarray, r: np.ndarray, p: float) -> float:
    a, b = planar.asp_exponents_2d(p)
    return float(2.0 * math.pi * np.mean(r**a * h**b))


def asp_quadrature_2d(body: SupportBody2D, p: float, m: int | None = None) -> AspValue:
    """Trapezoidal as_p of a smooth planar body, with a grid-halving error estimate."""
    check_p(2, p)
    if m is not None and m != body.m:
        theta = 2.0 * math.pi * np.arange(m) / m
        body = SupportBody2D.from_values(body.evaluate(theta), recenter=False, label=body.label)
    g = body.centroid()
    diameter = 2.0 * float(np.abs(body.h).max())
    if np.linalg.norm(g) > 1e-8 * diameter:
        raise NotCentered(f"centroid {g} is not at the origin")
    return _asp_grid(body, p)


def _asp_grid(body: SupportBody2D, p: float) -> AspValue:
    """Grid quadrature about the origin, which must be interior."""
    if body.h.min() <= 0.0:
        raise OriginNotInterior("origin is not interior to the body")
    h, r = body.h, body.radius_of_curvature
    value = _quadrature(h, r, p)
    coarse = _quadrature(h[::2], r[::2], p)
    logging.debug("quadrature as_%s on m=%d: %.12g (halved grid %.12g)", p, body.m, value, coarse)
    return AspValue.exact(p, value, AspMethod.QUADRATURE_2D, error_estimate=abs(value - coarse), body_id=body.label)


def _flat_rule(n: int, p: float, volume: float, label: str, method: AspMethod) -> AspValue:
    if p == 0:
        return AspValue.exact(p, n * volume, method, body_id=label)
    if -n < p < 0:
        return AspValue.infinite(p, method, FLAT_DIVERGENT, body_id=label)
    return AspValue.exact(p, 0.0, method, body_id=label, reason=FLAT_VANISHING)


def asp(body: ConvexBody, p: float, m: int | None = None) -> AspValue:
    """as_p by the best available exact method for the representation."""
    n = body.dim
    check_p(n, p)
    if isinstance(body, Ball | Ellipsoid):
        if n == 2 and p not in (0.0, 1.0) and not _is_centered(body):
            return _asp_grid(geometry.to_support_body(body, m or DEFAULT_GRID), p)
        return asp_closed_form(body, p)
    if isinstance(body, SupportBody2D):
        return asp_quadrature_2d(body, p, m)
    if n == 2:
        if isinstance(body, HPolytope | VPolytope):
            boundary = planar.MixedBoundary.from_polygon(geometry.polygonize(body), body.label)
        elif isinstance(body, planar.MixedBoundary):
            boundary = body
        else:
            boundary = body.boundary()
        value = boundary.asp(p)
        if math.isinf(value):
            return AspValue.infinite(p, AspMethod.EXACT_PIECEWISE, FLAT_DIVERGENT, body_id=body.label)
        return AspValue.exact(p, value, AspMethod.EXACT_PIECEWISE, body_id=body.label)
    if isinstance(body, HPolytope | VPolytope):
        return _flat_rule(n, p, geometry.volume(body), body.label, AspMethod.FLAT_FACES)
    raise UnsupportedBody(f"as_p of {type(body).__name__} in R^{n} is not supported")


def polar_volume(body: SupportBody2D) -> float:
    """|K°| = ½ ∫ h^{-2} dθ."""
    return float(math.pi * np.mean(body.h**-2.0))


def affine_isoperimetric_check(body: ConvexBody, p: float, tolerance: float = 1e-7) -> BoundReport:
    """as_p(K)/as_p(B) against (|K|/|B|)^{(n-p)/(n+p)}: at most for p >= 0, at least for -n < p <= 0."""
    n = body.dim
    if p < -n:
        raise POutOfRange(f"the affine isoperimetric inequality needs p > -n, got {p}")
    ratio = asp(body, p).value / ball_value(n, p)
    rhs = (geometry.volume(body) / geometry.unit_ball_volume(n)) ** affine_exponent(n, p)
    quantity = f"as_{p:g}(K)/as_{p:g}(B)"
    if p >= 0:
        return BoundReport.check(quantity, ratio, upper=rhs, tolerance=tolerance, witnesses=[body.label])
    return BoundReport.check(quantity, ratio, lower=rhs, tolerance=tolerance, witnesses=[body.label])


# ----------------------------------------------------------------------------
# Floating bodies
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class FloatingBody:
    """K_δ as the intersection of the half-planes cutting caps of area δ|K|."""

    parent: ConvexBody
    delta: float
    result: VPolytope
    directions: int = 0
    offsets: np.ndarray = field(default_factory=lambda: np.empty(0), repr=False)
    exact: Ball | Ellipsoid | None = None

    def volume(self) -> float:
        """Exact for disks and ellipses, else the area of the clipped polygon."""
        return geometry.volume(self.exact if self.exact is not None else self.result)


def _disk_height(delta: float) -> float:
    """s with |{y in B : y_1 >= s}| = δ π."""
    return float(brentq(lambda s: planar.disk_cap_area(s) - delta * math.pi, -1.0, 1.0, xtol=1e-15))


def floating_body_2d(body: ConvexBody, delta: float, directions: int = DEFAULT_DIRECTIONS) -> FloatingBody:
    """Convex floating body of a planar body.

    The result is always the polygon cut out by the half-planes on a uniform direction
    grid. Disks and ellipses get their cap offsets in closed form (K_δ = c + s(K - c)),
    and the exact ellipse is kept in ``exact``; every other body is polygonized and cut
    by exact cap offsets.
    """
    if body.dim != 2:
        raise UnsupportedBody("floating bodies are planar only")
    if not 0.0 < delta < 0.5:
        raise DeltaOutOfRange(f"delta must lie in (0, 1/2), got {delta}")
    label = f"{body.label}_delta{delta:g}"
    dirs = planar.unit(2.0 * math.pi * np.arange(directions) / directions)
    if isinstance(body, Ball | Ellipsoid):
        s = _disk_height(delta)
        if s <= 0.0:
            raise EmptyFloatingBody(f"K_delta is empty for delta={delta}")
        image = geometry.apply_affine(geometry.AffineMap(s * np.eye(2), (1.0 - s) * body.center), body)
        polygon = geometry.polygonize(image, directions, circumscribed=True)
        offsets = np.asarray(image.support(dirs))
        return FloatingBody(body, delta, VPolytope(polygon, label), directions, offsets, image)
    vertices = geometry.polygonize(body)
    area = planar.polygon_area(vertices)
    offsets = np.array([planar.cap_offset(vertices, u, delta * area) for u in dirs])
    half = directions // 2
    if directions % 2 == 0 and np.any(offsets[:half] + offsets[half:] <= 0.0):
        raise EmptyFloatingBody(f"opposite caps overlap for delta={delta}")
    result = planar.clip_halfplanes(vertices, dirs, offsets)
    if planar.polygon_area(result) <= 0.0:
        raise EmptyFloatingBody(f"K_delta is empty on a {directions}-direction grid for delta={delta}")
    logging.debug("floating body delta=%g: %d vertices, area %.10g", delta, len(result), planar.polygon_area(result))
    return FloatingBody(body, delta, VPolytope(result, label), directions, offsets)


def richardson_limit(ratios: np.ndarray, values: np.ndarray, exponents: list[float]) -> list[np.ndarray]:
    """Successive Richardson tables eliminating δ^e terms, one level per exponent.

    ``ratios[k] = δ_k / δ_{k+1}``; returns the list of levels starting with the raw values.
    """
    levels = [np.asarray(values, dtype=float)]
    for depth, e in enumerate(exponents, start=1):
        last = levels[-1]
        if len(last) < 2:
            break
        mult = ratios[depth - 1 : depth - 1 + len(last) - 1] ** e
        levels.append((mult * last[1:] - last[:-1]) / (mult - 1.0))
    return levels


def floating_deltas(delta0: float = FLOATING_DELTA0, halvings: int = FLOATING_HALVINGS) -> list[float]:
    return [delta0 * 2.0**-k for k in range(halvings)]


def floating_sequence(body: ConvexBody, deltas: list[float], directions: int = LIMIT_DIRECTIONS) -> np.ndarray:
    """d(δ) = 2(2/3)^{2/3} (|K| - |K_δ|) / (δ|K|)^{2/3}."""
    vol = geometry.volume(body)
    if not isinstance(body, Ball | Ellipsoid):
        vol = planar.polygon_area(geometry.polygonize(body))
    const = 2.0 * (2.0 / 3.0) ** (2.0 / 3.0)
    return np.array(
        [const * (vol - floating_body_2d(body, d, directions).volume()) / (d * vol) ** (2.0 / 3.0) for d in deltas]
    )


def asp1_floating_limit_2d(
    body: ConvexBody, deltas: list[float] | None = None, directions: int = LIMIT_DIRECTIONS
) -> AspValue:
    """as_1 as the limit of the floating-body volume deficit, Richardson-extrapolated in δ."""
    ds = floating_deltas() if deltas is None else list(deltas)
    if len(ds) < 3:
        raise DeltaOutOfRange(f"need at least three delta values, got {len(ds)}")
    if any(b >= a for a, b in zip(ds, ds[1:], strict=False)):
        raise DeltaOutOfRange("delta values must be strictly decreasing")
    seq = floating_sequence(body, ds, directions)
    steps = np.diff(seq)
    scale = float(np.abs(seq).max()) or 1.0
    if (steps > 1e-9 * scale).any() and (steps < -1e-9 * scale).any():
        raise NonMonotoneSequence(f"floating-body sequence is not monotone: {seq}")
    ratios = np.array(ds[:-1]) / np.array(ds[1:])
    levels = richardson_limit(ratios, seq, [2.0 / 3.0, 4.0 / 3.0])
    top = levels[-1]
    previous = levels[-2]
    value = max(float(top[-1]), 0.0)
    error = abs(float(top[-1]) - float(previous[-1]))
    logging.debug("floating limit: raw %s -> %.8g (+- %.2g)", np.array2string(seq, precision=6), value, error)
    return AspValue.exact(1.0, value, AspMethod.FLOATING_LIMIT, error_estimate=error, body_id=body.label)


# ----------------------------------------------------------------------------
# Spherical caps of K ∩ RB
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SphericalMeasure:
    """Directions with ρ_K > R and the boundary measure of the spherical part of K ∩ RB."""

    radius: float
    sigma: float  # normalized spherical measure of O
    sigma_error: float
    mu: float  # μ(RO) = σ n|B| R^{n-1}
    mu_error: float
    samples: int
    seed: int


def spherical_measure(
    body: ConvexBody, radius: float, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> SphericalMeasure:
    """Monte Carlo estimate of O = {u : ρ_K(u) > R} on the sphere."""
    n = body.dim
    dirs = geometry.sphere_directions(n, samples, np.random.default_rng(seed))
    hit = np.asarray(body.radial(dirs)) > radius
    sigma = float(hit.mean())
    err = math.sqrt(sigma * (1.0 - sigma) / samples)
    surface = n * geometry.unit_ball_volume(n) * radius ** (n - 1)
    return SphericalMeasure(radius, sigma, err, sigma * surface, err * surface, samples, seed)


def asp_cap_lower_bound(
    body: ConvexBody, radius: float, p: float, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> AspValue:
    """Contribution of the spherical part of ∂(K ∩ RB): μ(RO)·(1/R)^{2np/(n+p) - 1}."""
    n = body.dim
    if not 0.0 <= p <= n:
        raise POutOfRange(f"the cap lower bound needs p in [0, {n}], got {p}")
    measure = spherical_measure(body, radius, samples, seed)
    factor = (1.0 / radius) ** (2.0 * n * p / (n + p) - 1.0)
    return AspValue.exact(
        p,
        measure.mu * factor,
        AspMethod.SPHERICAL_CAP_LOWER_BOUND,
        error_estimate=measure.mu_error * factor,
        body_id=body.label,
        seed=seed,
    )
