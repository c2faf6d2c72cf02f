"""Inner and outer extremal affine surface areas.

IS_p(K) = sup as_p(C) over convex C ⊆ K, OS_p(K) = sup and os_p(K) = inf over C ⊇ K,
is_p(K) = inf over C ⊆ K. Outside the degenerate p-ranges the estimators search
equivariant candidate families, so every estimate is a one-sided bound carrying its
semantics: a lower bound for the suprema and an upper bound for os_p.
"""

import logging
import math
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from . import curvature, geometry, planar
from .config import RunConfig
from .constants import OS_RADIUS_FACTOR, R_GRID_SIZE, ExtremalKind, Semantics, Severity
from .curvature import affine_exponent, ball_value, check_p
from .ellipsoids import john_ellipsoid, khachiyan, loewner_ellipsoid
from .errors import (
    AffsurfError,
    NotCentered,
    NotConverged,
    NotDivergentRange,
    POutOfRange,
    UnsupportedBody,
)
from .geometry import Ball, ConvexBody, Ellipsoid, HPolytope, SupportBody2D, VPolytope
from .models import BoundReport, CandidateRecord, ExtremalRecord

JOHN_SCALES = (0.25, 0.5, 0.75, 1.0)
DILATES = (1.0, 1.25, 1.5, 2.0)
FLOATING_CANDIDATES = (0.001, 0.004, 0.016)
SMOOTHING_WIDTH = 0.05  # radians
PROBE_STEPS = 6
POISSON_RADII = tuple(1.0 - 0.64 * 2.0**-i for i in range(PROBE_STEPS))


@dataclass(frozen=True)
class Candidate:
    family: str
    parameter: float | None
    body: ConvexBody

    @property
    def label(self) -> str:
        return self.family if self.parameter is None else f"{self.family}[{self.parameter:.6g}]"


@dataclass(frozen=True)
class ExtremalEstimate:
    """Best candidate of a search, or a closed-form / limiting value."""

    kind: ExtremalKind
    p: float
    body_id: str
    value: float
    semantics: Semantics
    witness: ConvexBody | None = None
    witness_label: str = ""
    candidates: list[CandidateRecord] = field(default_factory=list)
    bounds: list[BoundReport] = field(default_factory=list)
    error_estimate: float = 0.0
    sequence: list[float] = field(default_factory=list)

    @property
    def divergent(self) -> bool:
        return math.isinf(self.value)

    @property
    def passed(self) -> bool:
        return not any(b.failed for b in self.bounds)

    def record(self) -> ExtremalRecord:
        return ExtremalRecord(
            kind=self.kind,
            p=self.p,
            value=self.value,
            semantics=self.semantics,
            witness=self.witness_label,
            error_estimate=self.error_estimate,
            sequence=self.sequence,
            candidates=self.candidates,
            bounds=self.bounds,
        )


# ----------------------------------------------------------------------------
# p-ranges and closed forms
# ----------------------------------------------------------------------------


def in_relevant_range(kind: ExtremalKind, n: int, p: float) -> bool:
    """IS: [0, n], OS: [n, inf], os: (-n, 0]; is_p has no relevant range."""
    if kind == ExtremalKind.INNER_MAX:
        return 0.0 <= p <= n
    if kind == ExtremalKind.OUTER_MAX:
        return p >= n
    if kind == ExtremalKind.OUTER_MIN:
        return -n < p <= 0.0
    return False


def closed_form_extremal(body: ConvexBody, kind: ExtremalKind | str, p: float) -> ExtremalEstimate | None:
    """Exact values at the endpoints of the relevant ranges and the divergent/vanishing cases.

    Returns None when no closed form applies.
    """
    kind = ExtremalKind(kind)
    n = body.dim
    check_p(n, p)
    label = body.label
    ball_asp = n * geometry.unit_ball_volume(n)

    def exact(value: float, witness: ConvexBody | None, witness_label: str) -> ExtremalEstimate:
        return ExtremalEstimate(kind, p, label, value, Semantics.EXACT, witness, witness_label)

    def limit(value: float) -> ExtremalEstimate:
        return ExtremalEstimate(kind, p, label, value, Semantics.LIMIT)

    if kind == ExtremalKind.INNER_MIN:
        return exact(0.0, None, "")
    if kind == ExtremalKind.INNER_MAX:
        if p == 0:
            return exact(n * geometry.volume(body), body, "self")
        if p == n:
            return exact(ball_asp, Ball(np.zeros(n), geometry.inradius(body)), "inscribed_ball")
        if p > n or p < 0:
            return limit(math.inf)
        return None
    if kind == ExtremalKind.OUTER_MAX:
        if p == n:
            return exact(ball_asp, Ball(np.zeros(n), geometry.circumradius(body)), "circumscribed_ball")
        if p < n:
            return limit(math.inf)
        return None
    if p == 0:
        return exact(n * geometry.volume(body), body, "self")
    if p > 0 or p < -n:
        return limit(0.0)
    return None


# ----------------------------------------------------------------------------
# Candidate evaluation
# ----------------------------------------------------------------------------


def _require_centered(body: ConvexBody) -> None:
    g = geometry.centroid(body)
    if np.linalg.norm(g) > 1e-6 * geometry.circumradius(body):
        raise NotCentered(f"centroid {g} is not at the origin")


def _select(
    candidates: list[Candidate], p: float, maximize: bool, threads: int = 1
) -> tuple[int, list[CandidateRecord], list[float]]:
    """Index of the best candidate (smallest index on ties), the log and error estimates."""

    def evaluate(candidate: Candidate) -> tuple[float, float]:
        result = curvature.asp(candidate.body, p)
        return result.value, result.error_estimate

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(evaluate, candidates))
    else:
        results = [evaluate(c) for c in candidates]
    finite = [i for i, (value, _) in enumerate(results) if math.isfinite(value)]
    if not finite:
        raise NotConverged("no candidate has a finite as_p value")
    pick = max if maximize else min
    best = pick(finite, key=lambda i: results[i][0])
    log = [
        CandidateRecord(index=i, family=c.family, parameter=c.parameter, value=v, label=c.label)
        for i, (c, (v, _)) in enumerate(zip(candidates, results, strict=True))
    ]
    return best, log, [e for _, e in results]


def _estimate_from(
    kind: ExtremalKind,
    body: ConvexBody,
    p: float,
    candidates: list[Candidate],
    semantics: Semantics,
    bounds: Callable[[float, str], list[BoundReport]],
    threads: int,
) -> ExtremalEstimate:
    maximize = kind != ExtremalKind.OUTER_MIN
    best, log, errors = _select(candidates, p, maximize, threads)
    winner = candidates[best]
    value = log[best].value
    if isinstance(body, Ball | Ellipsoid) and winner.family == "self":
        semantics = Semantics.EXACT
    logging.debug("%s_%g(%s): %d candidates, best %s = %.10g", kind, p, body.label, len(log), winner.label, value)
    return ExtremalEstimate(
        kind,
        p,
        body.label,
        value,
        semantics,
        winner.body,
        winner.label,
        log,
        bounds(value, winner.label),
        errors[best],
    )


# ----------------------------------------------------------------------------
# Candidate families
# ----------------------------------------------------------------------------


def _inscribed_polygon(body: ConvexBody, points: int = 256) -> HPolytope | VPolytope:
    if isinstance(body, HPolytope | VPolytope):
        return body
    return VPolytope(geometry.polygonize(body, points), body.label)


def _outer_points(body: ConvexBody, points: int = 512) -> np.ndarray:
    """Points whose convex hull contains the body."""
    if isinstance(body, HPolytope | VPolytope):
        return body.vertices
    return geometry.polygonize(body, points, circumscribed=True)


def _john_candidates(body: ConvexBody) -> list[Candidate]:
    if isinstance(body, Ball | Ellipsoid):
        john: ConvexBody = body
    else:
        try:
            john = john_ellipsoid(_inscribed_polygon(body)).ellipsoid
        except NotConverged as exc:
            logging.debug("John candidate skipped: %s", exc)
            return []
    return [Candidate("john", s, geometry.scale(john, s)) for s in JOHN_SCALES]


def _ball_cap_candidates(body: ConvexBody) -> list[Candidate]:
    out = []
    for radius in np.geomspace(geometry.inradius(body), geometry.circumradius(body), R_GRID_SIZE):
        piece = geometry.intersect_ball(body, float(radius))
        if isinstance(piece, geometry.BallIntersection):
            piece = piece.boundary()
        out.append(Candidate("ball_cap", float(radius), piece))
    return out


def _fit_inside(body: ConvexBody, smooth: SupportBody2D) -> SupportBody2D:
    """Largest λ <= 1 with λ·smooth inside the body, checked on a support grid 4x finer."""
    k = 4 * smooth.m
    theta = 2.0 * math.pi * np.arange(k) / k
    ratio = np.asarray(body.support(planar.unit(theta))) / smooth.evaluate(theta)
    return smooth.scaled(min(1.0, float(ratio.min())))


def _floating_candidates(body: ConvexBody, m: int) -> list[Candidate]:
    out = []
    theta = 2.0 * math.pi * np.arange(m) / m
    for delta in FLOATING_CANDIDATES:
        try:
            fb = curvature.floating_body_2d(body, delta)
            if fb.exact is not None:
                out.append(Candidate("floating", delta, fb.exact))
                continue
            h = np.asarray(fb.result.support(planar.unit(theta)))
            smooth = SupportBody2D.from_smoothed(h, SMOOTHING_WIDTH, f"{body.label}_float{delta:g}")
        except AffsurfError as exc:
            logging.debug("floating candidate delta=%g skipped: %s", delta, exc)
            continue
        out.append(Candidate("floating", delta, _fit_inside(body, smooth)))
    return out


def _loewner(body: ConvexBody) -> Ellipsoid:
    if isinstance(body, Ball | Ellipsoid):
        return loewner_ellipsoid(body).ellipsoid
    c, shape, _, _ = khachiyan(_outer_points(body))
    return Ellipsoid(c, shape, f"L({body.label})")


def _dilate_candidates(loewner: Ellipsoid) -> list[Candidate]:
    return [Candidate("loewner", s, geometry.scale(loewner, s)) for s in DILATES]


def _ball_hull_candidates(body: ConvexBody) -> list[Candidate]:
    out = []
    lo, hi = geometry.inradius(body), OS_RADIUS_FACTOR * geometry.circumradius(body)
    for radius in np.geomspace(lo, hi, R_GRID_SIZE):
        hull = geometry.convex_hull_with_ball(body, float(radius))
        if isinstance(hull, geometry.BallHull):
            hull = hull.boundary()
        out.append(Candidate("ball_hull", float(radius), hull))
    return out


def _ellipse_search(body: ConvexBody, loewner: Ellipsoid, p: float, maximize: bool) -> Candidate | None:
    """Local search over enclosing ellipses E = c + t·L M B_2, tight on the body.

    M is lower triangular with positive diagonal; c moves in the Löwner frame. Centrally
    symmetric bodies keep c at the Löwner center.
    """
    pts = _outer_points(body)
    base = loewner.linear_part
    free_center = not geometry.is_symmetric(body)

    def ellipse(z: np.ndarray) -> Ellipsoid:
        m = np.array([[math.exp(z[0]), 0.0], [z[1], math.exp(z[2])]])
        c = loewner.center + (base @ z[3:5] if free_center else 0.0)
        lin = base @ m
        w = np.linalg.solve(lin, (pts - c).T)
        lin = lin * float(np.linalg.norm(w, axis=0).max())
        return Ellipsoid(c, np.linalg.inv(lin @ lin.T), f"E({body.label})")

    start = ellipse(np.zeros(5))
    f0 = curvature.asp(start, p).value
    if not math.isfinite(f0) or f0 <= 0.0:
        return None
    sign = -1.0 if maximize else 1.0

    def objective(z: np.ndarray) -> float:
        try:
            value = curvature.asp(ellipse(z), p).value
        except AffsurfError:
            return math.inf
        return sign * value / f0

    z0 = np.zeros(5 if free_center else 3)
    res = minimize(
        lambda z: objective(np.r_[z, np.zeros(5 - len(z))]),
        z0,
        method="Nelder-Mead",
        options={"xatol": 1e-8, "fatol": 1e-12, "maxiter": 600 * len(z0)},
    )
    logging.debug("ellipse search: %d steps, relative value %.10g", res.nit, abs(res.fun))
    return Candidate("ellipse_search", None, ellipse(np.r_[res.x, np.zeros(5 - len(res.x))]))


# ----------------------------------------------------------------------------
# Bounds
# ----------------------------------------------------------------------------


def _ratio_term(body: ConvexBody, p: float) -> float:
    """n|B| (|K|/|B|)^{(n-p)/(n+p)}."""
    n = body.dim
    return ball_value(n, p) * (geometry.volume(body) / geometry.unit_ball_volume(n)) ** affine_exponent(n, p)


def _loewner_factor(body: ConvexBody, p: float) -> float:
    """n^{n(n-p)/(n+p)}, with the exponent halved for centrally symmetric bodies."""
    n = body.dim
    power = n * affine_exponent(n, p)
    if geometry.is_symmetric(body):
        power /= 2.0
    return float(n**power)


def inner_sandwich(body: ConvexBody, p: float, value: float, witness: str, tol: float) -> list[BoundReport]:
    """IS_p(K) <= n |B|^{2p/(n+p)} |K|^{(n-p)/(n+p)}."""
    upper = _ratio_term(body, p)
    return [BoundReport.check(f"IS_{p:g}", value, upper=upper, tolerance=tol * max(1.0, upper), witnesses=[witness])]


def outer_max_sandwich(body: ConvexBody, p: float, value: float, witness: str, tol: float) -> list[BoundReport]:
    """n^{n(n-p)/(n+p)} OS_p(B)(|K|/|B|)^{..} <= OS_p(K) <= OS_p(B)(|K|/|B|)^{(n-p)/(n+p)}."""
    upper = _ratio_term(body, p)
    lower = _loewner_factor(body, p) * upper
    return [
        BoundReport.check(
            f"OS_{p:g}", value, lower=lower, upper=upper, tolerance=tol * max(1.0, upper), witnesses=[witness]
        )
    ]


def outer_min_sandwich(body: ConvexBody, p: float, value: float, witness: str, tol: float) -> list[BoundReport]:
    """os_p(B)(|K|/|B|)^{..} <= os_p(K) <= n^{n(n-p)/(n+p)} os_p(B)(|K|/|B|)^{(n-p)/(n+p)}."""
    lower = _ratio_term(body, p)
    upper = _loewner_factor(body, p) * lower
    return [
        BoundReport.check(
            f"os_{p:g}", value, lower=lower, upper=upper, tolerance=tol * max(1.0, upper), witnesses=[witness]
        )
    ]


# ----------------------------------------------------------------------------
# Estimators
# ----------------------------------------------------------------------------


def _check_planar(body: ConvexBody, kind: ExtremalKind, p: float) -> None:
    if body.dim != 2:
        raise UnsupportedBody("candidate searches run in the plane only")
    if not in_relevant_range(kind, 2, p):
        raise POutOfRange(f"{kind}_p search needs p in its relevant range, got {p}")
    _require_centered(body)


def estimate_IS(body: ConvexBody, p: float, config: RunConfig | None = None) -> ExtremalEstimate:
    """Lower bound on IS_p for 0 < p < n from the body, John, K ∩ RB and floating-body candidates."""
    cfg = config or RunConfig()
    kind = ExtremalKind.INNER_MAX
    if not 0.0 < p < body.dim:
        raise POutOfRange(f"IS_p search needs 0 < p < {body.dim}, got {p}")
    _check_planar(body, kind, p)
    candidates = [Candidate("self", None, body)]
    candidates += _ball_cap_candidates(body)
    candidates += _john_candidates(body)
    candidates += _floating_candidates(body, cfg.quadrature_grid)
    tol = cfg.tol("bound")
    return _estimate_from(
        kind,
        body,
        p,
        candidates,
        Semantics.LOWER,
        lambda v, w: inner_sandwich(body, p, v, w, tol),
        cfg.threads,
    )


def estimate_os(body: ConvexBody, p: float, config: RunConfig | None = None) -> ExtremalEstimate:
    """Upper bound on os_p for -n < p < 0 from enclosing ellipses; polygons have as_p = +inf here."""
    cfg = config or RunConfig()
    kind = ExtremalKind.OUTER_MIN
    if not -body.dim < p < 0.0:
        raise POutOfRange(f"os_p search needs {-body.dim} < p < 0, got {p}")
    _check_planar(body, kind, p)
    loewner = _loewner(body)
    candidates = [Candidate("self", None, body)]
    candidates += _dilate_candidates(loewner)
    if not isinstance(body, Ball | Ellipsoid):
        found = _ellipse_search(body, loewner, p, maximize=False)
        candidates += [found] if found is not None else []
    tol = cfg.tol("bound")
    return _estimate_from(
        kind,
        body,
        p,
        candidates,
        Semantics.UPPER,
        lambda v, w: outer_min_sandwich(body, p, v, w, tol),
        cfg.threads,
    )


def estimate_OS(body: ConvexBody, p: float, config: RunConfig | None = None) -> ExtremalEstimate:
    """Lower bound on OS_p for p > n from Löwner dilates, conv{K, sB} and enclosing ellipses."""
    cfg = config or RunConfig()
    kind = ExtremalKind.OUTER_MAX
    if not p > body.dim:
        raise POutOfRange(f"OS_p search needs p > {body.dim}, got {p}")
    _check_planar(body, kind, p)
    loewner = _loewner(body)
    candidates = [Candidate("self", None, body)]
    candidates += _dilate_candidates(loewner)
    candidates += _ball_hull_candidates(body)
    if not isinstance(body, Ball | Ellipsoid):
        found = _ellipse_search(body, loewner, p, maximize=True)
        candidates += [found] if found is not None else []
    tol = cfg.tol("bound")
    return _estimate_from(
        kind,
        body,
        p,
        candidates,
        Semantics.LOWER,
        lambda v, w: outer_max_sandwich(body, p, v, w, tol),
        cfg.threads,
    )


def _exact_ellipsoid(body: Ball | Ellipsoid, kind: ExtremalKind, p: float, tol: float) -> ExtremalEstimate:
    if not in_relevant_range(kind, body.dim, p):
        raise POutOfRange(f"{kind}_p needs p in its relevant range, got {p}")
    if np.linalg.norm(body.center) > 0.0:
        raise NotCentered(f"ellipsoid center {body.center} is not the origin")
    value = curvature.asp_closed_form(body, p).value
    sandwich = {
        ExtremalKind.INNER_MAX: inner_sandwich,
        ExtremalKind.OUTER_MAX: outer_max_sandwich,
        ExtremalKind.OUTER_MIN: outer_min_sandwich,
    }[kind]
    log = [CandidateRecord(index=0, family="self", value=value, label="self")]
    bounds = sandwich(body, p, value, "self", tol)
    return ExtremalEstimate(kind, p, body.label, value, Semantics.EXACT, body, "self", log, bounds)


def estimate(kind: ExtremalKind | str, body: ConvexBody, p: float, config: RunConfig | None = None) -> ExtremalEstimate:
    """Closed form where one exists, exact values for ellipsoids in any dimension, else a planar search."""
    kind = ExtremalKind(kind)
    cfg = config or RunConfig()
    closed = closed_form_extremal(body, kind, p)
    if closed is not None:
        return closed
    if isinstance(body, Ball | Ellipsoid):
        return _exact_ellipsoid(body, kind, p, cfg.tol("bound"))
    if kind == ExtremalKind.INNER_MAX:
        return estimate_IS(body, p, cfg)
    if kind == ExtremalKind.OUTER_MIN:
        return estimate_os(body, p, cfg)
    return estimate_OS(body, p, cfg)


# ----------------------------------------------------------------------------
# Divergent and vanishing ranges
# ----------------------------------------------------------------------------


def _probe_family(body: ConvexBody, kind: ExtremalKind, p: float) -> tuple[str, list[Candidate], float]:
    n = body.dim
    r_in, r_out = geometry.inradius(body), geometry.circumradius(body)
    steps = range(PROBE_STEPS)

    def balls(radii: Iterable[float], family: str) -> list[Candidate]:
        return [Candidate(family, float(r), Ball(np.zeros(n), float(r))) for r in radii]

    def inner_polytopes() -> list[Candidate]:
        if n == 2:
            return [
                Candidate("polygon", float(k), VPolytope(planar.regular_polygon(k, r_in))) for k in (3, 4, 6, 8, 12, 24)
            ]
        halves = [r_in * 2.0**-i / math.sqrt(n) for i in steps]
        return [Candidate("cube", a, HPolytope.cube(n, a)) for a in halves]

    def outer_polytopes() -> list[Candidate]:
        if n == 2:
            return [
                Candidate("polygon", float(k), VPolytope(planar.regular_polygon(k, r_out / math.cos(math.pi / k))))
                for k in (3, 4, 6, 8, 12, 24)
            ]
        return [Candidate("cube", r_out * 2.0**i, HPolytope.cube(n, r_out * 2.0**i)) for i in steps]

    def rounded_polygons() -> list[Candidate]:
        square = planar.regular_polygon(4, r_in)
        smooth = [
            Candidate("rounded_polygon", rho, SupportBody2D.rounded_polygon(square, rho, label=f"square_rho{rho:g}"))
            for rho in POISSON_RADII
        ]
        return smooth + [Candidate("polygon", 4.0, VPolytope(square))]

    if kind == ExtremalKind.INNER_MAX:
        if -n < p < 0:
            if n == 2:
                return "rounded inscribed squares", rounded_polygons(), math.inf
            return "inscribed polytopes", inner_polytopes(), math.inf
        return "shrinking balls", balls(r_in * 2.0 ** -np.arange(PROBE_STEPS), "ball"), math.inf
    if kind == ExtremalKind.OUTER_MAX:
        if p < -n:
            if n != 2:
                raise UnsupportedBody("rounded-cube probes are planar only")
            eps = r_out * 2.0 ** -np.arange(1, PROBE_STEPS + 1)
            rounded = [
                Candidate("rounded_square", float(e), planar.MixedBoundary.rounded_square(float(e), r_out)) for e in eps
            ]
            return "rounded squares", rounded, math.inf
        return "growing balls", balls(r_out * 2.0 ** np.arange(PROBE_STEPS), "ball"), math.inf
    if kind == ExtremalKind.OUTER_MIN:
        return "enclosing polytopes", outer_polytopes(), 0.0
    if -n < p <= 0:
        return "shrinking balls", balls(r_in * 2.0 ** -np.arange(PROBE_STEPS), "ball"), 0.0
    return "inscribed polytopes", inner_polytopes(), 0.0


def range_probe(body: ConvexBody, kind: ExtremalKind | str, p: float) -> ExtremalEstimate:
    """Witness sequence exhibiting the +inf or 0 value of a degenerate range."""
    kind = ExtremalKind(kind)
    n = body.dim
    check_p(n, p)
    if kind != ExtremalKind.INNER_MIN and in_relevant_range(kind, n, p):
        raise NotDivergentRange(f"{kind}_{p:g} lies in the relevant range")
    family, candidates, target = _probe_family(body, kind, p)
    values = [curvature.asp(c.body, p).value for c in candidates]
    steps = np.diff(values)
    if math.isinf(target):
        ok = bool(np.all(np.nan_to_num(steps, nan=0.0, posinf=1.0) >= 0.0)) and (
            math.isinf(values[-1]) or values[-1] > values[0]
        )
    else:
        ok = bool(np.all(steps <= 0.0)) and values[-1] <= values[0]
    bounds = [
        BoundReport(
            quantity=f"{kind}_{p:g} witness sequence toward {target:g}",
            value=values[-1],
            passed=ok,
            witnesses=[candidates[-1].label],
            detail=family,
        )
    ]
    log = [
        CandidateRecord(index=i, family=c.family, parameter=c.parameter, value=v, label=c.label)
        for i, (c, v) in enumerate(zip(candidates, values, strict=True))
    ]
    logging.debug("range probe %s_%g on %s: %s -> %g", kind, p, family, values, target)
    return ExtremalEstimate(
        kind,
        p,
        body.label,
        target,
        Semantics.LIMIT,
        candidates[-1].body,
        candidates[-1].label,
        log,
        bounds,
        sequence=values,
    )


# ----------------------------------------------------------------------------
# Monotonicity and continuity checks
# ----------------------------------------------------------------------------


def _polar_volume(body: ConvexBody) -> float:
    if isinstance(body, SupportBody2D):
        return curvature.polar_volume(body)
    return geometry.volume(geometry.polar(body))


def normalized_map(kind: ExtremalKind, body: ConvexBody, p: float, value: float) -> float:
    """(IS_p / n|K|)^{(n+p)/p}, or the same with n|K°| for the outer quantities."""
    n = body.dim
    base = n * (geometry.volume(body) if kind == ExtremalKind.INNER_MAX else _polar_volume(body))
    power = 1.0 if math.isinf(p) else (n + p) / p
    return float((value / base) ** power)


def verify_monotonicity(
    body: ConvexBody, kind: ExtremalKind | str, p_grid: Iterable[float], config: RunConfig | None = None
) -> list[BoundReport]:
    """Consecutive comparisons of the normalized map: nondecreasing for IS, nonincreasing for OS and os.

    Comparisons between two exact estimates are errors when violated; any other
    violation is reported as a warning since the estimates are one-sided.
    """
    kind = ExtremalKind(kind)
    cfg = config or RunConfig()
    n = body.dim
    requested = list(p_grid)
    grid = sorted(p for p in requested if p != 0 and in_relevant_range(kind, n, p))
    if len(grid) < len(requested):
        logging.warning("ignoring p values outside the %s range: %s", kind, sorted(set(requested) - set(grid)))
    points = []
    for p in grid:
        est = estimate(kind, body, p, cfg)
        value = normalized_map(kind, body, p, est.value)
        power = 1.0 if math.isinf(p) else abs((n + p) / p)
        err = power * value * est.error_estimate / est.value if est.value > 0 else 0.0
        points.append((p, value, err, est.semantics == Semantics.EXACT))
    increasing = kind == ExtremalKind.INNER_MAX
    reports = []
    for (p0, m0, e0, exact0), (p1, m1, e1, exact1) in zip(points, points[1:], strict=False):
        report = BoundReport.check(
            f"{kind} normalized map p={p0:g} -> p={p1:g}",
            m1,
            lower=m0 if increasing else None,
            upper=None if increasing else m0,
            tolerance=cfg.tol("bound") * max(1.0, abs(m0)) + e0 + e1,
            severity=Severity.ERROR if exact0 and exact1 else Severity.WARNING,
            witnesses=[body.label],
            detail="nondecreasing" if increasing else "nonincreasing",
        )
        if not report.passed:
            logging.warning("%s: %.10g after %.10g (%s)", report.quantity, m1, m0, report.severity)
        reports.append(report)
    return reports


def perturb(body: ConvexBody, eps: float, seed: int = 0) -> tuple[ConvexBody, float]:
    """A centered body between (1 - e)K and (1 + e)K, and that effective e.

    Ellipsoid axes and polygon vertices are scaled by factors in [1 - eps, 1 + eps];
    smooth planar bodies get h (1 + eps cos(3θ + φ)). Re-centering widens e by |shift|/r(K).
    """
    if eps == 0:
        return body, 0.0
    rng = np.random.default_rng(seed)
    if isinstance(body, Ball | Ellipsoid):
        e = body.to_ellipsoid() if isinstance(body, Ball) else body
        w, v = np.linalg.eigh(e.shape)
        axes = w**-0.5 * (1.0 + eps * rng.uniform(-1.0, 1.0, body.dim))
        return Ellipsoid(e.center, (v / axes**2) @ v.T, body.label), eps
    if isinstance(body, HPolytope | VPolytope):
        pts = body.vertices * (1.0 + eps * rng.uniform(-1.0, 1.0, len(body.vertices)))[:, None]
        perturbed: ConvexBody = VPolytope(pts, body.label)
    elif isinstance(body, SupportBody2D):
        bump = np.cos(3.0 * body.theta + rng.uniform(0.0, 2.0 * math.pi))
        perturbed = SupportBody2D.from_values(body.h * (1.0 + eps * bump), recenter=False, label=body.label)
    else:
        raise UnsupportedBody(f"cannot perturb {type(body).__name__}")
    shift = float(np.linalg.norm(geometry.centroid(perturbed)))
    return geometry.recentered(perturbed), eps + shift / geometry.inradius(body)


def perturbation_smoke(
    body: ConvexBody, kind: ExtremalKind | str, p: float, eps: float, config: RunConfig | None = None
) -> BoundReport:
    """Ratio estimate(K')/estimate(K) against the envelope (1 ± e)^{n(n-p)/(n+p)}."""
    kind = ExtremalKind(kind)
    cfg = config or RunConfig()
    n = body.dim
    if not in_relevant_range(kind, n, p):
        raise POutOfRange(f"{kind}_p perturbation needs p in the relevant range, got {p}")
    base = estimate(kind, body, p, cfg)
    perturbed, eff = perturb(body, eps, cfg.seed)
    other = base if perturbed is body else estimate(kind, perturbed, p, cfg)
    power = n * affine_exponent(n, p)
    lo, hi = sorted((max(1.0 - eff, 1e-12) ** power, (1.0 + eff) ** power))
    exact = base.semantics == Semantics.EXACT and other.semantics == Semantics.EXACT
    return BoundReport.check(
        f"{kind}_{p:g} perturbation ratio",
        other.value / base.value,
        lower=lo,
        upper=hi,
        tolerance=cfg.tol("bound") + (base.error_estimate + other.error_estimate) / base.value,
        severity=Severity.ERROR if exact else Severity.WARNING,
        witnesses=[base.witness_label, other.witness_label],
        detail=f"eps={eps:g}, effective {eff:.4g}",
    )
