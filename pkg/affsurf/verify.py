"""Invariant suites run by ``affsurf verify``.

Each suite returns a SuiteResult: one BoundReport per checked inequality plus a
summary. Error-severity failures make the CLI exit with BOUND_VIOLATION.
"""

import logging
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from tqdm import tqdm

from . import curvature, extremal, geometry, quermass, thinshell
from .config import RunConfig
from .constants import ExtremalKind, Severity
from .corpus import generate_corpus, random_ellipse, random_polygon, standard_bodies
from .curvature import affine_exponent
from .ellipsoids import isotropic_position, loewner_containment, loewner_ellipsoid
from .geometry import AffineMap, ConvexBody, Ellipsoid, HPolytope, SupportBody2D, VPolytope
from .models import BoundReport

ISO_UPPER_P = (0.5, 1.0, 1.5)
ISO_LOWER_P = (-0.5, -1.0)
EQUIVARIANCE_P = (0.5, 1.0, 1.5)
FLOATING_RTOL = 0.02
CUBE_LK = 1.0 / math.sqrt(12.0)


@dataclass
class SuiteOptions:
    config: RunConfig = field(default_factory=RunConfig)
    bodies: list[ConvexBody] | None = None
    corpus: str = "random2d"
    count: int = 50
    trials: int = 20
    dims: tuple[int, ...] = (3, 4, 5)
    progress: bool = False


@dataclass
class SuiteResult:
    name: str
    reports: list[BoundReport] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.reports)

    @property
    def failed(self) -> list[BoundReport]:
        return [r for r in self.reports if r.failed]

    @property
    def warnings(self) -> list[BoundReport]:
        return [r for r in self.reports if not r.passed and r.severity == Severity.WARNING]

    def record(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "checked": len(self.reports),
            "passed": self.passed,
            "failed": len(self.failed),
            "warnings": len(self.warnings),
            "summary": self.summary,
            "rows": [r.model_dump() for r in self.reports],
        }


def _progress(items: Iterable[Any], opts: SuiteOptions, desc: str) -> Iterable[Any]:
    return tqdm(list(items), desc=desc, disable=not opts.progress, leave=False)


def _smooth(body: ConvexBody, grid: int) -> SupportBody2D:
    return body if isinstance(body, SupportBody2D) else geometry.to_support_body(body, grid)


# ----------------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------------


def iso_inequality(opts: SuiteOptions) -> SuiteResult:
    """as_p(K)/as_p(B) versus (|K|/|B|)^{(n-p)/(n+p)}, with equality on ellipses."""
    cfg = opts.config
    bodies = opts.bodies or generate_corpus(opts.corpus, opts.count, cfg.seed)
    result = SuiteResult("iso-inequality")
    for body in _progress(bodies, opts, "iso-inequality"):
        for p in ISO_UPPER_P + ISO_LOWER_P:
            report = curvature.affine_isoperimetric_check(body, p, cfg.tol("bound"))
            result.reports.append(report)
            if isinstance(body, Ellipsoid) and math.isfinite(report.value):
                rhs = report.upper if report.upper is not None else report.lower
                result.reports.append(
                    BoundReport.check(
                        f"as_{p:g} ellipse equality",
                        report.value,
                        lower=rhs,
                        upper=rhs,
                        tolerance=cfg.tol("bound"),
                        witnesses=[body.label],
                    )
                )
    result.summary = {"bodies": len(bodies), "p": list(ISO_UPPER_P + ISO_LOWER_P)}
    return result


def equivariance(opts: SuiteOptions) -> SuiteResult:
    """as_p(TK) = |det T|^{(n-p)/(n+p)} as_p(K) on the quadrature path, random T."""
    cfg = opts.config
    rng = np.random.default_rng(cfg.seed)
    result = SuiteResult("equivariance")
    worst = 0.0
    for trial in _progress(range(opts.trials), opts, "equivariance"):
        body = _smooth(random_ellipse(rng, f"ellipse-{trial:03d}"), cfg.quadrature_grid)
        phi = rng.uniform(0.0, math.pi)
        rot = np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])
        amap = AffineMap.linear(rot @ np.diag(np.exp(rng.uniform(-0.5, 0.5, 2))))
        image = geometry.apply_affine(amap, body)
        for p in EQUIVARIANCE_P:
            expected = amap.abs_det ** affine_exponent(2, p) * curvature.asp(body, p).value
            rel = abs(curvature.asp(image, p).value - expected) / expected
            worst = max(worst, rel)
            result.reports.append(
                BoundReport.check(
                    f"as_{p:g} affine weight", rel, upper=0.0, tolerance=cfg.tol("bound"), witnesses=[body.label]
                )
            )
    result.summary = {"trials": opts.trials, "max_relative_error": worst}
    return result


def floating(opts: SuiteOptions) -> SuiteResult:
    """Floating-body limit against quadrature for as_1."""
    cfg = opts.config
    named = standard_bodies()
    bodies = opts.bodies or [named["disk"], named["ellipse21"], named["trefoil"]]
    result = SuiteResult("floating")
    for body in _progress(bodies, opts, "floating"):
        reference = curvature.asp(_smooth(body, cfg.quadrature_grid), 1.0).value
        limit = curvature.asp1_floating_limit_2d(body)
        result.reports.append(
            BoundReport.check(
                "as_1 floating limit",
                limit.value,
                lower=reference,
                upper=reference,
                tolerance=FLOATING_RTOL * reference + limit.error_estimate,
                witnesses=[body.label],
                detail=f"quadrature {reference:.8g}",
            )
        )
    return result


def mvee(opts: SuiteOptions) -> SuiteResult:
    """Löwner of the square, then K ⊆ L ⊆ nK and the sqrt(n) factor for symmetric polygons."""
    cfg = opts.config
    rng = np.random.default_rng(cfg.seed)
    result = SuiteResult("mvee")
    square = loewner_ellipsoid(HPolytope.cube(2), cfg.tol("mvee")).ellipsoid
    deviation = float(np.abs(square.shape - 0.5 * np.eye(2)).max() + np.abs(square.center).max())
    result.reports.append(BoundReport.check("Löwner(square) = sqrt(2) disk", deviation, upper=0.0, tolerance=1e-6))
    for i in _progress(range(opts.count), opts, "mvee"):
        body = random_polygon(rng, f"polygon-{i:03d}")
        half = random_polygon(rng).vertices
        symmetric = VPolytope(np.vstack([half, -half]), f"symmetric-{i:03d}")
        for k, factor in ((body, 2.0), (symmetric, math.sqrt(2.0))):
            fit = loewner_ellipsoid(k, cfg.tol("mvee"))
            inside = float(np.asarray(geometry.contains(fit.ellipsoid, k.vertices, 1e-6)).all())
            result.reports.append(BoundReport.check("K inside L(K)", inside, lower=1.0, witnesses=[k.label]))
            result.reports.append(
                BoundReport.check(
                    "L(K) - c inside factor (K - c)",
                    loewner_containment(fit.ellipsoid, k),
                    upper=factor,
                    tolerance=cfg.tol("mvee") * factor,
                    witnesses=[k.label],
                )
            )
    return result


def isotropic(opts: SuiteOptions) -> SuiteResult:
    """L_K of the cube: exact moments for n = 2..6, hit-and-run for the requested dims."""
    cfg = opts.config
    result = SuiteResult("isotropic")
    for n in range(2, 7):
        cert = isotropic_position(HPolytope.cube(n, 0.5), exact=True)
        result.reports.append(
            BoundReport.check(f"L_K cube n={n} (exact)", cert.L_K, lower=CUBE_LK, upper=CUBE_LK, tolerance=1e-6)
        )
    for n in _progress(opts.dims, opts, "isotropic"):
        cert = isotropic_position(
            HPolytope.cube(n, 0.5), cfg.samples, cfg.seed, exact=False, burn_in=cfg.burn_in, chains=cfg.chains
        )
        result.reports.append(
            BoundReport.check(
                f"L_K cube n={n} (sampled)",
                cert.L_K,
                lower=CUBE_LK,
                upper=CUBE_LK,
                tolerance=3.0 * cert.L_K_error,
                severity=Severity.WARNING,
            )
        )
    return result


def thin_shell(opts: SuiteOptions) -> SuiteResult:
    """Shell partition and S_O construction for the isotropic cube and ball."""
    cfg = opts.config
    result = SuiteResult("thinshell")
    rows = []
    for n in _progress(opts.dims, opts, "thinshell"):
        for body in (HPolytope.cube(n, label=f"cube{n}"), geometry.Ball.centered(1.0, n, f"ball{n}")):
            image, _ = thinshell.isotropic_image(body, cfg.samples, cfg.seed)
            construction = thinshell.thin_shell_lower_bound(
                image, 1.0, cfg.c_thin, cfg.samples, cfg.seed, cfg.samples, cfg.burn_in, cfg.chains
            )
            result.reports += construction.bounds
            rows.append({"body": body.label, "R": construction.partition.R, "value": construction.value.value})
    result.summary = {"constructions": rows}
    return result


def extremal_sandwich(opts: SuiteOptions) -> SuiteResult:
    """IS_1, os_-1 and OS_inf of the square with their sandwiches; monotonicity on the disk."""
    cfg = opts.config
    named = standard_bodies()
    square = named["square"]
    result = SuiteResult("extremal")
    values = {}
    for kind, p in ((ExtremalKind.INNER_MAX, 1.0), (ExtremalKind.OUTER_MIN, -1.0), (ExtremalKind.OUTER_MAX, math.inf)):
        est = extremal.estimate(kind, square, p, cfg)
        result.reports += est.bounds
        values[f"{kind}_{p:g}"] = est.value
    result.reports += extremal.verify_monotonicity(named["disk"], ExtremalKind.INNER_MAX, cfg.p_grid, cfg)
    result.summary = {"square": values}
    return result


def degenerate(opts: SuiteOptions) -> SuiteResult:
    """Closed-form extremal values and the divergent/vanishing witness sequences."""
    named = standard_bodies()
    result = SuiteResult("degenerate")
    for body in (named["square"], named["disk"]):
        n = body.dim
        expected = {
            (ExtremalKind.INNER_MAX, 0.0): n * geometry.volume(body),
            (ExtremalKind.INNER_MAX, float(n)): n * geometry.unit_ball_volume(n),
            (ExtremalKind.OUTER_MAX, float(n)): n * geometry.unit_ball_volume(n),
            (ExtremalKind.OUTER_MIN, 0.0): n * geometry.volume(body),
            (ExtremalKind.INNER_MIN, 1.0): 0.0,
        }
        for (kind, p), value in expected.items():
            est = extremal.closed_form_extremal(body, kind, p)
            got = math.nan if est is None else est.value
            result.reports.append(
                BoundReport.check(
                    f"{kind}_{p:g} closed form", got, lower=value, upper=value, tolerance=1e-12, witnesses=[body.label]
                )
            )
        for kind, p in ((ExtremalKind.INNER_MAX, 3.0), (ExtremalKind.OUTER_MAX, 1.0), (ExtremalKind.OUTER_MIN, 1.0)):
            result.reports += extremal.range_probe(body, kind, p).bounds
    return result


def steiner(opts: SuiteOptions) -> SuiteResult:
    """Steiner fits: W_0 = |K|, W_n = |B|, residual within tolerance."""
    cfg = opts.config
    named = standard_bodies()
    bodies = opts.bodies or [named["square"], named["disk"], named["cube3"], named["ball3"]]
    result = SuiteResult("steiner")
    fits = {}
    for body in bodies:
        fit = quermass.steiner_fit(body)
        n = body.dim
        vol = geometry.volume(body)
        tol = cfg.tol("steiner") * max(1.0, vol)
        result.reports += [
            BoundReport.check("W_0 = |K|", fit.W[0], lower=vol, upper=vol, tolerance=tol, witnesses=[body.label]),
            BoundReport.check(
                "W_n = |B|",
                fit.W[n],
                lower=geometry.unit_ball_volume(n),
                upper=geometry.unit_ball_volume(n),
                tolerance=tol,
                witnesses=[body.label],
            ),
            BoundReport.check(
                "Steiner residual",
                fit.residual,
                upper=0.0,
                tolerance=cfg.tol("steiner"),
                severity=Severity.ERROR if fit.exact else Severity.WARNING,
                witnesses=[body.label],
            ),
        ]
        fits[body.label] = fit.W
    result.summary = {"W": fits}
    return result


def quermass_suite(opts: SuiteOptions) -> SuiteResult:
    """Non-integer scaling degree of IS_1 and its measured value on the square."""
    result = SuiteResult("quermass")
    result.reports += quermass.non_quermass_report(list(quermass.NON_QUERMASS_DIMS))
    degree = quermass.homogeneity_degree("IS_1", standard_bodies()["square"], [0.5, 1.0, 2.0, 4.0], opts.config)
    result.reports.append(
        BoundReport.check("IS_1 homogeneity degree n=2", degree, lower=2.0 / 3.0, upper=2.0 / 3.0, tolerance=1e-6)
    )
    result.summary = {"IS_1_degree": degree}
    return result


SUITES: dict[str, Callable[[SuiteOptions], SuiteResult]] = {
    "iso-inequality": iso_inequality,
    "equivariance": equivariance,
    "floating": floating,
    "mvee": mvee,
    "isotropic": isotropic,
    "thinshell": thin_shell,
    "extremal": extremal_sandwich,
    "degenerate": degenerate,
    "steiner": steiner,
    "quermass": quermass_suite,
}


def run_suite(name: str, opts: SuiteOptions | None = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"Unknown suite: {name} (known: {', '.join(SUITES)})")
    result = SUITES[name](opts or SuiteOptions())
    logging.info("suite %s: %d/%d passed, %d failed", name, result.passed, len(result.reports), len(result.failed))
    for report in result.warnings:
        logging.warning("%s: %.10g outside [%s, %s]", report.quantity, report.value, report.lower, report.upper)
    return result
