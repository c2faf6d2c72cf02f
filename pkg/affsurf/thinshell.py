"""Thin-shell verification and the radial shell partition of an isotropic body.

Given an isotropic body K (volume 1, centroid 0, covariance L_K^2 Id), most of the mass
lies in the shell |‖x‖ - L_K √n| < c L_K n^{1/3}. The shell is cut into the annuli

    L_i = K ∩ {2^{i/n} ℓ < ‖x‖ <= 2^{(i+1)/n} ℓ},  ℓ = L_K (√n - c n^{1/3}),

the heaviest annulus fixes a radius R, and the cone S_O over the directions where
ρ_K > R carries a lower bound for as_p(K ∩ R B_2^n).
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from . import geometry, sampling
from .constants import BURN_IN, C_THIN, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TOLERANCES, AspMethod
from .ellipsoids import IsotropicCertificate, isotropic_position
from .errors import ConstructionRefused, NotIsotropic, OriginNotInterior, POutOfRange
from .geometry import ConvexBody
from .models import AspValue, BoundReport

C_GRID_STEP = 0.025


# ----------------------------------------------------------------------------
# Isotropic position
# ----------------------------------------------------------------------------


def isotropic_image(
    body: ConvexBody, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> tuple[ConvexBody, IsotropicCertificate]:
    """The body mapped to isotropic position, with the certificate of the map."""
    cert = isotropic_position(body, samples, seed)
    return geometry.apply_affine(cert.map, body), cert


def require_isotropic(
    body: ConvexBody,
    tol: float = DEFAULT_TOLERANCES["isotropy"],
    points: np.ndarray | None = None,
) -> float:
    """L_K of an isotropic body; NotIsotropic otherwise.

    Exact moments are checked against ``tol``. Without them the moments of ``points``
    (hit-and-run samples) are used with the tolerance widened to 5/√samples.
    """
    n = body.dim
    vol = geometry.volume(body)
    cov = geometry.second_moment(body)
    if cov is not None:
        g = geometry.centroid(body)
        slack = tol
    else:
        pts = sampling.hit_and_run(body, DEFAULT_SAMPLES, BURN_IN, DEFAULT_SEED) if points is None else points
        g = pts.mean(axis=0)
        cov = np.cov(pts, rowvar=False)
        slack = max(tol, 5.0 / math.sqrt(len(pts)))
    lk = math.sqrt(float(np.trace(cov)) / n)
    scale = lk * lk
    if abs(vol - 1.0) > max(tol, 1e-9):
        raise NotIsotropic(f"volume {vol:.9g} is not 1")
    if float(np.linalg.norm(g)) > slack * lk * math.sqrt(n):
        raise NotIsotropic(f"centroid {g} is not at the origin")
    if float(np.abs(cov - scale * np.eye(n)).max()) > slack * scale:
        raise NotIsotropic(f"covariance is not a multiple of the identity: {np.diag(cov)}")
    return lk


# ----------------------------------------------------------------------------
# Thin shell
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ThinShellMass:
    """Empirical mass of the thin shell and the smallest width constant reaching 1/2."""

    L_K: float
    c_thin: float
    mass: float
    error: float
    c_min: float  # smallest c on the grid with mass >= 1/2
    samples: int
    seed: int

    def record(self) -> dict[str, Any]:
        return {
            "L_K": self.L_K,
            "c_thin": self.c_thin,
            "mass": self.mass,
            "error": self.error,
            "c_min": self.c_min,
            "samples": self.samples,
            "seed": self.seed,
        }


def shell_deviation(points: np.ndarray, lk: float) -> np.ndarray:
    """| ‖x‖ - L_K √n | / (L_K n^{1/3}) per point."""
    n = points.shape[1]
    radii = np.linalg.norm(points, axis=1)
    return np.abs(radii - lk * math.sqrt(n)) / (lk * n ** (1.0 / 3.0))


def minimal_width(deviation: np.ndarray, step: float = C_GRID_STEP) -> float:
    """Smallest grid value c with at least half of the points strictly inside the shell."""
    top = math.ceil(float(deviation.max()) / step) + 2
    grid = step * np.arange(1, top + 1)
    fractions = (deviation[None, :] < grid[:, None]).mean(axis=1)
    return float(grid[np.argmax(fractions >= 0.5)])


def thin_shell_check(
    body: ConvexBody,
    c_thin: float = C_THIN,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    burn_in: int = BURN_IN,
    chains: int = 8,
    tol: float = DEFAULT_TOLERANCES["isotropy"],
) -> ThinShellMass:
    """Mass of {x : |‖x‖ - L_K √n| < c L_K n^{1/3}} for an isotropic body, by hit-and-run."""
    pts = sampling.hit_and_run(body, samples, burn_in, seed, chains)
    lk = require_isotropic(body, tol, pts)
    dev = shell_deviation(pts, lk)
    mass, err = sampling.batch_means((dev < c_thin).astype(float))
    c_min = minimal_width(dev)
    logging.debug("thin shell c=%g: mass %.4f +- %.4f, c_min %.3f (n=%d)", c_thin, mass, err, c_min, body.dim)
    return ThinShellMass(lk, c_thin, mass, err, c_min, samples, seed)


# ----------------------------------------------------------------------------
# Shell partition
# ----------------------------------------------------------------------------


class Shell(NamedTuple):
    index: int
    inner: float
    outer: float
    mass: float


def shell_count(n: int, c_thin: float) -> int:
    """k_n = ⌊n log_2((√n + c n^{1/3}) / (√n - c n^{1/3}))⌋."""
    check_width(n, c_thin)
    root, cube = math.sqrt(n), n ** (1.0 / 3.0)
    return math.floor(n * math.log2((root + c_thin * cube) / (root - c_thin * cube)))


def check_width(n: int, c_thin: float) -> None:
    if c_thin >= n ** (1.0 / 6.0):
        raise ConstructionRefused(f"the shell construction needs c < n^(1/6) = {n ** (1.0 / 6.0):.4f}, got {c_thin}")


@dataclass(frozen=True)
class ShellPartition:
    """Annuli L_0..L_{k_n} of an isotropic body and the radius R of the heaviest one."""

    dim: int
    L_K: float
    c_thin: float
    k_n: int
    shells: list[Shell]
    chosen_index: int
    R: float
    thin_mass: float
    shell_mass_lower: float  # thin-shell mass / (k_n + 1)
    samples: int
    seed: int
    members: np.ndarray = field(default_factory=lambda: np.empty((0, 0)), repr=False)
    mass_error: float = 0.0

    @property
    def base_radius(self) -> float:
        """ℓ = L_K (√n - c n^{1/3})."""
        return self.shells[0].inner

    @property
    def chosen(self) -> Shell:
        return self.shells[self.chosen_index]

    def bounds(self, tolerance: float = 0.0) -> list[BoundReport]:
        n, lk = self.dim, self.L_K
        return [
            BoundReport.check(
                "|L_i0| >= thin mass / (k_n + 1)", self.chosen.mass, lower=self.shell_mass_lower, tolerance=tolerance
            ),
            BoundReport.check("R <= 2 sqrt(n) L_K", self.R, upper=2.0 * math.sqrt(n) * lk, tolerance=tolerance),
            BoundReport.check(
                "R in thin shell",
                self.R,
                lower=lk * (math.sqrt(n) - self.c_thin * n ** (1.0 / 3.0)),
                upper=lk * (math.sqrt(n) + self.c_thin * n ** (1.0 / 3.0)),
                tolerance=tolerance,
            ),
        ]

    def record(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "L_K": self.L_K,
            "c_thin": self.c_thin,
            "k_n": self.k_n,
            "shells": [s._asdict() for s in self.shells],
            "chosen_index": self.chosen_index,
            "R": self.R,
            "thin_mass": self.thin_mass,
            "shell_mass_lower": self.shell_mass_lower,
            "mass_error": self.mass_error,
            "samples": self.samples,
            "seed": self.seed,
        }


def build_shell_partition(
    body: ConvexBody,
    c_thin: float = C_THIN,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    burn_in: int = BURN_IN,
    chains: int = 8,
    tol: float = DEFAULT_TOLERANCES["isotropy"],
) -> ShellPartition:
    """Shell masses from one sample set; the first heaviest shell gives R = 2^{i0/n} ℓ."""
    n = body.dim
    k_n = shell_count(n, c_thin)
    pts = sampling.hit_and_run(body, samples, burn_in, seed, chains)
    lk = require_isotropic(body, tol, pts)
    ell = lk * (math.sqrt(n) - c_thin * n ** (1.0 / 3.0))
    edges = ell * 2.0 ** (np.arange(k_n + 2) / n)
    radii = np.linalg.norm(pts, axis=1)
    # shell i holds edges[i] < r <= edges[i+1]
    which = np.searchsorted(edges, radii, side="left") - 1
    masses = np.array([(which == i).mean() for i in range(k_n + 1)])
    thin = float((shell_deviation(pts, lk) < c_thin).mean())
    i0 = int(np.argmax(masses))
    shells = [Shell(i, float(edges[i]), float(edges[i + 1]), float(masses[i])) for i in range(k_n + 1)]
    _, err = sampling.batch_means((which == i0).astype(float))
    logging.debug(
        "shell partition n=%d c=%g: k_n=%d, i0=%d, R=%.6f, |L_i0|=%.4f, thin mass %.4f",
        n,
        c_thin,
        k_n,
        i0,
        edges[i0],
        masses[i0],
        thin,
    )
    return ShellPartition(
        dim=n,
        L_K=lk,
        c_thin=c_thin,
        k_n=k_n,
        shells=shells,
        chosen_index=i0,
        R=float(edges[i0]),
        thin_mass=thin,
        shell_mass_lower=thin / (k_n + 1),
        samples=samples,
        seed=seed,
        members=pts[which == i0],
        mass_error=err,
    )


# ----------------------------------------------------------------------------
# The cone S_O
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SOSet:
    """S_O = {rθ : θ in O, 0 <= r <= R} with O = {θ : ρ_K(θ) > R}."""

    dim: int
    R: float
    sigma_O: float
    sigma_error: float
    S_O_volume: float
    S_O_error: float
    directions: int
    seed: int
    indicator: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=bool), repr=False)
    inclusion_checked: int = 0
    inclusion_violations: int = 0
    bounds: list[BoundReport] = field(default_factory=list)

    @property
    def mu(self) -> float:
        """Boundary measure μ(RO) = n |S_O| / R."""
        return self.dim * self.S_O_volume / self.R

    def record(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "R": self.R,
            "sigma_O": self.sigma_O,
            "sigma_error": self.sigma_error,
            "S_O_volume": self.S_O_volume,
            "S_O_error": self.S_O_error,
            "mu": self.mu,
            "directions": self.directions,
            "seed": self.seed,
            "inclusion_checked": self.inclusion_checked,
            "inclusion_violations": self.inclusion_violations,
            "bounds": [b.model_dump() for b in self.bounds],
        }


def inclusion_violations(body: ConvexBody, points: np.ndarray, radius: float) -> int:
    """Points x with 2^{-1/n} x outside S_O: either ρ_K(x/‖x‖) <= R or ‖2^{-1/n} x‖ > R."""
    if len(points) == 0:
        return 0
    n = points.shape[1]
    norms = np.linalg.norm(points, axis=1)
    dirs = points / norms[:, None]
    passes = np.asarray(body.radial(dirs)) > radius
    inside = 2.0 ** (-1.0 / n) * norms <= radius * (1.0 + 1e-12)
    return int(np.count_nonzero(~(passes & inside)))


def build_SO(
    body: ConvexBody,
    R: float,
    directions: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    partition: ShellPartition | None = None,
    tolerance: float = DEFAULT_TOLERANCES["bound"],
) -> SOSet:
    """σ(O) from uniform directions and |S_O| = σ(O) R^n |B_2^n|.

    With a partition, the sampled members of L_{i0} are checked against the inclusion
    L_{i0} ⊆ 2^{1/n} S_O and the volume bound |S_O| >= |L_{i0}|/2 is reported.
    """
    n = body.dim
    if float(geometry.inradius(body)) <= 0.0:
        raise OriginNotInterior("origin is not interior to the body")
    dirs = geometry.sphere_directions(n, directions, np.random.default_rng(seed))
    hits = np.asarray(body.radial(dirs)) > R
    sigma = float(hits.mean())
    sigma_err = math.sqrt(sigma * (1.0 - sigma) / directions)
    ball = R**n * geometry.unit_ball_volume(n)
    volume, volume_err = sigma * ball, sigma_err * ball
    checked, violations = 0, 0
    bounds: list[BoundReport] = []
    if partition is not None:
        checked = len(partition.members)
        violations = inclusion_violations(body, partition.members, R)
        slack = tolerance + 3.0 * (volume_err + 0.5 * partition.mass_error)
        bounds.append(
            BoundReport.check("|S_O| >= |L_i0| / 2", volume, lower=0.5 * partition.chosen.mass, tolerance=slack)
        )
        bounds.append(BoundReport.check("L_i0 inclusion violations", float(violations), upper=0.0))
    logging.debug("S_O at R=%.6f: sigma %.4f +- %.4f, |S_O| %.6g", R, sigma, sigma_err, volume)
    return SOSet(n, R, sigma, sigma_err, volume, volume_err, directions, seed, hits, checked, violations, bounds)


# ----------------------------------------------------------------------------
# Truncation lower bound
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ThinShellConstruction:
    """Partition, cone and the as_p lower bound they certify for K ∩ R B_2^n."""

    partition: ShellPartition
    so_set: SOSet
    value: AspValue

    @property
    def bounds(self) -> list[BoundReport]:
        return self.partition.bounds() + self.so_set.bounds

    def record(self) -> dict[str, Any]:
        return {
            "partition": self.partition.record(),
            "S_O": self.so_set.record(),
            "value": self.value.model_dump(),
            "bounds": [b.model_dump() for b in self.bounds],
        }


def thin_shell_lower_bound(
    body: ConvexBody,
    p: float,
    c_thin: float = C_THIN,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    directions: int = DEFAULT_SAMPLES,
    burn_in: int = BURN_IN,
    chains: int = 8,
) -> ThinShellConstruction:
    """(1/R)^{2np/(n+p)} n |S_O|, the spherical-part value of as_p(K ∩ R B_2^n)."""
    n = body.dim
    if not 0.0 <= p <= n:
        raise POutOfRange(f"the truncation bound needs p in [0, {n}], got {p}")
    partition = build_shell_partition(body, c_thin, samples, seed, burn_in, chains)
    so = build_SO(body, partition.R, directions, seed + 1, partition)
    factor = (1.0 / partition.R) ** (2.0 * n * p / (n + p)) * n
    value = AspValue.exact(
        p,
        factor * so.S_O_volume,
        AspMethod.SPHERICAL_CAP_LOWER_BOUND,
        error_estimate=factor * so.S_O_error,
        body_id=body.label,
        seed=seed,
    )
    return ThinShellConstruction(partition, so, value)
