"""Named test bodies and seeded random corpora."""

import logging
import math
from collections.abc import Callable
from pathlib import Path

import numpy as np

from . import planar
from .codecs import dump_body
from .constants import DEFAULT_GRID
from .errors import InvalidBody
from .geometry import Ball, ConvexBody, Ellipsoid, HPolytope, SupportBody2D, VPolytope

POLYGON_POINTS = (5, 30)
MAX_AXIS_RATIO = 10.0
HARMONICS = range(2, 6)
CURVATURE_MARGIN = 0.5  # h + h'' >= 1 - CURVATURE_MARGIN for generated support functions


def standard_bodies() -> dict[str, ConvexBody]:
    """Reference bodies with known closed-form values, all centered at the origin."""
    theta = 2.0 * math.pi * np.arange(DEFAULT_GRID) / DEFAULT_GRID
    return {
        "square": HPolytope.cube(2, 1.0, "square"),
        "disk": Ball.centered(1.0, 2, "disk"),
        "ellipse21": Ellipsoid.axis_aligned([2.0, 1.0], label="ellipse21"),
        "triangle": VPolytope(planar.regular_polygon(3), "triangle"),
        "hexagon": HPolytope.regular(6, label="hexagon"),
        "trefoil": SupportBody2D.from_values(1.0 + 0.05 * np.cos(3.0 * theta), recenter=False, label="trefoil"),
        "cube3": HPolytope.cube(3, 1.0, "cube3"),
        "ball3": Ball.centered(1.0, 3, "ball3"),
        "ellipsoid321": Ellipsoid.axis_aligned([3.0, 2.0, 1.0], label="ellipsoid321"),
    }


def standard_body(name: str) -> ConvexBody:
    bodies = standard_bodies()
    if name not in bodies:
        raise InvalidBody(f"Unknown body name: {name} (known: {', '.join(bodies)})")
    return bodies[name]


def random_polygon(rng: np.random.Generator, label: str = "") -> VPolytope:
    """Convex hull of k uniform points in the unit disk, k uniform in [5, 30], re-centered."""
    k = int(rng.integers(POLYGON_POINTS[0], POLYGON_POINTS[1] + 1))
    radius = np.sqrt(rng.random(k))
    angle = 2.0 * math.pi * rng.random(k)
    return VPolytope.from_points(radius[:, None] * planar.unit(angle), label=label)


def random_ellipse(rng: np.random.Generator, label: str = "") -> Ellipsoid:
    """Centered ellipse, unit major axis, axis ratio log-uniform in [1, 10], random rotation."""
    ratio = math.exp(rng.uniform(0.0, math.log(MAX_AXIS_RATIO)))
    phi = rng.uniform(0.0, math.pi)
    rot = np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])
    shape = rot @ np.diag([1.0, ratio**2]) @ rot.T
    return Ellipsoid(np.zeros(2), shape, label)


def random_support(rng: np.random.Generator, label: str = "", m: int = DEFAULT_GRID) -> SupportBody2D:
    """h = 1 + low-frequency harmonics, scaled so that h + h'' stays above 1 - CURVATURE_MARGIN."""
    theta = 2.0 * math.pi * np.arange(m) / m
    coeffs = rng.normal(size=(len(HARMONICS), 2))
    weight = sum((k * k - 1) * float(np.abs(c).sum()) for k, c in zip(HARMONICS, coeffs, strict=True))
    coeffs *= CURVATURE_MARGIN / weight * rng.uniform(0.2, 1.0)
    h = 1.0 + sum(a * np.cos(k * theta) + b * np.sin(k * theta) for k, (a, b) in zip(HARMONICS, coeffs, strict=True))
    return SupportBody2D.from_values(h, label=label)


GENERATORS: dict[str, Callable[[np.random.Generator, str], ConvexBody]] = {
    "polygons": random_polygon,
    "ellipses": random_ellipse,
    "smooth": random_support,
}


def generate_corpus(name: str, count: int, seed: int = 0) -> list[ConvexBody]:
    """``count`` bodies from one family, or cycling through all of them for ``random2d``."""
    if name == "random2d":
        families = list(GENERATORS)
    elif name in GENERATORS:
        families = [name]
    else:
        raise InvalidBody(f"Unknown corpus: {name} (known: random2d, {', '.join(GENERATORS)})")
    rng = np.random.default_rng(seed)
    bodies = [GENERATORS[families[i % len(families)]](rng, f"{name}-{i:03d}") for i in range(count)]
    logging.debug("generated %d bodies of corpus %s (seed %d)", count, name, seed)
    return bodies


def write_corpus(bodies: list[ConvexBody], directory: str | Path) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for body in bodies:
        path = out / f"{body.label}.json"
        dump_body(body, path)
        paths.append(path)
    return paths
