"""Hit-and-run sampling from convex bodies with independent seeded chains."""

import logging
import math
from collections.abc import Callable

import numpy as np

from . import geometry
from .constants import BURN_IN, DEFAULT_SEED
from .errors import OriginNotInterior
from .geometry import ConvexBody

BLOCK = 512


def chain_generators(seed: int, chains: int) -> list[np.random.Generator]:
    """One generator per chain; streams do not depend on how many chains run."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(chains)]


def _check_interior(body: ConvexBody, point: np.ndarray) -> None:
    eye = np.eye(body.dim)
    lo, hi = geometry.chord(body, np.repeat(point[None, :], body.dim, axis=0), eye)
    if not (np.all(lo < 0.0) and np.all(hi > 0.0)):
        raise OriginNotInterior(f"starting point {point} is not interior to the body")


def hit_and_run(
    body: ConvexBody,
    count: int,
    burn_in: int = BURN_IN,
    seed: int = DEFAULT_SEED,
    chains: int = 8,
    start: np.ndarray | None = None,
) -> np.ndarray:
    """Approximately uniform points, each recorded after ``burn_in`` chord steps.

    Samples are returned chain by chain, in recording order within each chain.
    """
    n = body.dim
    x0 = np.zeros(n) if start is None else np.asarray(start, dtype=float)
    _check_interior(body, x0)
    per_chain = math.ceil(count / chains)
    gens = chain_generators(seed, chains)
    x = np.repeat(x0[None, :], chains, axis=0)
    stride = max(burn_in, 1)
    out = np.empty((chains, per_chain, n))
    total = stride * per_chain
    recorded = 0
    for block_start in range(0, total, BLOCK):
        size = min(BLOCK, total - block_start)
        dirs = np.stack([g.standard_normal((size, n)) for g in gens], axis=1)
        unif = np.stack([g.random(size) for g in gens], axis=1)
        for j in range(size):
            d = dirs[j]
            lo, hi = geometry.chord(body, x, d)
            x = x + (lo + (hi - lo) * unif[j])[:, None] * d
            if (block_start + j + 1) % stride == 0:
                out[:, recorded] = x
                recorded += 1
    logging.debug("hit-and-run: %d chains x %d samples, %d steps each (n=%d)", chains, per_chain, total, n)
    return out.reshape(chains * per_chain, n)[:count]


def batch_means(values: np.ndarray, batches: int = 20) -> tuple[float, float]:
    """Mean and batch-means standard error of a correlated sequence."""
    v = np.asarray(values, dtype=float)
    size = len(v) // batches
    if size == 0:
        return float(v.mean()), math.inf
    means = v[: size * batches].reshape(batches, size).mean(axis=1)
    return float(v.mean()), float(means.std(ddof=1) / math.sqrt(batches))


def batch_statistic(
    samples: np.ndarray, statistic: Callable[[np.ndarray], float], batches: int = 20
) -> tuple[float, float]:
    """Statistic on all samples and its standard error from the spread over batches."""
    size = len(samples) // batches
    values = np.array([statistic(samples[i * size : (i + 1) * size]) for i in range(batches)])
    return float(statistic(samples)), float(values.std(ddof=1) / math.sqrt(batches))
