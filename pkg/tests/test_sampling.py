"""Tests for hit-and-run sampling."""

import numpy as np
import pytest

from affsurf import geometry
from affsurf.corpus import standard_body
from affsurf.errors import OriginNotInterior
from affsurf.sampling import batch_means, chain_generators, hit_and_run


def test_hit_and_run_stays_inside() -> None:
    """Test that samples lie in the body and are roughly centered."""
    print("Testing hit-and-run containment...")

    for name in ("square", "ellipse21", "cube3"):
        body = standard_body(name)
        pts = hit_and_run(body, 2000, burn_in=10, seed=5)
        assert pts.shape == (2000, body.dim)
        assert np.all(np.asarray(geometry.contains(body, pts, 1e-9)))
        assert np.allclose(pts.mean(axis=0), 0.0, atol=0.15)
        print(f"✓ {name}: mean {pts.mean(axis=0)}")
    print("✓ Hit-and-run containment test passed")


def test_hit_and_run_is_reproducible() -> None:
    """Test that a fixed seed gives identical samples."""
    print("Testing hit-and-run reproducibility...")

    square = standard_body("square")
    first = hit_and_run(square, 500, burn_in=5, seed=42)
    second = hit_and_run(square, 500, burn_in=5, seed=42)
    other = hit_and_run(square, 500, burn_in=5, seed=43)
    assert np.array_equal(first, second)
    assert not np.array_equal(first, other)

    # chain streams do not depend on how many chains are spawned
    assert chain_generators(7, 2)[1].random() == chain_generators(7, 5)[1].random()
    print("✓ Hit-and-run reproducibility test passed")


def test_hit_and_run_uniformity() -> None:
    """Test second moments of the square against 1/3 Id."""
    print("Testing hit-and-run uniformity...")

    pts = hit_and_run(standard_body("square"), 8000, burn_in=20, seed=1)
    cov = np.cov(pts, rowvar=False)
    assert np.allclose(cov, np.eye(2) / 3.0, atol=0.03)
    print("✓ Hit-and-run uniformity test passed")


def test_hit_and_run_start_point() -> None:
    """Test that an exterior starting point is refused."""
    print("Testing hit-and-run start point...")

    with pytest.raises(OriginNotInterior):
        hit_and_run(standard_body("square"), 10, start=np.array([2.0, 0.0]))
    print("✓ Hit-and-run start point test passed")


def test_batch_means() -> None:
    """Test batch-means errors on constant and short sequences."""
    print("Testing batch means...")

    mean, err = batch_means(np.full(400, 0.25))
    assert mean == pytest.approx(0.25)
    assert err == pytest.approx(0.0)

    mean, err = batch_means(np.arange(5.0))
    assert mean == pytest.approx(2.0)
    assert err == float("inf")
    print("✓ Batch means test passed")


if __name__ == "__main__":
    test_hit_and_run_stays_inside()
    test_hit_and_run_is_reproducible()
    test_hit_and_run_uniformity()
    test_hit_and_run_start_point()
    test_batch_means()
    print("All sampling tests passed!")
