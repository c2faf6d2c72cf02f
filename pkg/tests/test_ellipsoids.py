"""Tests for John and Löwner ellipsoids, isotropic position and the Santaló point."""

import math

import numpy as np
import pytest

from affsurf import geometry
from affsurf.corpus import standard_body
from affsurf.ellipsoids import (
    isotropic_position,
    john_ellipsoid,
    loewner_ellipsoid,
    santalo_point,
    volume_product,
)
from affsurf.errors import UnsupportedBody
from affsurf.geometry import Ball, HPolytope, VPolytope

CUBE_LK = 1.0 / math.sqrt(12.0)


def test_loewner_ellipsoid() -> None:
    """Test minimum-volume enclosing ellipsoids and their containment factors."""
    print("Testing Löwner ellipsoids...")

    square = loewner_ellipsoid(standard_body("square"), tol=1e-9)
    assert np.allclose(square.ellipsoid.shape, 0.5 * np.eye(2), atol=1e-6)
    assert np.allclose(square.ellipsoid.center, 0.0, atol=1e-8)
    assert square.containment_ratio <= math.sqrt(2.0) + 1e-6
    assert square.kind == "loewner"

    triangle = loewner_ellipsoid(standard_body("triangle"), tol=1e-9)
    assert np.allclose(triangle.ellipsoid.shape, np.eye(2), atol=1e-6)
    assert triangle.containment_ratio <= 2.0 + 1e-6

    vertices = standard_body("hexagon").vertices
    fit = loewner_ellipsoid(standard_body("hexagon"))
    assert np.all(np.asarray(geometry.contains(fit.ellipsoid, vertices, 1e-9)))

    disk = loewner_ellipsoid(standard_body("disk"))
    assert disk.containment_ratio == 1.0
    assert disk.ellipsoid.volume() == pytest.approx(math.pi)

    record = square.record()
    assert record["kind"] == "loewner"
    assert record["volume"] == pytest.approx(2.0 * math.pi, rel=1e-6)
    print("✓ Löwner ellipsoids test passed")


def test_john_ellipsoid() -> None:
    """Test maximum-volume inscribed ellipsoids for symmetric and non-symmetric polygons."""
    print("Testing John ellipsoids...")

    square = john_ellipsoid(standard_body("square"))
    assert np.allclose(square.ellipsoid.shape, np.eye(2), atol=1e-6)
    assert square.containment_ratio == pytest.approx(math.sqrt(2.0), rel=1e-6)

    # inscribed circle of the equilateral triangle with circumradius 1
    triangle = john_ellipsoid(standard_body("triangle"))
    assert np.allclose(triangle.ellipsoid.center, 0.0, atol=1e-4)
    assert np.allclose(triangle.ellipsoid.semi_axes(), 0.5, atol=1e-4)
    assert triangle.containment_ratio <= 2.0 + 1e-3

    with pytest.raises(UnsupportedBody):
        john_ellipsoid(Ball.centered(1.0, 2))  # type: ignore[arg-type]
    print("✓ John ellipsoids test passed")


def test_isotropic_position_exact() -> None:
    """Test exact isotropic maps from closed-form second moments."""
    print("Testing exact isotropic position...")

    for n in (2, 3, 4):
        cert = isotropic_position(HPolytope.cube(n, 0.5), exact=True)
        assert cert.L_K == pytest.approx(CUBE_LK, rel=1e-10)
        assert cert.covariance_residual < 1e-10
        assert cert.exact

    ellipse = isotropic_position(standard_body("ellipse21"))
    assert ellipse.L_K == pytest.approx(1.0 / (2.0 * math.sqrt(math.pi)), rel=1e-10)

    triangle = geometry.translate(standard_body("triangle"), np.array([0.3, -0.2]))
    cert = isotropic_position(triangle)
    image = geometry.apply_affine(cert.map, triangle)
    assert geometry.volume(image) == pytest.approx(1.0, rel=1e-10)
    assert np.allclose(geometry.centroid(image), 0.0, atol=1e-10)
    cov = geometry.second_moment(image)
    assert cov is not None
    assert np.allclose(cov, cert.L_K**2 * np.eye(2), atol=1e-10)

    assert set(cert.record()) >= {"matrix", "translation", "L_K", "exact"}
    print("✓ Exact isotropic position test passed")


@pytest.mark.slow
def test_isotropic_position_sampled() -> None:
    """Test the hit-and-run isotropic constant of the 3-cube."""
    print("Testing sampled isotropic position...")

    cert = isotropic_position(HPolytope.cube(3, 0.5), samples=4000, seed=11, exact=False)
    assert not cert.exact
    assert cert.seed == 11
    assert abs(cert.L_K - CUBE_LK) <= 5.0 * cert.L_K_error + 5e-3
    print(f"✓ L_K = {cert.L_K:.5f} +- {cert.L_K_error:.5f}")

    with pytest.raises(UnsupportedBody):
        isotropic_position(geometry.intersect_ball(HPolytope.cube(3), 1.2), exact=True)
    print("✓ Sampled isotropic position test passed")


def test_santalo_point() -> None:
    """Test the Santaló point of symmetric and translated bodies, and volume products."""
    print("Testing the Santaló point...")

    assert np.allclose(santalo_point(standard_body("square")), 0.0, atol=1e-6)

    shift = np.array([0.2, -0.1])
    moved = VPolytope(standard_body("triangle").vertices + shift)
    assert np.allclose(santalo_point(moved), shift, atol=1e-5)

    assert np.allclose(santalo_point(Ball(np.array([0.4, 0.1]), 1.0)), [0.4, 0.1])

    assert volume_product(standard_body("square")) == pytest.approx(8.0)
    assert volume_product(standard_body("ellipse21")) == pytest.approx(math.pi**2)
    # three-fold symmetry puts the Santaló point of the trefoil at the origin
    assert 27.0 / 4.0 <= volume_product(standard_body("trefoil")) <= math.pi**2 + 1e-9

    with pytest.raises(UnsupportedBody):
        santalo_point(standard_body("cube3"))
    print("✓ Santaló point test passed")


if __name__ == "__main__":
    test_loewner_ellipsoid()
    test_john_ellipsoid()
    test_isotropic_position_exact()
    test_isotropic_position_sampled()
    test_santalo_point()
    print("All ellipsoid tests passed!")
