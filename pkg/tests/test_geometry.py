"""Tests for convex body representations and their operations."""

import math

import numpy as np
import pytest

from affsurf import geometry, planar
from affsurf.errors import DegenerateBody, InvalidBody, NonConvex, OriginNotInterior, SingularMap
from affsurf.geometry import AffineMap, Ball, Ellipsoid, HPolytope, SupportBody2D, VPolytope


def test_ball_and_ellipse_basics() -> None:
    """Test support, radial function and volume of balls and ellipses."""
    print("Testing ball and ellipse basics...")

    disk = Ball.centered(2.0, 2)
    assert geometry.support(disk, np.array([1.0, 0.0])) == pytest.approx(2.0)
    assert geometry.radial(disk, np.array([0.0, 1.0])) == pytest.approx(2.0)
    assert geometry.volume(disk) == pytest.approx(4.0 * math.pi)

    ellipse = Ellipsoid.axis_aligned([2.0, 1.0])
    assert geometry.support(ellipse, np.array([1.0, 0.0])) == pytest.approx(2.0)
    assert geometry.support(ellipse, np.array([0.0, 1.0])) == pytest.approx(1.0)
    assert geometry.radial(ellipse, np.array([0.0, 1.0])) == pytest.approx(1.0)
    assert geometry.volume(ellipse) == pytest.approx(2.0 * math.pi)
    assert geometry.contains(ellipse, np.array([1.9, 0.0]))
    assert not geometry.contains(ellipse, np.array([0.0, 1.1]))

    ball3 = Ball.centered(1.0, 3)
    assert geometry.volume(ball3) == pytest.approx(4.0 * math.pi / 3.0)
    print("✓ Ball and ellipse basics test passed")


def test_polytope_basics() -> None:
    """Test squares and cubes in both representations."""
    print("Testing polytope basics...")

    square = HPolytope.cube(2)
    assert geometry.volume(square) == pytest.approx(4.0)
    assert len(square.vertices) == 4
    assert geometry.support(square, np.array([1.0, 1.0]) / math.sqrt(2.0)) == pytest.approx(math.sqrt(2.0))
    assert geometry.radial(square, np.array([1.0, 0.0])) == pytest.approx(1.0)
    assert np.allclose(geometry.centroid(square), 0.0)

    cube = HPolytope.cube(3, 1.0)
    assert geometry.volume(cube) == pytest.approx(8.0)

    diamond = VPolytope.cross_polytope(2)
    assert geometry.volume(diamond) == pytest.approx(2.0)
    assert geometry.inradius(diamond) == pytest.approx(1.0 / math.sqrt(2.0))
    assert geometry.circumradius(diamond) == pytest.approx(1.0)

    corner = HPolytope.from_vertices(np.array([[0.0, 0.0], [3.0, 0.0], [0.0, 3.0], [1.0, 1.0]]))
    assert len(corner.normals) == 3
    assert geometry.volume(corner) == pytest.approx(4.5)
    assert np.allclose(geometry.centroid(corner), 0.0, atol=1e-9)
    print("✓ Polytope basics test passed")


def test_polar_bodies() -> None:
    """Test polar bodies about the origin."""
    print("Testing polar bodies...")

    polar_ball = geometry.polar(Ball.centered(2.0, 2))
    assert geometry.volume(polar_ball) == pytest.approx(math.pi / 4.0)

    polar_square = geometry.polar(HPolytope.cube(2))
    assert geometry.volume(polar_square) == pytest.approx(2.0)

    polar_ellipse = geometry.polar(Ellipsoid.axis_aligned([2.0, 1.0]))
    assert geometry.support(polar_ellipse, np.array([1.0, 0.0])) == pytest.approx(0.5)
    print("✓ Polar bodies test passed")


def test_affine_images() -> None:
    """Test that affine images scale volume by |det T| and move the centroid."""
    print("Testing affine images...")

    amap = AffineMap(np.array([[2.0, 1.0], [0.0, 1.5]]), np.array([0.5, -0.25]))
    square = HPolytope.cube(2)
    image = geometry.apply_affine(amap, square)
    assert geometry.volume(image) == pytest.approx(amap.abs_det * 4.0)
    assert np.allclose(geometry.centroid(image), [0.5, -0.25])

    ellipse = geometry.apply_affine(AffineMap.linear(np.diag([2.0, 1.0])), Ball.centered(1.0, 2))
    assert geometry.volume(ellipse) == pytest.approx(2.0 * math.pi)

    scaled = geometry.scale(square, 3.0)
    assert geometry.volume(scaled) == pytest.approx(36.0)

    moved = geometry.translate(square, np.array([0.3, 0.1]))
    assert np.allclose(geometry.centroid(geometry.recentered(moved)), 0.0, atol=1e-12)
    print("✓ Affine images test passed")


def test_affine_map_algebra() -> None:
    """Test inverse and composition of affine maps."""
    print("Testing affine map algebra...")

    amap = AffineMap(np.array([[1.0, 2.0], [0.0, 3.0]]), np.array([1.0, -1.0]))
    x = np.array([[0.2, 0.7], [-1.0, 4.0]])
    assert np.allclose(amap.inverse()(amap(x)), x)
    assert np.allclose(amap.compose(amap.inverse()).matrix, np.eye(2))
    assert AffineMap.scaling(2.0, 3).is_similarity()
    assert not amap.is_similarity()

    with pytest.raises(SingularMap):
        AffineMap.linear(np.array([[1.0, 2.0], [2.0, 4.0]]))
    print("✓ Affine map algebra test passed")


def test_invalid_bodies() -> None:
    """Test that malformed inputs are rejected with domain errors."""
    print("Testing invalid bodies...")

    with pytest.raises(InvalidBody):
        Ball(np.zeros(2), -1.0)
    with pytest.raises(InvalidBody):
        Ellipsoid(np.zeros(2), np.array([[1.0, 0.0], [0.0, -1.0]]))
    with pytest.raises(DegenerateBody):
        VPolytope(np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]))

    theta = 2.0 * math.pi * np.arange(256) / 256
    with pytest.raises(NonConvex):
        SupportBody2D.from_values(1.0 + 0.2 * np.cos(4.0 * theta), recenter=False)
    print("✓ Invalid bodies test passed")


def test_support_body_2d() -> None:
    """Test the support-function representation of smooth planar bodies."""
    print("Testing support-function bodies...")

    disk = SupportBody2D.disk(1.5, m=512)
    assert disk.volume() == pytest.approx(math.pi * 2.25, rel=1e-12)
    assert disk.perimeter() == pytest.approx(3.0 * math.pi, rel=1e-12)
    assert np.allclose(disk.radius_of_curvature, 1.5)

    ellipse = SupportBody2D.ellipse(2.0, 1.0, m=1024)
    assert ellipse.volume() == pytest.approx(2.0 * math.pi, rel=1e-10)
    assert np.allclose(ellipse.centroid(), 0.0, atol=1e-12)

    shifted = SupportBody2D.from_values(disk.h + 0.3 * np.cos(disk.theta), recenter=True)
    assert np.allclose(shifted.centroid(), 0.0, atol=1e-10)
    print("✓ Support-function bodies test passed")


def test_rounded_polygon() -> None:
    """Test Poisson-rounded polygons: smooth, inside the circumscribed disk, same perimeter."""
    print("Testing rounded polygons...")

    square = planar.regular_polygon(4, 1.0)
    dirs = planar.unit(2.0 * math.pi * np.arange(2048) / 2048)
    polygon_h = np.asarray(VPolytope(square).support(dirs))
    deviations = []
    for rho in (0.0, 0.5, 0.9, 0.98):
        body = SupportBody2D.rounded_polygon(square, rho)
        assert body.radius_of_curvature.min() > 0.0
        assert body.h.max() <= 1.0 + 1e-9
        assert body.perimeter() == pytest.approx(4.0 * math.sqrt(2.0), rel=1e-12)
        assert np.allclose(body.centroid(), 0.0, atol=1e-12)
        deviations.append(float(np.abs(body.h - polygon_h).max()))
        print(f"✓ rho={rho}: max |h - h_P| = {deviations[-1]:.4f}")

    disk = SupportBody2D.rounded_polygon(square, 0.0)
    assert np.allclose(disk.h, 2.0 * math.sqrt(2.0) / math.pi)
    assert deviations == sorted(deviations, reverse=True)
    assert deviations[-1] < 0.1

    with pytest.raises(InvalidBody):
        SupportBody2D.rounded_polygon(square, 1.0)
    print("✓ Rounded polygons test passed")


def test_ball_truncation_and_hull() -> None:
    """Test K ∩ RB and conv{K, RB} at their degenerate radii."""
    print("Testing ball truncation and hull...")

    square = HPolytope.cube(2)
    inner = geometry.intersect_ball(square, 1.0)
    assert isinstance(inner, Ball)
    assert inner.radius == pytest.approx(1.0)
    assert geometry.intersect_ball(square, 2.0) is square

    outer = geometry.convex_hull_with_ball(square, 2.0)
    assert isinstance(outer, Ball)
    assert geometry.convex_hull_with_ball(square, 0.5) is square

    # disk of radius 1.2 minus the four segments beyond the sides
    cut = geometry.intersect_ball(square, 1.2)
    segment = 1.2**2 * math.acos(1.0 / 1.2) - math.sqrt(1.2**2 - 1.0)
    assert geometry.volume(cut) == pytest.approx(math.pi * 1.2**2 - 4.0 * segment, rel=1e-9)

    with pytest.raises(OriginNotInterior):
        geometry.intersect_ball(geometry.translate(square, np.array([3.0, 0.0])), 1.0)
    print("✓ Ball truncation and hull test passed")


def test_hausdorff_and_symmetry() -> None:
    """Test Hausdorff distance between nested disks and symmetry detection."""
    print("Testing Hausdorff distance and symmetry...")

    assert geometry.hausdorff_distance(Ball.centered(1.0, 2), Ball.centered(1.25, 2)) == pytest.approx(0.25)
    assert HPolytope.cube(2).is_symmetric()
    triangle = VPolytope(np.array([[1.0, 0.0], [-0.5, 0.8], [-0.5, -0.8]]))
    assert not triangle.is_symmetric()
    print("✓ Hausdorff distance and symmetry test passed")


if __name__ == "__main__":
    test_ball_and_ellipse_basics()
    test_polytope_basics()
    test_polar_bodies()
    test_affine_images()
    test_affine_map_algebra()
    test_invalid_bodies()
    test_support_body_2d()
    test_rounded_polygon()
    test_ball_truncation_and_hull()
    test_hausdorff_and_symmetry()
    print("All geometry tests passed!")
