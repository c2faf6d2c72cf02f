"""Tests for planar polygons and arc/segment boundaries."""

import math

import numpy as np
import pytest

from affsurf import planar
from affsurf.errors import InvalidBody, OriginNotInterior
from affsurf.planar import MixedBoundary

SQUARE = np.array([[1.0, -1.0], [1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0]])


def test_polygon_measures() -> None:
    """Test area, centroid and perimeter of simple polygons."""
    print("Testing polygon measures...")

    assert planar.polygon_area(SQUARE) == pytest.approx(4.0)
    assert planar.polygon_perimeter(SQUARE) == pytest.approx(8.0)
    assert np.allclose(planar.polygon_centroid(SQUARE), 0.0)
    assert planar.signed_area(SQUARE[::-1]) == pytest.approx(-4.0)

    hexagon = planar.regular_polygon(6, 1.0)
    assert planar.polygon_area(hexagon) == pytest.approx(1.5 * math.sqrt(3.0))

    shuffled = SQUARE[[2, 0, 3, 1]]
    assert planar.polygon_area(planar.order_ccw(shuffled)) == pytest.approx(4.0)
    print("✓ Polygon measures test passed")


def test_clipping() -> None:
    """Test half-plane clipping of a square."""
    print("Testing half-plane clipping...")

    half = planar.clip_halfplane(SQUARE, np.array([1.0, 0.0]), 0.0)
    assert planar.polygon_area(half) == pytest.approx(2.0)

    normals = planar.unit(np.array([0.0, 0.5 * math.pi]))
    quarter = planar.clip_halfplanes(SQUARE, normals, np.zeros(2))
    assert planar.polygon_area(quarter) == pytest.approx(1.0)

    empty = planar.clip_halfplanes(SQUARE, np.array([[1.0, 0.0]]), np.array([-2.0]))
    assert len(empty) == 0
    print("✓ Half-plane clipping test passed")


def test_cap_offsets() -> None:
    """Test that cap offsets cut exactly the requested area."""
    print("Testing cap offsets...")

    u = np.array([1.0, 0.0])
    assert planar.cap_offset(SQUARE, u, 0.5) == pytest.approx(0.75)

    diagonal = np.array([1.0, 1.0]) / math.sqrt(2.0)
    for area in (0.01, 0.3, 1.0, 1.7):
        t = planar.cap_offset(SQUARE, diagonal, area)
        assert planar.cap_area(SQUARE, diagonal, t) == pytest.approx(area, rel=1e-10)

    assert planar.disk_cap_area(0.0) == pytest.approx(0.5 * math.pi)
    assert planar.disk_cap_area(1.0) == pytest.approx(0.0)
    print("✓ Cap offsets test passed")


def test_mixed_boundary_measures() -> None:
    """Test area, perimeter and centroid of arc/segment boundaries."""
    print("Testing mixed boundary measures...")

    disk = MixedBoundary.disk(2.0)
    assert disk.area() == pytest.approx(4.0 * math.pi)
    assert disk.perimeter() == pytest.approx(4.0 * math.pi)

    eps = 0.25
    rounded = MixedBoundary.rounded_square(eps)
    assert rounded.area() == pytest.approx(4.0 - (4.0 - math.pi) * eps**2)
    assert rounded.perimeter() == pytest.approx(8.0 - 8.0 * eps + 2.0 * math.pi * eps)
    assert np.allclose(rounded.centroid(), 0.0, atol=1e-12)

    moved = rounded.translated(np.array([0.5, -0.25]))
    assert np.allclose(moved.centroid(), [0.5, -0.25])

    with pytest.raises(InvalidBody):
        MixedBoundary.rounded_square(1.5)
    print("✓ Mixed boundary measures test passed")


def test_mixed_boundary_support() -> None:
    """Test support functions of K ∩ RB and conv{K, RB} for the square."""
    print("Testing mixed boundary support functions...")

    dirs = planar.unit(2.0 * math.pi * np.arange(64) / 64)
    h_square = np.abs(dirs).sum(axis=1)

    hull = MixedBoundary.polygon_hull_ball(SQUARE, 1.2)
    assert np.allclose(hull.support(dirs), np.maximum(h_square, 1.2), atol=1e-12)

    cap = MixedBoundary.polygon_cap_ball(SQUARE, 1.2)
    assert np.all(np.asarray(cap.support(dirs)) <= np.minimum(h_square, 1.2) + 1e-12)
    assert cap.support(np.array([1.0, 0.0])) == pytest.approx(1.0)
    print("✓ Mixed boundary support functions test passed")


def test_mixed_boundary_asp() -> None:
    """Test piecewise as_p: arcs integrate, flat pieces follow the flat rule."""
    print("Testing piecewise affine surface areas...")

    disk = MixedBoundary.disk(1.0)
    assert disk.asp(1.0) == pytest.approx(2.0 * math.pi)
    assert disk.asp(0.0) == pytest.approx(2.0 * math.pi)

    square = MixedBoundary.from_polygon(SQUARE)
    assert square.asp(0.0) == pytest.approx(8.0)
    assert square.asp(1.0) == 0.0
    assert math.isinf(square.asp(-1.0))
    assert square.asp(-3.0) == 0.0

    # each quarter arc of radius eps contributes (pi/2) eps^{2/3} at p = 1
    eps = 0.125
    rounded = MixedBoundary.rounded_square(eps)
    assert rounded.asp(1.0) == pytest.approx(2.0 * math.pi * eps ** (2.0 / 3.0), rel=1e-10)

    shifted = MixedBoundary.from_polygon(SQUARE + 2.0)
    with pytest.raises(OriginNotInterior):
        shifted.asp(1.0)
    print("✓ Piecewise affine surface areas test passed")


if __name__ == "__main__":
    test_polygon_measures()
    test_clipping()
    test_cap_offsets()
    test_mixed_boundary_measures()
    test_mixed_boundary_support()
    test_mixed_boundary_asp()
    print("All planar tests passed!")
