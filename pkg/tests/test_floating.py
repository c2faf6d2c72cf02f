"""Tests for convex floating bodies and the as_1 floating-body limit."""

import math

import numpy as np
import pytest

from affsurf import curvature, geometry, planar
from affsurf.constants import AspMethod
from affsurf.corpus import standard_body
from affsurf.errors import DeltaOutOfRange, UnsupportedBody
from affsurf.geometry import VPolytope


def test_disk_floating_body() -> None:
    """Test that the disk's floating body is the concentric disk cutting caps of area δπ."""
    print("Testing the disk floating body...")

    disk = standard_body("disk")
    for delta in (0.001, 0.01, 0.1, 0.3):
        fb = curvature.floating_body_2d(disk, delta)
        s = math.sqrt(fb.volume() / math.pi)
        assert planar.disk_cap_area(s) == pytest.approx(delta * math.pi, rel=1e-10)
        print(f"✓ delta={delta}: radius {s:.8f}")

    ellipse = curvature.floating_body_2d(standard_body("ellipse21"), 0.1)
    disk_ratio = curvature.floating_body_2d(disk, 0.1).volume() / math.pi
    assert ellipse.volume() / (2.0 * math.pi) == pytest.approx(disk_ratio, rel=1e-12)
    print("✓ Disk floating body test passed")


def test_smooth_floating_body_is_polygon() -> None:
    """Test that disks and ellipses also yield the clipped polygon, with the exact ellipse alongside."""
    print("Testing floating polygons of disks and ellipses...")

    for name in ("disk", "ellipse21"):
        body = standard_body(name)
        fb = curvature.floating_body_2d(body, 0.05)
        assert isinstance(fb.result, VPolytope)
        assert fb.exact is not None
        assert fb.directions == 720
        assert len(fb.result.vertices) == 720
        assert geometry.volume(fb.result) == pytest.approx(fb.volume(), rel=1e-4)
        assert geometry.volume(fb.result) >= fb.volume()
        assert np.all(np.asarray(geometry.contains(body, fb.result.vertices, 1e-12)))
        dirs = planar.unit(2.0 * math.pi * np.arange(720) / 720)
        assert np.allclose(fb.offsets, np.asarray(fb.exact.support(dirs)))
        print(f"✓ {name}: {len(fb.result.vertices)} vertices")
    print("✓ Floating polygons test passed")


def test_polygon_floating_body() -> None:
    """Test that every supporting cut of a polygon's floating body has area δ|K|."""
    print("Testing polygon floating bodies...")

    square = standard_body("square")
    delta = 0.05
    fb = curvature.floating_body_2d(square, delta, directions=360)
    vertices = geometry.polygonize(square)
    dirs = planar.unit(2.0 * math.pi * np.arange(360) / 360)
    for i in (0, 17, 45, 200):
        assert planar.cap_area(vertices, dirs[i], fb.offsets[i]) == pytest.approx(4.0 * delta, rel=1e-10)

    assert fb.volume() < 4.0
    assert np.all(np.asarray(geometry.contains(square, fb.result.vertices, 1e-12)))
    assert np.allclose(geometry.centroid(fb.result), 0.0, atol=1e-9)

    volumes = [curvature.floating_body_2d(square, d, directions=360).volume() for d in (0.01, 0.05, 0.2)]
    assert volumes[0] > volumes[1] > volumes[2]
    print("✓ Polygon floating bodies test passed")


def test_floating_body_errors() -> None:
    """Test the δ range and the planar restriction."""
    print("Testing floating body errors...")

    disk = standard_body("disk")
    for delta in (0.0, 0.5, -0.1):
        with pytest.raises(DeltaOutOfRange):
            curvature.floating_body_2d(disk, delta)
    with pytest.raises(UnsupportedBody):
        curvature.floating_body_2d(standard_body("cube3"), 0.1)
    with pytest.raises(DeltaOutOfRange):
        curvature.asp1_floating_limit_2d(disk, [0.02, 0.01])
    with pytest.raises(DeltaOutOfRange):
        curvature.asp1_floating_limit_2d(disk, [0.01, 0.02, 0.04])
    print("✓ Floating body errors test passed")


def test_floating_limit_on_ellipses() -> None:
    """Test that the extrapolated floating-body limit recovers as_1 of disks and ellipses."""
    print("Testing the floating-body limit...")

    assert curvature.floating_deltas() == pytest.approx([0.02 * 2.0**-k for k in range(7)])

    for name, expected in (("disk", 2.0 * math.pi), ("ellipse21", 2.0 ** (1.0 / 3.0) * 2.0 * math.pi)):
        value = curvature.asp1_floating_limit_2d(standard_body(name))
        assert value.method == AspMethod.FLOATING_LIMIT
        assert value.value == pytest.approx(expected, rel=1e-2)
        print(f"✓ {name}: {value.value:.6f} (expected {expected:.6f})")

    seq = curvature.floating_sequence(standard_body("disk"), curvature.floating_deltas(0.1, 4))
    assert len(seq) == 4
    assert np.all(seq > 0.0)
    print("✓ Floating-body limit test passed")


if __name__ == "__main__":
    test_disk_floating_body()
    test_smooth_floating_body_is_polygon()
    test_polygon_floating_body()
    test_floating_body_errors()
    test_floating_limit_on_ellipses()
    print("All floating body tests passed!")
