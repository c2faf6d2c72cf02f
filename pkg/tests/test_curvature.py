"""Tests for L_p-affine surface areas: closed forms, quadrature and the flat rule."""

import math

import numpy as np
import pytest

from affsurf import curvature, geometry
from affsurf.constants import AspMethod
from affsurf.corpus import standard_body
from affsurf.errors import NotCentered, POutOfRange, PEqualsMinusN, UnsupportedBody
from affsurf.geometry import AffineMap, Ball, Ellipsoid, HPolytope, SupportBody2D

ELLIPSE21_ASP1 = 2.0 ** (1.0 / 3.0) * 2.0 * math.pi


def test_exponents() -> None:
    """Test the affine weight exponent and the ball values."""
    print("Testing exponents and ball values...")

    assert curvature.affine_exponent(2, 1.0) == pytest.approx(1.0 / 3.0)
    assert curvature.affine_exponent(3, 0.0) == pytest.approx(1.0)
    assert curvature.affine_exponent(2, math.inf) == -1.0
    assert curvature.ball_value(2, 1.0) == pytest.approx(2.0 * math.pi)
    assert curvature.ball_value(3, 1.0) == pytest.approx(4.0 * math.pi)
    assert curvature.ball_value(2, 1.0, 8.0) == pytest.approx(2.0 * math.pi * 4.0)

    with pytest.raises(PEqualsMinusN):
        curvature.affine_exponent(3, -3.0)
    print("✓ Exponents and ball values test passed")


def test_closed_forms() -> None:
    """Test as_p of balls and ellipsoids."""
    print("Testing closed forms...")

    value = curvature.asp_closed_form(Ellipsoid.axis_aligned([2.0, 1.0]), 1.0)
    assert value.value == pytest.approx(ELLIPSE21_ASP1)
    assert value.method == AspMethod.CLOSED_FORM
    assert value.value == pytest.approx(7.91630, rel=1e-5)

    ellipsoid = Ellipsoid.axis_aligned([3.0, 2.0, 1.0])
    assert curvature.asp_closed_form(ellipsoid, 1.0).value == pytest.approx(math.sqrt(6.0) * 4.0 * math.pi)
    assert curvature.asp_closed_form(ellipsoid, 0.0).value == pytest.approx(3.0 * ellipsoid.volume())

    assert curvature.asp(Ball.centered(2.0, 2), math.inf).value == pytest.approx(0.5 * math.pi)

    off_center = Ball(np.array([0.1, 0.0]), 1.0)
    assert curvature.asp_closed_form(off_center, 1.0).value == pytest.approx(2.0 * math.pi)
    with pytest.raises(NotCentered):
        curvature.asp_closed_form(off_center, 2.0)
    with pytest.raises(UnsupportedBody):
        curvature.asp_closed_form(HPolytope.cube(2), 1.0)  # type: ignore[arg-type]
    print("✓ Closed forms test passed")


def test_quadrature_matches_closed_form() -> None:
    """Test that grid quadrature reproduces the ellipse closed form."""
    print("Testing quadrature against closed forms...")

    ellipse = SupportBody2D.ellipse(2.0, 1.0)
    for p in (-1.0, 0.5, 1.0, 2.0, 5.0):
        exact = curvature.asp_closed_form(Ellipsoid.axis_aligned([2.0, 1.0]), p).value
        value = curvature.asp_quadrature_2d(ellipse, p)
        assert value.value == pytest.approx(exact, rel=1e-10)
        assert value.method == AspMethod.QUADRATURE_2D
        print(f"✓ p={p}: {value.value:.10f}")

    # as_0 is twice the area
    assert curvature.asp_quadrature_2d(ellipse, 0.0).value == pytest.approx(4.0 * math.pi, rel=1e-10)

    shifted = SupportBody2D.from_values(ellipse.h + 0.2 * np.cos(ellipse.theta), recenter=False)
    with pytest.raises(NotCentered):
        curvature.asp_quadrature_2d(shifted, 1.0)
    print("✓ Quadrature against closed forms test passed")


def test_affine_equivariance() -> None:
    """Test as_p(TK) = |det T|^{(n-p)/(n+p)} as_p(K) for a smooth body."""
    print("Testing affine equivariance...")

    body = standard_body("trefoil")
    amap = AffineMap.linear(np.array([[1.5, 0.4], [0.0, 0.8]]))
    image = geometry.apply_affine(amap, body)
    for p in (0.5, 1.0, 1.5):
        expected = amap.abs_det ** curvature.affine_exponent(2, p) * curvature.asp(body, p).value
        assert curvature.asp(image, p).value == pytest.approx(expected, rel=1e-8)
    print("✓ Affine equivariance test passed")


def test_flat_rule() -> None:
    """Test the polytope values: n|K| at p = 0, +inf for -n < p < 0, zero otherwise."""
    print("Testing the flat-face rule...")

    square = standard_body("square")
    assert curvature.asp(square, 0.0).value == pytest.approx(8.0)
    assert curvature.asp(square, 1.0).value == 0.0
    assert curvature.asp(square, 1.0).method == AspMethod.EXACT_PIECEWISE
    divergent = curvature.asp(square, -1.0)
    assert divergent.divergent
    assert math.isinf(divergent.value)

    cube = standard_body("cube3")
    assert curvature.asp(cube, 0.0).value == pytest.approx(24.0)
    assert curvature.asp(cube, 2.0).value == 0.0
    assert curvature.asp(cube, math.inf).value == 0.0
    assert curvature.asp(cube, -1.5).divergent
    assert curvature.asp(cube, -4.0).value == 0.0
    print("✓ Flat-face rule test passed")


def test_affine_isoperimetric_inequality() -> None:
    """Test the affine isoperimetric inequality on ellipses, polygons and smooth bodies."""
    print("Testing the affine isoperimetric inequality...")

    for name in ("ellipse21", "square", "trefoil", "hexagon"):
        body = standard_body(name)
        for p in (0.5, 1.0, -0.5):
            report = curvature.affine_isoperimetric_check(body, p)
            assert report.passed, report
    ellipse = curvature.affine_isoperimetric_check(standard_body("ellipse21"), 1.0)
    assert ellipse.value == pytest.approx(ellipse.upper)

    with pytest.raises(POutOfRange):
        curvature.affine_isoperimetric_check(standard_body("disk"), -3.0)
    print("✓ Affine isoperimetric inequality test passed")


def test_cap_lower_bound() -> None:
    """Test the spherical-part value of K ∩ RB against the exact arc contribution."""
    print("Testing the spherical cap lower bound...")

    square = standard_body("square")
    radius = 1.2
    bound = curvature.asp_cap_lower_bound(square, radius, 1.0, samples=40_000, seed=3)
    exact = curvature.asp(geometry.intersect_ball(square, radius), 1.0).value
    assert abs(bound.value - exact) <= 4.0 * bound.error_estimate + 1e-12
    assert bound.method == AspMethod.SPHERICAL_CAP_LOWER_BOUND
    assert bound.seed == 3

    # directions where the square reaches beyond the circle
    measure = curvature.spherical_measure(square, radius, samples=40_000, seed=3)
    sigma = 4.0 * (0.5 * math.pi - 2.0 * math.acos(1.0 / radius)) / (2.0 * math.pi)
    assert abs(measure.sigma - sigma) <= 4.0 * measure.sigma_error

    with pytest.raises(POutOfRange):
        curvature.asp_cap_lower_bound(square, radius, 3.0)
    print("✓ Spherical cap lower bound test passed")


if __name__ == "__main__":
    test_exponents()
    test_closed_forms()
    test_quadrature_matches_closed_form()
    test_affine_equivariance()
    test_flat_rule()
    test_affine_isoperimetric_inequality()
    test_cap_lower_bound()
    print("All curvature tests passed!")
