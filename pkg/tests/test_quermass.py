"""Tests for Steiner quermassintegrals and scaling degrees."""

import math

import numpy as np
import pytest

from affsurf import geometry, quermass
from affsurf.corpus import standard_body
from affsurf.errors import IllConditionedGrid, UnsupportedBody
from affsurf.geometry import HPolytope


def test_steiner_fit_planar() -> None:
    """Test W_0, W_1, W_2 of the square and the unit disk."""
    print("Testing planar Steiner fits...")

    square = quermass.steiner_fit(standard_body("square"))
    assert square.W == pytest.approx([4.0, 4.0, math.pi], rel=1e-8)
    assert square.exact
    assert square.residual < 1e-10
    assert len(square.t_grid) == 3

    disk = quermass.steiner_fit(standard_body("disk"), [0.2, 0.5, 1.0, 1.5])
    assert disk.W == pytest.approx([math.pi] * 3, rel=1e-8)

    ellipse = quermass.steiner_fit(standard_body("ellipse21"))
    assert ellipse.W[0] == pytest.approx(2.0 * math.pi, rel=1e-8)
    # perimeter of the 2:1 ellipse, 2 W_1
    assert 2.0 * ellipse.W[1] == pytest.approx(9.688448220547675, rel=1e-8)

    assert quermass.parallel_volume(standard_body("square"), 1.0) == pytest.approx(12.0 + math.pi)
    print("✓ Planar Steiner fits test passed")


def test_steiner_fit_solid() -> None:
    """Test quermassintegrals of the cube and the ball in three dimensions."""
    print("Testing solid Steiner fits...")

    cube = quermass.steiner_fit(standard_body("cube3"))
    assert cube.W == pytest.approx([8.0, 8.0, 2.0 * math.pi, 4.0 * math.pi / 3.0], rel=1e-8)
    assert cube.exact

    ball = quermass.steiner_fit(standard_body("ball3"))
    assert ball.W == pytest.approx([4.0 * math.pi / 3.0] * 4, rel=1e-8)

    ellipsoid = quermass.steiner_fit(standard_body("ellipsoid321"))
    assert not ellipsoid.exact
    assert ellipsoid.W[0] == pytest.approx(8.0 * math.pi, rel=1e-8)
    assert ellipsoid.W[3] == pytest.approx(4.0 * math.pi / 3.0, rel=1e-8)
    print("✓ Solid Steiner fits test passed")


def test_steiner_grid_errors() -> None:
    """Test refusal of short, repeated or nonpositive t-grids."""
    print("Testing Steiner grid errors...")

    square = standard_body("square")
    for grid in ([0.1, 0.2], [0.1, 0.1, 0.2], [-0.1, 0.2, 0.3], [0.0, 0.5, 1.0]):
        with pytest.raises(IllConditionedGrid):
            quermass.steiner_fit(square, grid)
    with pytest.raises(UnsupportedBody):
        quermass.steiner_terms(HPolytope.cube(4))
    print("✓ Steiner grid errors test passed")


def test_homogeneity_degree() -> None:
    """Test scaling degrees of IS_1 and os_-1 on an ellipse."""
    print("Testing homogeneity degrees...")

    ellipse = standard_body("ellipse21")
    alphas = [0.5, 0.8, 1.0, 1.6, 2.0]
    assert quermass.expected_degree(2, 1.0) == pytest.approx(2.0 / 3.0)
    assert quermass.homogeneity_degree("IS_1", ellipse, alphas) == pytest.approx(2.0 / 3.0, abs=1e-8)
    assert quermass.homogeneity_degree("os_-1", ellipse, alphas) == pytest.approx(6.0, abs=1e-8)
    assert quermass.homogeneity_degree(geometry.volume, standard_body("hexagon"), alphas) == pytest.approx(2.0)

    with pytest.raises(IllConditionedGrid):
        quermass.homogeneity_degree("IS_1", ellipse, [1.0])
    with pytest.raises(IllConditionedGrid):
        quermass.homogeneity_degree("IS_1", ellipse, [1.0, 1.0, 2.0])
    with pytest.raises(ValueError):
        quermass.homogeneity_degree("IS_7", ellipse, alphas)
    print("✓ Homogeneity degrees test passed")


def test_non_quermass_report() -> None:
    """Test that IS_1 is not a combination of quermassintegrals for n = 2..6."""
    print("Testing the non-quermass check...")

    reports = quermass.non_quermass_report(range(2, 7))
    assert len(reports) == 5
    for n, report in zip(range(2, 7), reports, strict=True):
        assert report.passed
        assert report.value > 1e-10
        assert f"n={n}" in report.quantity
        print(f"✓ n={n}: {report.detail}")

    with pytest.raises(UnsupportedBody):
        quermass.non_quermass_report([7])
    assert np.isclose(quermass.expected_degree(3, 1.0), 1.5)
    print("✓ Non-quermass check test passed")


if __name__ == "__main__":
    test_steiner_fit_planar()
    test_steiner_fit_solid()
    test_steiner_grid_errors()
    test_homogeneity_degree()
    test_non_quermass_report()
    print("All quermass tests passed!")
