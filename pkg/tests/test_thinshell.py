"""Tests for the thin-shell check, the shell partition and the S_O construction."""

import math

import numpy as np
import pytest
from oracles import cube_shell_mass

from affsurf import thinshell
from affsurf.errors import ConstructionRefused, NotIsotropic, POutOfRange
from affsurf.geometry import Ball, HPolytope

CUBE_LK = 1.0 / math.sqrt(12.0)
SAMPLES = 4000


def isotropic_cube(n: int = 3) -> HPolytope:
    return HPolytope.cube(n, 0.5, label=f"cube{n}")


def test_shell_count() -> None:
    """Test k_n and the width restriction c < n^(1/6)."""
    print("Testing shell counts...")

    for n, c in ((3, 0.5), (16, 1.0), (100, 2.0)):
        root, cube = math.sqrt(n), n ** (1.0 / 3.0)
        expected = math.floor(n * math.log2((root + c * cube) / (root - c * cube)))
        assert thinshell.shell_count(n, c) == expected
        print(f"✓ k_{n}(c={c}) = {expected}")

    with pytest.raises(ConstructionRefused):
        thinshell.shell_count(3, 2.0)
    with pytest.raises(ConstructionRefused):
        thinshell.check_width(64, 2.0)
    print("✓ Shell counts test passed")


def test_require_isotropic() -> None:
    """Test the isotropy check on exact moments."""
    print("Testing the isotropy check...")

    assert thinshell.require_isotropic(isotropic_cube()) == pytest.approx(CUBE_LK)
    with pytest.raises(NotIsotropic):
        thinshell.require_isotropic(HPolytope.cube(3, 1.0))
    slab = HPolytope.box(np.array([-0.5, -0.25, -1.0]), np.array([0.5, 0.25, 1.0]), recenter=False)
    with pytest.raises(NotIsotropic):
        thinshell.require_isotropic(slab)

    image, cert = thinshell.isotropic_image(Ball.centered(1.0, 3))
    assert thinshell.require_isotropic(image) == pytest.approx(cert.L_K)
    print("✓ Isotropy check test passed")


def test_minimal_width() -> None:
    """Test the smallest grid constant holding half of the points."""
    print("Testing minimal shell width...")

    deviation = np.array([0.1, 0.2, 0.3, 0.4])
    assert thinshell.minimal_width(deviation) == pytest.approx(0.225)
    print("✓ Minimal shell width test passed")


def test_thin_shell_mass_against_quadrature() -> None:
    """Test the sampled shell mass of the cube against direct integration."""
    print("Testing thin-shell mass...")

    n, c = 3, 0.5
    result = thinshell.thin_shell_check(isotropic_cube(n), c, samples=SAMPLES, seed=2)
    center, width = CUBE_LK * math.sqrt(n), c * CUBE_LK * n ** (1.0 / 3.0)
    expected = cube_shell_mass(center - width, center + width)
    assert result.L_K == pytest.approx(CUBE_LK)
    assert abs(result.mass - expected) <= 5.0 * result.error + 0.02
    assert result.c_min > 0.0
    assert set(result.record()) >= {"mass", "error", "c_min", "seed"}
    print(f"✓ mass {result.mass:.4f} +- {result.error:.4f}, quadrature {expected:.4f}")
    print("✓ Thin-shell mass test passed")


def test_shell_partition() -> None:
    """Test the annuli, the heaviest shell and the radius R."""
    print("Testing the shell partition...")

    n, c = 3, 1.0
    partition = thinshell.build_shell_partition(isotropic_cube(n), c, samples=SAMPLES, seed=4)
    assert partition.k_n == thinshell.shell_count(n, c)
    assert len(partition.shells) == partition.k_n + 1
    assert partition.base_radius == pytest.approx(CUBE_LK * (math.sqrt(n) - c * n ** (1.0 / 3.0)))
    for inner, outer in zip(partition.shells, partition.shells[1:], strict=False):
        assert outer.inner == pytest.approx(inner.outer)
        assert outer.outer / outer.inner == pytest.approx(2.0 ** (1.0 / n))

    masses = [s.mass for s in partition.shells]
    assert partition.chosen_index == int(np.argmax(masses))
    assert partition.R == partition.chosen.inner
    assert partition.shell_mass_lower == pytest.approx(partition.thin_mass / (partition.k_n + 1))
    assert sum(masses) <= 1.0 + 1e-12
    assert all(b.passed for b in partition.bounds())
    record = partition.record()
    assert record["k_n"] == partition.k_n
    assert len(record["shells"]) == partition.k_n + 1
    print("✓ Shell partition test passed")


def test_so_construction() -> None:
    """Test S_O, its inclusion certificate and the truncation bound."""
    print("Testing the S_O construction...")

    cube = isotropic_cube()
    construction = thinshell.thin_shell_lower_bound(cube, 1.0, 1.0, samples=SAMPLES, seed=6, directions=SAMPLES)
    so = construction.so_set
    assert so.inclusion_violations == 0
    assert so.inclusion_checked == len(construction.partition.members)
    assert 0.0 < so.sigma_O <= 1.0
    assert so.mu == pytest.approx(so.dim * so.S_O_volume / so.R)

    n, radius = 3, construction.partition.R
    factor = (1.0 / radius) ** (2.0 * n / (n + 1.0)) * n
    assert construction.value.value == pytest.approx(factor * so.S_O_volume)
    assert construction.value.seed == 6
    assert set(construction.record()) == {"partition", "S_O", "value", "bounds"}

    with pytest.raises(POutOfRange):
        thinshell.thin_shell_lower_bound(cube, 4.0)
    with pytest.raises(ConstructionRefused):
        thinshell.build_shell_partition(cube, 2.0, samples=100)
    print("✓ S_O construction test passed")


if __name__ == "__main__":
    test_shell_count()
    test_require_isotropic()
    test_minimal_width()
    test_thin_shell_mass_against_quadrature()
    test_shell_partition()
    test_so_construction()
    print("All thin-shell tests passed!")
