"""Tests for run configuration."""

import pytest
from pydantic import ValidationError

from affsurf.config import THREADS_ENV, RunConfig
from affsurf.constants import DEFAULT_TOLERANCES, OutputFormat


def test_defaults() -> None:
    """Test default settings and tolerance lookup."""
    print("Testing configuration defaults...")

    cfg = RunConfig()
    assert cfg.seed == 0
    assert cfg.threads == 1
    assert cfg.output_format == OutputFormat.JSON
    assert cfg.tolerances == DEFAULT_TOLERANCES
    assert cfg.tol("bound") == pytest.approx(1e-7)
    print("✓ Configuration defaults test passed")


def test_tolerance_overrides() -> None:
    """Test that partial tolerance maps are filled from the defaults."""
    print("Testing tolerance overrides...")

    cfg = RunConfig(tolerances={"asp": 1e-6})
    assert cfg.tol("asp") == pytest.approx(1e-6)
    assert cfg.tol("mvee") == DEFAULT_TOLERANCES["mvee"]
    assert set(cfg.tolerances) == set(DEFAULT_TOLERANCES)

    with pytest.raises(ValidationError):
        RunConfig(tolerances={"speed": 1.0})
    with pytest.raises(ValidationError):
        RunConfig(tolerances={"asp": -1.0})
    with pytest.raises(ValidationError):
        RunConfig(samples=0)
    with pytest.raises(ValidationError):
        RunConfig(quadrature_grid=16)
    print("✓ Tolerance overrides test passed")


def test_from_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the thread count from the environment and explicit overrides."""
    print("Testing configuration from the environment...")

    monkeypatch.setenv(THREADS_ENV, "4")
    assert RunConfig.from_env().threads == 4
    assert RunConfig.from_env(threads=2).threads == 2

    cfg = RunConfig.from_env(seed=7, samples=None)
    assert cfg.seed == 7
    assert cfg.samples == RunConfig().samples

    for raw in ("0", "-3", "many"):
        monkeypatch.setenv(THREADS_ENV, raw)
        assert RunConfig.from_env().threads == 1

    monkeypatch.delenv(THREADS_ENV)
    assert RunConfig.from_env().threads == 1
    print("✓ Configuration from the environment test passed")


if __name__ == "__main__":
    test_defaults()
    test_tolerance_overrides()
    print("All configuration tests passed!")
