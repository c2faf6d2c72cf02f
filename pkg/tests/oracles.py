"""Independent reference values computed by direct integration."""

import math

from scipy.integrate import quad


def square_disk_area(rho: float, half: float = 0.5) -> float:
    """Area of [-half, half]^2 ∩ rho·B_2^2."""
    if rho <= half:
        return math.pi * rho * rho
    if rho >= half * math.sqrt(2.0):
        return 4.0 * half * half
    segment = rho * rho * math.acos(half / rho) - half * math.sqrt(rho * rho - half * half)
    return math.pi * rho * rho - 4.0 * segment


def cube_ball_volume(radius: float, half: float = 0.5) -> float:
    """Volume of [-half, half]^3 ∩ radius·B_2^3, slicing along one axis."""
    top = min(half, radius)
    value, _ = quad(lambda z: square_disk_area(math.sqrt(max(radius * radius - z * z, 0.0)), half), -top, top)
    return value


def cube_shell_mass(lower: float, upper: float, half: float = 0.5) -> float:
    """Volume fraction of the cube between two radii."""
    return (cube_ball_volume(upper, half) - cube_ball_volume(lower, half)) / (2.0 * half) ** 3


def square_arc_measure(radius: float) -> float:
    """Normalized measure of the directions in which the square [-1, 1]^2 reaches beyond radius."""
    if radius <= 1.0:
        return 1.0
    if radius >= math.sqrt(2.0):
        return 0.0
    return 4.0 * (0.5 * math.pi - 2.0 * math.acos(1.0 / radius)) / (2.0 * math.pi)
