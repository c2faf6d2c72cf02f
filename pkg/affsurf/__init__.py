# Copyright 2025 Maida.AI
# SPDX-License-Identifier: Apache-2.0
r"""affsurf - L_p-affine surface areas of convex bodies and their extremal values.

The package provides:
- Convex bodies as H-/V-polytopes, balls, ellipsoids and planar support functions
- as_p by closed form, boundary quadrature, exact arc/segment pieces and floating bodies
- John and Löwner ellipsoids, isotropic position and the Santaló point
- Hit-and-run sampling and the thin-shell construction of the truncated body K ∩ RB
- Estimators for the inner and outer maximal and minimal affine surface areas
- Steiner fits of quermassintegrals and homogeneity checks
- JSON/CSV report codecs with crc32c fingerprints and the ``affsurf`` command line
"""

from .codecs import Codec, get_codec, list_codecs, register_codec
from .config import RunConfig
from .constants import AspMethod, BodyType, ExitCode, ExtremalKind, OutputFormat, Semantics, Severity
from .curvature import (
    affine_isoperimetric_check,
    asp,
    asp1_floating_limit_2d,
    asp_cap_lower_bound,
    asp_closed_form,
    asp_quadrature_2d,
    floating_body_2d,
)
from .ellipsoids import isotropic_position, john_ellipsoid, loewner_ellipsoid, santalo_point, volume_product
from .errors import AffsurfError, ErrorCode
from .extremal import (
    closed_form_extremal,
    estimate,
    estimate_IS,
    estimate_os,
    estimate_OS,
    perturbation_smoke,
    range_probe,
    verify_monotonicity,
)
from .geometry import (
    AffineMap,
    Ball,
    ConvexBody,
    Ellipsoid,
    HPolytope,
    SupportBody2D,
    VPolytope,
    apply_affine,
    centroid,
    convex_hull_with_ball,
    intersect_ball,
    polar,
    radial,
    support,
    volume,
)
from .models import AspValue, BoundReport, ExtremalRecord, Report, SteinerFit
from .quermass import homogeneity_degree, non_quermass_report, steiner_fit
from .sampling import hit_and_run
from .thinshell import build_shell_partition, build_SO, thin_shell_check, thin_shell_lower_bound

__version__ = "0.0.0"

__all__ = [
    # Bodies
    "AffineMap",
    "Ball",
    "ConvexBody",
    "Ellipsoid",
    "HPolytope",
    "SupportBody2D",
    "VPolytope",
    "apply_affine",
    "centroid",
    "convex_hull_with_ball",
    "intersect_ball",
    "polar",
    "radial",
    "support",
    "volume",
    # Affine surface areas
    "affine_isoperimetric_check",
    "asp",
    "asp1_floating_limit_2d",
    "asp_cap_lower_bound",
    "asp_closed_form",
    "asp_quadrature_2d",
    "floating_body_2d",
    # Ellipsoids
    "isotropic_position",
    "john_ellipsoid",
    "loewner_ellipsoid",
    "santalo_point",
    "volume_product",
    # Sampling and thin shells
    "hit_and_run",
    "build_SO",
    "build_shell_partition",
    "thin_shell_check",
    "thin_shell_lower_bound",
    # Extremal areas
    "closed_form_extremal",
    "estimate",
    "estimate_IS",
    "estimate_OS",
    "estimate_os",
    "perturbation_smoke",
    "range_probe",
    "verify_monotonicity",
    # Quermassintegrals
    "homogeneity_degree",
    "non_quermass_report",
    "steiner_fit",
    # Records, config and codecs
    "AspValue",
    "BoundReport",
    "ExtremalRecord",
    "Report",
    "SteinerFit",
    "RunConfig",
    "Codec",
    "get_codec",
    "list_codecs",
    "register_codec",
    # Constants and errors
    "AspMethod",
    "BodyType",
    "ExitCode",
    "ExtremalKind",
    "OutputFormat",
    "Semantics",
    "Severity",
    "AffsurfError",
    "ErrorCode",
]
