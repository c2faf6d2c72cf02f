"""Command-line front end.

    $ affsurf asp --body disk --p 1
    $ affsurf extremal --kind IS --p 1 --body square.json --format table
    $ affsurf verify iso-inequality --corpus random2d --n 50

``--body`` takes a JSON body file or the name of a standard body. Every command
prints one report; the exit code is 0 when all checks pass, 1 on a bound violation,
2 on an input error and 3 on a domain error.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError
from rich import box
from rich.console import Console
from rich.table import Table

from . import curvature, extremal, quermass, thinshell
from .codecs import get_codec, load_body
from .codecs.csv_codec import format_value, report_rows
from .config import RunConfig
from .constants import DEFAULT_TOLERANCES, ExitCode, ExtremalKind, OutputFormat, Severity
from .corpus import standard_body
from .ellipsoids import isotropic_position, john_ellipsoid, loewner_ellipsoid, polar_area_about, santalo_point
from .errors import AffsurfError, ConstructionRefused, POutOfRange, UnsupportedBody
from .geometry import Ball, ConvexBody, Ellipsoid, HPolytope, VPolytope, to_support_body, volume
from .models import BoundReport, Report
from .verify import SUITES, SuiteOptions, run_suite

Handler = Callable[[argparse.Namespace, RunConfig], tuple[dict[str, Any], bool]]


# ----------------------------------------------------------------------------
# Argument helpers
# ----------------------------------------------------------------------------


def body_arg(text: str) -> ConvexBody:
    """A JSON body file, or one of the standard bodies by name."""
    if Path(text).exists():
        return load_body(text)
    return standard_body(text.removesuffix(".json"))


def tolerance_arg(text: str) -> tuple[str, float]:
    key, sep, value = text.partition("=")
    if not sep or key not in DEFAULT_TOLERANCES:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE with KEY in {sorted(DEFAULT_TOLERANCES)}, got {text!r}")
    return key, float(value)


def build_config(args: argparse.Namespace) -> RunConfig:
    fmt = OutputFormat[args.format.upper()]
    return RunConfig.from_env(
        seed=args.seed,
        samples=args.samples,
        quadrature_grid=args.grid,
        c_thin=args.c_thin,
        tolerances=dict(args.tol) if args.tol else None,
        output_format=fmt,
    )


def _bounds_ok(reports: Sequence[BoundReport]) -> bool:
    return not any(r.failed for r in reports)


# ----------------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------------


def cmd_asp(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    body, p = args.body, args.p
    if args.method == "closed":
        if not isinstance(body, Ball | Ellipsoid):
            raise UnsupportedBody(f"no closed form for {type(body).__name__}")
        value = curvature.asp_closed_form(body, p)
    elif args.method == "quadrature":
        value = curvature.asp_quadrature_2d(to_support_body(body, cfg.quadrature_grid), p)
    elif args.method == "floating":
        if p != 1.0:
            raise POutOfRange(f"the floating-body oracle computes as_1 only, got p={p}")
        value = curvature.asp1_floating_limit_2d(body)
    else:
        value = curvature.asp(body, p, cfg.quadrature_grid)
    return value.model_dump(), True


def cmd_floating(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    fb = curvature.floating_body_2d(args.body, args.delta)
    parent = volume(args.body)
    payload = {
        "body_id": args.body.label,
        "delta": args.delta,
        "volume": fb.volume(),
        "parent_volume": parent,
        "cut_fraction": 1.0 - fb.volume() / parent,
        "directions": fb.directions,
        "vertices": len(fb.result.vertices),
        "exact": fb.exact is not None,
    }
    if args.limit:
        payload["as_1_limit"] = curvature.asp1_floating_limit_2d(args.body).model_dump()
    return payload, True


def cmd_mvee(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    fit = loewner_ellipsoid(args.body, cfg.tol("mvee"))
    return {"body_id": args.body.label, **fit.record()}, True


def cmd_john(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    if not isinstance(args.body, HPolytope | VPolytope):
        raise UnsupportedBody(f"John ellipsoid of {type(args.body).__name__} is not supported")
    fit = john_ellipsoid(args.body, cfg.tol("mvee"))
    return {"body_id": args.body.label, **fit.record()}, True


def cmd_isotropic(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    cert = isotropic_position(
        args.body, cfg.samples, cfg.seed, exact=False if args.sampled else None, burn_in=cfg.burn_in, chains=cfg.chains
    )
    return {"body_id": args.body.label, **cert.record()}, True


def cmd_santalo(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    s = santalo_point(args.body, cfg.tol("santalo"))
    polar_area = polar_area_about(args.body, s)
    return {
        "body_id": args.body.label,
        "point": s.tolist(),
        "polar_volume": polar_area,
        "volume_product": volume(args.body) * polar_area,
    }, True


def cmd_extremal(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    kind = ExtremalKind(args.kind)
    if args.probe:
        est = extremal.range_probe(args.body, kind, args.p)
    else:
        est = extremal.estimate(kind, args.body, args.p, cfg)
    payload = {"body_id": args.body.label, **est.record().model_dump()}
    ok = est.passed
    if args.perturb is not None:
        report = extremal.perturbation_smoke(args.body, kind, args.p, args.perturb, cfg)
        payload["perturbation"] = report.model_dump()
        ok = ok and not report.failed
    if args.monotonicity:
        reports = extremal.verify_monotonicity(args.body, kind, cfg.p_grid, cfg)
        payload["monotonicity"] = [r.model_dump() for r in reports]
        ok = ok and _bounds_ok(reports)
    return payload, ok


def cmd_thinshell(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    image, cert = thinshell.isotropic_image(args.body, cfg.samples, cfg.seed)
    mass = thinshell.thin_shell_check(image, cfg.c_thin, cfg.samples, cfg.seed, cfg.burn_in, cfg.chains)
    payload: dict[str, Any] = {"body_id": args.body.label, "isotropic": cert.record(), "mass": mass.record()}
    bounds = [
        BoundReport.check(
            "thin-shell mass >= 1/2", mass.mass, lower=0.5, tolerance=3.0 * mass.error, severity=Severity.WARNING
        )
    ]
    try:
        if args.p is not None:
            construction = thinshell.thin_shell_lower_bound(
                image, args.p, cfg.c_thin, cfg.samples, cfg.seed, cfg.samples, cfg.burn_in, cfg.chains
            )
            partition = construction.partition
            payload["construction"] = construction.record()
            bounds += construction.bounds
        else:
            partition = thinshell.build_shell_partition(
                image, cfg.c_thin, cfg.samples, cfg.seed, cfg.burn_in, cfg.chains
            )
            bounds += partition.bounds()
        payload["partition"] = partition.record()
        payload["rows"] = [s._asdict() for s in partition.shells]
        bounds.append(
            BoundReport.check(
                "|L_i0| >= 1/(2(k_n + 1))",
                partition.chosen.mass,
                lower=1.0 / (2 * (partition.k_n + 1)),
                severity=Severity.WARNING,
            )
        )
    except ConstructionRefused as exc:
        logging.warning("shell partition skipped: %s", exc)
        payload["partition"] = None
        payload["refused"] = str(exc)
    payload["bounds"] = [b.model_dump() for b in bounds]
    return payload, _bounds_ok(bounds)


def cmd_quermass(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    fit = quermass.steiner_fit(args.body, args.t_grid)
    row = {"body": args.body.label, **{f"W_{i}": w for i, w in enumerate(fit.W)}, "residual": fit.residual}
    payload: dict[str, Any] = {**fit.model_dump(), "rows": [row]}
    if args.estimator:
        payload["degree"] = quermass.homogeneity_degree(args.estimator, args.body, args.alphas, cfg)
        payload["expected_degree"] = quermass.expected_degree(
            args.body.dim, quermass.ESTIMATORS[args.estimator][1](args.body.dim)
        )
    if args.non_quermass:
        reports = quermass.non_quermass_report(list(quermass.NON_QUERMASS_DIMS))
        payload["non_quermass"] = [r.model_dump() for r in reports]
        return payload, all(r.passed for r in reports)
    return payload, True


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    opts = SuiteOptions(
        config=cfg,
        bodies=args.body,
        corpus=args.corpus,
        count=args.n,
        trials=args.trials,
        dims=tuple(args.dims),
        progress=args.progress,
    )
    result = run_suite(args.suite, opts)
    return result.record(), not result.failed


# ----------------------------------------------------------------------------
# Parser and output
# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Root seed of every random stream")
    common.add_argument("--samples", type=int, default=None, help="Monte Carlo sample count")
    common.add_argument("--grid", type=int, default=None, help="Support-function grid size")
    common.add_argument("--c-thin", type=float, default=None, help="Thin-shell width constant")
    common.add_argument("--tol", type=tolerance_arg, action="append", help="Tolerance override KEY=VALUE")
    common.add_argument("--format", choices=["json", "csv", "table"], default="json", help="Report format")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    parser = argparse.ArgumentParser(prog="affsurf", description="L_p-affine surface areas of convex bodies")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Handler, help_text: str, body: bool = True) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        if body:
            cmd.add_argument("--body", required=True, help="Body JSON file or standard body name")
        cmd.set_defaults(handler=handler)
        return cmd

    asp = command("asp", cmd_asp, "L_p-affine surface area")
    asp.add_argument("--p", type=float, required=True)
    asp.add_argument("--method", choices=["auto", "closed", "quadrature", "floating"], default="auto")

    fl = command("floating", cmd_floating, "Convex floating body of a planar body")
    fl.add_argument("--delta", type=float, required=True)
    fl.add_argument("--limit", action="store_true", help="Also extrapolate as_1 from the floating bodies")

    command("mvee", cmd_mvee, "Löwner (minimum-volume enclosing) ellipsoid")
    command("john", cmd_john, "John (maximum-volume inscribed) ellipsoid")
    iso = command("isotropic", cmd_isotropic, "Isotropic position and constant")
    iso.add_argument("--sampled", action="store_true", help="Use hit-and-run even when exact moments exist")
    command("santalo", cmd_santalo, "Santaló point and volume product")

    ext = command("extremal", cmd_extremal, "Inner/outer extremal affine surface areas")
    ext.add_argument("--kind", choices=[k.value for k in ExtremalKind], required=True)
    ext.add_argument("--p", type=float, required=True)
    ext.add_argument("--probe", action="store_true", help="Witness sequence for a divergent or vanishing range")
    ext.add_argument("--perturb", type=float, default=None, metavar="EPS", help="Continuity smoke test")
    ext.add_argument("--monotonicity", action="store_true", help="Check the normalized map over the p-grid")

    ts = command("thinshell", cmd_thinshell, "Thin-shell mass, shell partition and S_O construction")
    ts.add_argument("--p", type=float, default=None, help="Also evaluate the truncation bound at this p")

    qm = command("quermass", cmd_quermass, "Steiner fit and homogeneity degrees")
    qm.add_argument("--t-grid", type=float, nargs="+", default=None)
    qm.add_argument("--estimator", choices=list(quermass.ESTIMATORS), default=None)
    qm.add_argument("--alphas", type=float, nargs="+", default=[0.5, 1.0, 2.0, 4.0])
    qm.add_argument("--non-quermass", action="store_true", help="Report for n = 2..6")

    ver = command("verify", cmd_verify, "Run an invariant suite", body=False)
    ver.add_argument("suite", choices=list(SUITES))
    ver.add_argument("--body", action="append", default=None)
    ver.add_argument("--corpus", default="random2d")
    ver.add_argument("--n", type=int, default=50, help="Corpus size")
    ver.add_argument("--trials", type=int, default=20)
    ver.add_argument("--dims", type=int, nargs="+", default=[3, 4, 5])
    ver.add_argument("--progress", action="store_true")
    return parser


def render_table(report: Report, console: Console | None = None) -> None:
    rows = report_rows(report)
    table = Table(title=f"affsurf {report.kind} [{report.fingerprint}]", box=box.SIMPLE_HEAVY)
    columns: list[str] = []
    for row in rows:
        columns += [k for k in row if k not in columns and not isinstance(row[k], dict | list)]
    for name in columns:
        table.add_column(name)
    for row in rows:
        table.add_row(*[format_value(row.get(name)) for name in columns])
    (console or Console()).print(table)


def emit(report: Report, fmt: OutputFormat) -> None:
    if fmt == OutputFormat.TABLE:
        render_table(report)
        return
    data = get_codec(fmt).encode(report)
    sys.stdout.write(data.decode("utf-8"))
    if not data.endswith(b"\n"):
        sys.stdout.write("\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(ExitCode.OK if not exc.code else ExitCode.INPUT_ERROR)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        force=True,
    )
    try:
        cfg = build_config(args)
        if isinstance(args.body, list):
            args.body = [body_arg(b) for b in args.body]
        elif args.body is not None:
            args.body = body_arg(args.body)
        payload, ok = args.handler(args, cfg)
    except AffsurfError as exc:
        logging.error("%s: %s", type(exc).__name__, exc)
        return int(exc.exit_code)
    except (ValidationError, ValueError) as exc:
        logging.error("%s", exc)
        return int(ExitCode.INPUT_ERROR)
    report = Report.create(args.command, payload)
    emit(report, cfg.output_format)
    if not ok:
        logging.warning("bound violation in %s", args.command)
    return int(ExitCode.OK if ok else ExitCode.BOUND_VIOLATION)


if __name__ == "__main__":
    sys.exit(main())
