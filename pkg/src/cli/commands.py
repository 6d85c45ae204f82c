"""Command-line front end: one subcommand per pipeline, deterministic file outputs."""
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Tuple

import click
import pandas as pd
import yaml
from pydantic import BaseModel, ConfigDict, Field
from rich.console import Console
from rich.logging import RichHandler

from ..checks.threshold_checks import CheckManager, ResidualCheck
from ..completion.fit import fit_first_integral
from ..completion.solver import CompletionProblem, complete as solve_completion
from ..config import Config
from ..errors import (
    ConvergenceError,
    GeometryError,
    InvalidInputError,
    InvariantViolationError,
    ResidualCheckError,
)
from ..extremal.profiles import (
    CurvatureProfile,
    ExtremalSpec,
    Family,
    curvature_profile,
    default_margin,
    sampling_window,
)
from ..extremal.reconstruct import curve_from_profile_quadrature, curve_from_turning_angle
from ..extremal.residuals import (
    first_integral_residual,
    killing_norm_defect,
    sampled_el_residual,
    shape_summary,
    theta_energy,
)
from ..lift.horizontal import horizontal_vertical_split, horizontality_residual, lift as lift_curve, sr_length
from ..storage.exporter import DataExporter, read_curve_csv
from ..storage.svg import render_svg
from ..surfaces.obj_export import export_obj
from ..surfaces.revolution import RevolutionSurface, angle_grid, evolve, surface_metadata
from .summary import RunSummary
from .sweep import curvature_error, default_workers, profile_residuals, run_sweep

logger = logging.getLogger(__name__)

PROG_NAME = "curvekit"
SUBCOMMANDS = ("extremal", "complete", "lift", "surface", "verify", "sweep")
DEFAULT_CONFIG = "config.yaml"


class CliConfig(BaseModel):
    """Validated invocation: one subcommand with its resolved parameters."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    subcommand: Literal["extremal", "complete", "lift", "surface", "verify", "sweep"]
    params: Dict[str, Any] = Field(default_factory=dict)
    out_prefix: str
    force: bool = False
    svg: bool = False
    verbose: bool = False
    export_dir: str = "."
    float_format: str = "%.17g"
    obj_digits: int = 9
    thresholds: Dict[str, float] = Field(default_factory=dict)


class PointType(click.ParamType):
    """A planar point written as ``x,y``."""

    name = "point"

    def convert(self, value, param, ctx):
        if isinstance(value, (tuple, list)):
            return tuple(float(v) for v in value)
        try:
            x, y = (float(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"expected x,y but got {value!r}", param, ctx)
        return (x, y)


class FloatListType(click.ParamType):
    """Comma-separated floats."""

    name = "floats"

    def convert(self, value, param, ctx):
        if isinstance(value, (tuple, list)):
            return [float(v) for v in value]
        try:
            values = [float(part) for part in str(value).split(",") if part.strip()]
        except ValueError:
            self.fail(f"expected comma-separated numbers but got {value!r}", param, ctx)
        if not values:
            self.fail("expected at least one value", param, ctx)
        return values


POINT = PointType()
FLOAT_LIST = FloatListType()


def _load_config(config_path: Optional[str]) -> Config:
    """Defaults layered under --config, or under ./config.yaml when it exists."""
    try:
        return Config(config_path or DEFAULT_CONFIG)
    except (ValueError, yaml.YAMLError) as e:
        raise click.BadParameter(str(e), param_hint="'--config'") from e


def _pick(flag, cfg: Config, key: str, default=None):
    return flag if flag is not None else cfg.get(key, default)


def _validated_spec(a: float, d: float, family: str) -> ExtremalSpec:
    try:
        return ExtremalSpec(a, d, family)
    except InvariantViolationError as e:
        hint = "'--a'" if "a > 0" in str(e) else "'--d'"
        raise click.BadParameter(str(e), param_hint=hint) from e


def _resolve_margin(spec: ExtremalSpec, margin: Optional[float], cfg: Config, tail_kappa: float) -> float:
    if margin is None:
        return default_margin(spec, cfg.get("sampling.margin_fraction", 1e-3), tail_kappa)
    lo, hi = sampling_window(spec, tail_kappa)
    if not (0 < margin < (hi - lo) / 2):
        raise click.BadParameter(f"margin must lie in (0, {(hi - lo) / 2:.6g})", param_hint="'--margin'")
    return float(margin)


def _make_config(subcommand: str, params: Dict, cfg: Config, out_prefix: str, force: bool,
                 svg: bool = False, verbose: bool = False) -> CliConfig:
    export = cfg.get_export_config()
    return CliConfig(
        subcommand=subcommand,
        params=params,
        out_prefix=out_prefix,
        force=force,
        svg=svg,
        verbose=verbose,
        export_dir=str(export.get("directory", ".")),
        float_format=str(export.get("float_format", "%.17g")),
        obj_digits=int(export.get("obj_digits", 9)),
        thresholds={k: float(v) for k, v in cfg.get_thresholds().items()},
    )


def output_options(f):
    """Options shared by every subcommand."""
    f = click.option('--verbose', '-v', is_flag=True, help='Log debug messages')(f)
    f = click.option('--config', '-c', 'config_path', default=None,
                     type=click.Path(exists=True, dir_okay=False),
                     help='YAML or key=value file overriding the defaults [default: ./config.yaml]')(f)
    f = click.option('--force', is_flag=True, help='Overwrite existing output files')(f)
    f = click.option('--out-prefix', '-o', required=True, help='Path prefix of the output files')(f)
    return f


def spec_options(f):
    """The (a, d, family) triple of a closed-form extremal."""
    f = click.option('--tail-kappa', type=float, default=None,
                     help='Exp family: truncate where |kappa| < tail_kappa * a')(f)
    f = click.option('--margin', type=float, default=None,
                     help='Distance kept from the domain ends (default: fraction of the width)')(f)
    f = click.option('--family', required=True,
                     type=click.Choice([fam.value for fam in Family], case_sensitive=False),
                     help='Curvature family')(f)
    f = click.option('--d', 'd', type=float, required=True, help='Family parameter, d > a^2')(f)
    f = click.option('--a', 'a', type=float, required=True, help='Energy parameter, a > 0')(f)
    return f


@click.group()
@click.version_option(version="1.0.0")
def cli():
    """Critical curves of the total-curvature energy, curve completion and pseudospheres."""


@cli.command()
@spec_options
@click.option('--samples', '-n', type=int, default=None, help='Number of curve samples (>= 16)')
@click.option('--method', type=click.Choice(['quadrature', 'turning']), default='quadrature',
              help='Reconstruction: (r, z) quadrature or turning-angle integration')
@click.option('--svg', is_flag=True, help='Also write an SVG plot of the curve')
@output_options
def extremal(a, d, family, margin, tail_kappa, samples, method, svg, out_prefix, force, config_path, verbose):
    """Synthesize a closed-form critical curve."""
    cfg = _load_config(config_path)
    spec = _validated_spec(a, d, family)
    samples = int(_pick(samples, cfg, "sampling.curve_samples", 2048))
    if samples < 16:
        raise click.BadParameter("need at least 16 samples", param_hint="'--samples'")
    tail_kappa = float(_pick(tail_kappa, cfg, "sampling.exp_tail_kappa", 1e-3))
    margin = _resolve_margin(spec, margin, cfg, tail_kappa)
    params = {**spec.to_dict(), "samples": samples, "margin": margin, "tail_kappa": tail_kappa, "method": method}
    return _make_config("extremal", params, cfg, out_prefix, force, svg, verbose)


@cli.command()
@click.option('--p', 'p', type=POINT, default=None, help='Start point x,y')
@click.option('--q', 'q', type=POINT, default=None, help='End point x,y')
@click.option('--theta0', type=float, default=None, help='Tangent angle at p (radians)')
@click.option('--theta1', type=float, default=None, help='Tangent angle at q (radians)')
@click.option('--a', 'a', type=float, default=None, help='Energy parameter, a > 0')
@click.option('--nodes', type=int, default=None, help='Polyline vertex count (>= 8)')
@click.option('--max-iters', type=int, default=None, help='Iteration cap')
@click.option('--step0', type=float, default=None, help='Initial step size')
@click.option('--tol', type=float, default=None, help='Tolerance on the projected-gradient norm')
@click.option('--metric', type=click.Choice(['sobolev', 'euclidean']), default=None, help='Descent metric')
@click.option('--problem', type=click.Path(exists=True, dir_okay=False), default=None,
              help='JSON file with the problem; flags override its fields')
@click.option('--svg', is_flag=True, help='Also write an SVG plot of the curve')
@output_options
def complete(p, q, theta0, theta1, a, nodes, max_iters, step0, tol, metric, problem, svg,
             out_prefix, force, config_path, verbose):
    """Solve a curve completion problem by gradient descent."""
    cfg = _load_config(config_path)
    solver_cfg = cfg.get_solver_config()
    merged = {k: solver_cfg[k] for k in ("nodes", "max_iters", "step0", "tol", "metric") if k in solver_cfg}
    if problem:
        try:
            merged.update(json.loads(Path(problem).read_text()))
        except json.JSONDecodeError as e:
            raise click.BadParameter(f"not valid JSON: {e}", param_hint="'--problem'") from e
    flags = {"p": p, "q": q, "theta0": theta0, "theta1": theta1, "a": a, "nodes": nodes,
             "max_iters": max_iters, "step0": step0, "tol": tol, "metric": metric}
    merged.update({k: v for k, v in flags.items() if v is not None})
    for name in ("p", "q", "theta0", "theta1", "a"):
        if name not in merged:
            raise click.UsageError(f"Missing option '--{name}'.")
    try:
        parsed = CompletionProblem.from_dict(merged)
    except InvalidInputError as e:
        raise click.BadParameter(str(e)) from e
    if parsed.a == 0:
        raise click.BadParameter("a = 0 makes the completion problem trivial", param_hint="'--a'")
    return _make_config("complete", parsed.model_dump(mode="json"), cfg, out_prefix, force, svg, verbose)


@cli.command()
@click.option('--curve', 'curve_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Curve CSV (s,x,y,theta,kappa)')
@click.option('--a', 'a', type=float, default=1.0, show_default=True, help='Planar weight of the lifted metric')
@output_options
def lift(curve_path, a, out_prefix, force, config_path, verbose):
    """Lift a planar curve to R^2 x S^1."""
    cfg = _load_config(config_path)
    if not a > 0:
        raise click.BadParameter("a must be positive", param_hint="'--a'")
    return _make_config("lift", {"curve": curve_path, "a": a}, cfg, out_prefix, force, verbose=verbose)


@cli.command()
@spec_options
@click.option('--n-s', type=int, default=None, help='Profile samples (>= 32, even for sinh)')
@click.option('--n-angle', type=int, default=None, help='Angular samples (>= 8)')
@click.option('--sector', type=float, default=None, help='Swept angle in radians; < 2 pi leaves the mesh open')
@output_options
def surface(a, d, family, margin, tail_kappa, n_s, n_angle, sector, out_prefix, force, config_path, verbose):
    """Sweep an extremal into a constant-curvature surface and export it as OBJ."""
    cfg = _load_config(config_path)
    spec = _validated_spec(a, d, family)
    n_s = int(_pick(n_s, cfg, "surface.n_s", 2048))
    n_angle = int(_pick(n_angle, cfg, "surface.n_angle", 64))
    sector = float(_pick(sector, cfg, "surface.sector", 2 * math.pi))
    if n_s < 32:
        raise click.BadParameter("need at least 32 profile samples", param_hint="'--n-s'")
    if spec.family is Family.SINH and n_s % 2:
        raise click.BadParameter("conic profiles need an even sample count", param_hint="'--n-s'")
    if n_angle < 8:
        raise click.BadParameter("need at least 8 angular samples", param_hint="'--n-angle'")
    if not (0 < sector <= 2 * math.pi + 1e-12):
        raise click.BadParameter("sector must lie in (0, 2 pi]", param_hint="'--sector'")
    tail_kappa = float(_pick(tail_kappa, cfg, "sampling.exp_tail_kappa", 1e-3))
    margin = _resolve_margin(spec, margin, cfg, tail_kappa)
    params = {**spec.to_dict(), "n_s": n_s, "n_angle": n_angle, "sector": min(sector, 2 * math.pi),
              "margin": margin, "tail_kappa": tail_kappa}
    return _make_config("surface", params, cfg, out_prefix, force, verbose=verbose)


@cli.command()
@click.option('--curve', 'curve_path', required=True, type=click.Path(exists=True, dir_okay=False),
              help='Curve CSV (s,x,y,theta,kappa)')
@click.option('--meta', 'meta_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Metadata JSON (default: the sibling <prefix>.meta.json when present)')
@click.option('--a', 'a', type=float, default=None, help='Energy parameter (default: from metadata)')
@click.option('--delta', type=float, default=None, help='First-integral constant (default: from metadata)')
@click.option('--fit-delta', is_flag=True, help='Fit the first-integral constant instead')
@click.option('--meridian/--no-meridian', default=None,
              help='Treat the curve as a surface profile (x = radius) and check K = -a^2')
@output_options
def verify(curve_path, meta_path, a, delta, fit_delta, meridian, out_prefix, force, config_path, verbose):
    """Check a sampled curve against the critical-curve identities."""
    cfg = _load_config(config_path)
    if meta_path is None:
        sibling = Path(str(curve_path).replace(".curve.csv", ".meta.json"))
        if sibling.exists() and sibling != Path(curve_path):
            meta_path = str(sibling)
    meta = json.loads(Path(meta_path).read_text()) if meta_path else {}
    a = a if a is not None else meta.get("a")
    if a is None:
        raise click.UsageError("Missing option '--a' (no metadata found).")
    if not a > 0:
        raise click.BadParameter("a must be positive", param_hint="'--a'")
    if not fit_delta:
        delta = delta if delta is not None else meta.get("delta")
        if delta is None:
            raise click.UsageError("Missing option '--delta' (or pass --fit-delta).")
    if meridian is None:
        meridian = meta.get("method") == "quadrature"
    params = {"curve": curve_path, "meta": meta_path, "a": float(a),
              "delta": None if fit_delta else float(delta), "fit_delta": fit_delta, "meridian": bool(meridian)}
    return _make_config("verify", params, cfg, out_prefix, force, verbose=verbose)


@cli.command()
@click.option('--family', required=True, type=click.Choice([fam.value for fam in Family], case_sensitive=False),
              help='Curvature family')
@click.option('--a-values', required=True, type=FLOAT_LIST, help='Comma-separated values of a')
@click.option('--d-ratios', required=True, type=FLOAT_LIST, help='Comma-separated values of d / a^2')
@click.option('--samples', '-n', type=int, default=None, help='Samples per cell')
@click.option('--workers', '-w', type=int, default=None, help='Worker processes (0: physical cores)')
@output_options
def sweep(family, a_values, d_ratios, samples, workers, out_prefix, force, config_path, verbose):
    """Synthesize and verify every cell of an (a, d) grid."""
    cfg = _load_config(config_path)
    samples = int(_pick(samples, cfg, "sampling.curve_samples", 2048))
    if samples < 32:
        raise click.BadParameter("need at least 32 samples", param_hint="'--samples'")
    if family == Family.SINH.value and samples % 2:
        raise click.BadParameter("conic profiles need an even sample count", param_hint="'--samples'")
    tail_kappa = float(cfg.get("sampling.exp_tail_kappa", 1e-3))
    cells = []
    for a in a_values:
        for ratio in d_ratios:
            spec = _validated_spec(a, ratio * a * a, family)
            cells.append({**spec.to_dict(), "samples": samples, "tail_kappa": tail_kappa,
                          "margin_fraction": float(cfg.get("sampling.margin_fraction", 1e-3))})
    workers = default_workers(int(_pick(workers, cfg, "sweep.workers", 0)))
    return _make_config("sweep", {"cells": cells, "workers": workers}, cfg, out_prefix, force, verbose=verbose)


def parse_args(argv: Optional[Sequence[str]] = None):
    """
    Parse a command line into a CliConfig.

    Returns:
        CliConfig, or an exit code when click handled the call itself
        (``--help``, ``--version``)

    Raises:
        click.ClickException: usage errors, naming the offending flag
    """
    return cli.main(args=list(argv) if argv is not None else None, prog_name=PROG_NAME, standalone_mode=False)


@dataclass
class Outcome:
    """What a subcommand produced."""

    outputs: List[Tuple[str, Dict[str, Any]]]
    values: Dict[str, Any]
    checks: List[ResidualCheck] = field(default_factory=list)
    failure: Optional[GeometryError] = None


def _run_extremal(config: CliConfig) -> Outcome:
    p = config.params
    spec = ExtremalSpec(p["a"], p["d"], p["family"])
    profile = curvature_profile(spec, p["samples"], margin=p["margin"], tail_kappa=p["tail_kappa"])
    if p["method"] == "quadrature":
        curve = curve_from_profile_quadrature(profile)
    else:
        curve = curve_from_turning_angle(profile)
    residuals = profile_residuals(profile)
    checks = CheckManager(config.thresholds).check_all(residuals)
    energy = theta_energy(curve, spec.a)
    meta = {
        **profile.sidecar(),
        "method": p["method"],
        "samples": profile.n,
        "margin": p["margin"],
        "tail_kappa": p["tail_kappa"],
        "shape": shape_summary(profile),
        "theta_energy": energy,
        "residuals": residuals,
    }
    artifacts = {"curve": curve, "profile": profile, "meta": meta}
    if config.svg:
        artifacts["svg"] = render_svg(curve)
    values = {"family": spec.family.value, "a": spec.a, "d": spec.d, "delta": profile.delta,
              "samples": profile.n, "theta_energy": energy}
    return Outcome([(config.out_prefix, artifacts)], values, checks)


def _run_complete(config: CliConfig) -> Outcome:
    problem = CompletionProblem.model_validate(config.params)
    curve, report = solve_completion(problem)
    document = {**report.to_dict(), "problem": problem.model_dump(mode="json")}
    artifacts = {"curve": curve, "report": document}
    if config.svg:
        artifacts["svg"] = render_svg(curve)
    checks = []
    if report.first_integral_residual is not None:
        checks = CheckManager(config.thresholds).check_all(
            {"fitted_first_integral": report.first_integral_residual}
        )
    failure = None
    if not report.converged:
        failure = ConvergenceError(
            f"solver stopped after {report.iterations} iterations with |grad| = {report.gradient_norm:.3e}"
        )
    values = {"iterations": report.iterations, "final_energy": report.final_energy,
              "gradient_norm": report.gradient_norm, "fitted_delta": report.fitted_delta,
              "converged": report.converged, "winding": report.winding}
    return Outcome([(config.out_prefix, artifacts)], values, checks, failure)


def _run_lift(config: CliConfig) -> Outcome:
    a = config.params["a"]
    lifted = lift_curve(read_curve_csv(config.params["curve"]))
    planar, fiber = horizontal_vertical_split(lifted, a)
    meta = {
        **lifted.sidecar(),
        "a": a,
        "samples": lifted.n,
        "horizontality_residual": horizontality_residual(lifted),
        "sr_length": sr_length(lifted, a),
        "planar_part": planar,
        "fiber_part": fiber,
    }
    values = {k: meta[k] for k in ("samples", "winding", "horizontality_residual", "sr_length")}
    return Outcome([(config.out_prefix, {"lifted": lifted, "meta": meta})], values)


def _run_surface(config: CliConfig) -> Outcome:
    p = config.params
    spec = ExtremalSpec(p["a"], p["d"], p["family"])
    surf = evolve(spec, p["n_s"], p["n_angle"], margin=p["margin"], sector=p["sector"], tail_kappa=p["tail_kappa"])
    meta = {**surface_metadata(surf), "sector": p["sector"], "margin": p["margin"]}
    checks = CheckManager(config.thresholds).check_all({"gaussian_curvature": meta["K_measured_max_err"]})
    mesh = export_obj(surf, config.obj_digits)
    values = {k: meta[k] for k in ("surface_type", "a", "d", "delta", "angular_rate", "K_target", "r_max", "r_bound")}
    return Outcome([(config.out_prefix, {"mesh": mesh, "meta": meta})], values, checks)


def _run_verify(config: CliConfig) -> Outcome:
    p = config.params
    curve = read_curve_csv(p["curve"])
    a = p["a"]
    diagnostics = {"unit_speed_chord": curve.speed_defect(), "theta_energy": theta_energy(curve, a)}
    if p["fit_delta"]:
        delta_hat, residual = fit_first_integral(curve, a)
        residuals = {"fitted_first_integral": residual}
        diagnostics["fitted_delta"] = delta_hat
    else:
        profile = CurvatureProfile.from_samples(curve.s, curve.kappa, a, p["delta"])
        residuals = {
            "first_integral": first_integral_residual(profile),
            "el": sampled_el_residual(curve, a),
            "killing_norm": killing_norm_defect(profile),
            "unit_speed": curve.speed_defect(),
        }
    if p["meridian"]:
        meridian = RevolutionSurface(meridian=curve, angles=angle_grid(8), a=a)
        residuals["gaussian_curvature"] = curvature_error(meridian, a)

    manager = CheckManager(config.thresholds)
    checks = manager.check_all(residuals)
    passed = not manager.failed()
    report = {
        "source": p["curve"],
        "a": a,
        "delta": p["delta"],
        "residuals": residuals,
        "diagnostics": diagnostics,
        "checks": [c.to_dict() for c in checks],
        "passed": passed,
    }
    failure = None if passed else ResidualCheckError(
        "residuals above bound: " + ", ".join(c.metric for c in manager.failed())
    )
    values = {"source": p["curve"], "a": a, "delta": p["delta"], **diagnostics, "passed": passed}
    return Outcome([(config.out_prefix, {"report": report})], values, checks, failure)


def _run_sweep(config: CliConfig) -> Outcome:
    cells = config.params["cells"]
    results = run_sweep(cells, config.params["workers"])
    manager = CheckManager(config.thresholds)
    outputs = []
    rows = []
    failed = 0
    for result in results:
        row = dict(result["row"])
        checks = manager.check_all(result["residuals"])
        row["passed"] = all(c.passed for c in checks)
        failed += not row["passed"]
        rows.append(row)
        cell_prefix = f"{config.out_prefix}.a{row['a']:g}_d{row['d']:g}"
        outputs.append((cell_prefix, {"curve": result["curve"], "meta": result["meta"]}))
    outputs.append((config.out_prefix, {"summary": pd.DataFrame(rows)}))
    failure = ResidualCheckError(f"{failed} of {len(rows)} cells failed their checks") if failed else None
    values = {"family": cells[0]["family"], "cells": len(rows), "failed": failed,
              "workers": config.params["workers"]}
    return Outcome(outputs, values, failure=failure)


HANDLERS: Dict[str, Callable[[CliConfig], Outcome]] = {
    "extremal": _run_extremal,
    "complete": _run_complete,
    "lift": _run_lift,
    "surface": _run_surface,
    "verify": _run_verify,
    "sweep": _run_sweep,
}


def write_outputs(exporter: DataExporter, outputs: List[Tuple[str, Dict[str, Any]]], force: bool) -> Dict[str, str]:
    """
    Write every (prefix, artifacts) pair; nothing is written if any target exists without ``force``.

    Returns:
        Mapping of "<prefix>:<artifact>" to written path
    """
    if not force:
        existing = [
            str(path)
            for prefix, artifacts in outputs
            for path in exporter.output_paths(artifacts.keys(), prefix).values()
            if path.exists()
        ]
        if existing:
            raise FileExistsError(f"refusing to overwrite {', '.join(existing)} (use --force)")
    written = {}
    for prefix, artifacts in outputs:
        for key, path in exporter.write_outputs(artifacts, prefix, force=True).items():
            written[f"{Path(prefix).name}:{key}"] = path
    return written


def run(config: CliConfig) -> int:
    """
    Execute a parsed invocation.

    Returns:
        0 on success, 1 on usage or file-system errors, 2 on numeric failure
    """
    exporter = DataExporter(config.export_dir, config.float_format)
    try:
        outcome = HANDLERS[config.subcommand](config)
        written = write_outputs(exporter, outcome.outputs, config.force)
    except OSError as e:
        logger.error(str(e))
        return 1
    except (GeometryError, ValueError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return 2

    RunSummary().display(config.subcommand, outcome.values, outcome.checks, written)
    if outcome.failure is not None:
        logger.error("%s: %s", type(outcome.failure).__name__, outcome.failure)
        return 2
    return 0


def setup_logging(verbose: bool = False):
    """Route log records through rich on stderr."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, run and return the process exit code."""
    setup_logging()
    try:
        config = parse_args(argv)
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    if not isinstance(config, CliConfig):
        return int(config or 0)
    if config.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    return run(config)
