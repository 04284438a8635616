"""Command-line interface: point evaluation, figure sweeps, verification."""

from __future__ import annotations

import dataclasses
import json
import os
import sys
import time

import click

from . import __version__
from .configio import config_as_dict, load_config
from .errors import ConfigError, DuomechError, NoCrossingError
from .params import steady_state
from .spectra import entanglement_degree
from .sweep import GridSpec, SweepResult, run_sweep
from .verify import run_verification

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_VERIFY = 4

#: mechanical frequency mismatch Omega2 - Omega1 (rad/s) used by each figure
FIGURE_MISMATCH = {2: 0.0, 3: 10.0, 4: 20.0}

CSV_HEADER = "omega_rad_s,temperature_K,var_u,var_v,comm_abs,E,entangled,epr"


def _default_threads() -> int:
    return int(os.environ.get("DUOMECH_THREADS", "1"))


def _fmt(x: float) -> str:
    return format(x, ".17g")


def build_manifest(config, grid: GridSpec | None, duration: float, worst_error=None) -> dict:
    manifest = {
        "tool": "duomech",
        "version": __version__,
        "config": config_as_dict(config) if config is not None else None,
        "grid": dataclasses.asdict(grid) if grid is not None else None,
        "duration_s": duration,
    }
    if worst_error is not None:
        manifest["worst_oracle_error"] = worst_error
    return manifest


def write_sweep_csv(path: str, result: SweepResult, manifest: dict) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("# manifest: " + json.dumps(manifest, sort_keys=True) + "\n")
        fh.write(CSV_HEADER + "\n")
        for point in result.iter_points():
            fh.write(
                ",".join(
                    [
                        _fmt(point.omega),
                        _fmt(point.temperature),
                        _fmt(point.var_u),
                        _fmt(point.var_v),
                        _fmt(point.comm_abs),
                        _fmt(point.entanglement_degree),
                        str(int(point.product_entangled)),
                        str(int(point.epr)),
                    ]
                )
                + "\n"
            )


def _load(config_path: str):
    try:
        return load_config(config_path)
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)


def _grid_options(fn):
    fn = click.option("--omega-center", type=float, default=None,
                      help="grid center (rad/s); default (Omega1+Omega2)/2")(fn)
    fn = click.option("--omega-halfwidth", type=float, default=100.0, show_default=True)(fn)
    fn = click.option("--omega-points", type=int, default=401, show_default=True)(fn)
    fn = click.option("--t-min", type=float, default=0.05, show_default=True)(fn)
    fn = click.option("--t-max", type=float, default=5.0, show_default=True)(fn)
    fn = click.option("--t-points", type=int, default=100, show_default=True)(fn)
    fn = click.option("--threads", type=int, default=None,
                      help="worker processes; default $DUOMECH_THREADS or 1")(fn)
    return fn


def _make_grid(config, omega_center, omega_halfwidth, omega_points, t_min, t_max, t_points):
    if omega_center is None:
        omega_center = 0.5 * (config.mirror1.omega_m + config.mirror2.omega_m)
    return GridSpec(
        omega_center=omega_center,
        omega_halfwidth=omega_halfwidth,
        omega_points=omega_points,
        t_min=t_min,
        t_max=t_max,
        t_points=t_points,
    )


@click.group()
@click.version_option(__version__)
def main():
    """Stationary entanglement between two optomechanically coupled mirror modes."""


@main.command("eval")
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--omega", type=float, required=True, help="analysis frequency (rad/s), > 0")
@click.option("--temp", type=float, default=None, help="temperature (K); default from config")
def cmd_eval(config_path, omega, temp):
    """Evaluate the spectral densities and E at one (omega, T) point."""
    config = _load(config_path)
    temperature = config.temperature if temp is None else temp
    started = time.perf_counter()
    try:
        ss = steady_state(config)
        point = entanglement_degree(config, ss, omega, temperature)
    except ValueError as exc:
        click.echo(f"numerical error: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    except DuomechError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    record = dataclasses.asdict(point)
    record["manifest"] = build_manifest(config, None, time.perf_counter() - started)
    click.echo(json.dumps(record, sort_keys=True))


@main.command("steady-state")
@click.option("--config", "config_path", required=True, type=click.Path())
def cmd_steady_state(config_path):
    """Print the semiclassical working point."""
    config = _load(config_path)
    ss = steady_state(config)
    record = {
        "beta_re": ss.beta.real,
        "beta_im": ss.beta.imag,
        "photon_number": ss.photon_number,
        "q_ss": list(ss.q_ss),
        "couplings_rad_s": list(ss.couplings),
        "effective_couplings_rad_s": list(ss.effective_couplings),
    }
    click.echo(json.dumps(record, sort_keys=True))


@main.command("figure")
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--figure-id", type=click.IntRange(2, 4), required=True,
              help="2: no mismatch, 3: 10 rad/s, 4: 20 rad/s")
@click.option("--out", "out_path", required=True, type=click.Path())
@_grid_options
def cmd_figure(config_path, figure_id, out_path,
               omega_center, omega_halfwidth, omega_points, t_min, t_max, t_points, threads):
    """Run the standard sweep for one of the three reference mismatches."""
    config = _load(config_path)
    mismatch = FIGURE_MISMATCH[figure_id]
    config = config.with_mirror2_omega(config.mirror1.omega_m + mismatch)
    grid = _make_grid(config, omega_center, omega_halfwidth, omega_points, t_min, t_max, t_points)
    started = time.perf_counter()
    try:
        result = run_sweep(config, grid, threads=threads or _default_threads())
    except DuomechError as exc:
        click.echo(f"numerical error: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    manifest = build_manifest(config, grid, time.perf_counter() - started)
    manifest["figure_id"] = figure_id
    manifest["mismatch_rad_s"] = mismatch
    try:
        write_sweep_csv(out_path, result, manifest)
    except OSError as exc:
        click.echo(f"cannot write {out_path}: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    click.echo(f"wrote {grid.omega_points * grid.t_points} points to {out_path}")


@main.command("sweep")
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--mismatch", type=float, default=None,
              help="override Omega2 - Omega1 (rad/s) before sweeping")
@_grid_options
def cmd_sweep(config_path, out_path, mismatch,
              omega_center, omega_halfwidth, omega_points, t_min, t_max, t_points, threads):
    """Run a sweep and write the CSV plus a JSON summary to stdout."""
    config = _load(config_path)
    if mismatch is not None:
        config = config.with_mirror2_omega(config.mirror1.omega_m + mismatch)
    grid = _make_grid(config, omega_center, omega_halfwidth, omega_points, t_min, t_max, t_points)
    started = time.perf_counter()
    try:
        result = run_sweep(config, grid, threads=threads or _default_threads())
    except DuomechError as exc:
        click.echo(f"numerical error: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    manifest = build_manifest(config, grid, time.perf_counter() - started)
    try:
        write_sweep_csv(out_path, result, manifest)
    except OSError as exc:
        click.echo(f"cannot write {out_path}: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    summary = {
        "manifest": manifest,
        "argmin_omega_rad_s": list(result.argmin_omega),
        "min_degree": list(result.min_degree),
        "bandwidth_rad_s": list(result.bandwidth),
        "critical_temperature_k": result.critical_temperature,
        "near_singular_points": result.near_singular_count,
    }
    click.echo(json.dumps(summary, sort_keys=True))


@main.command("verify")
@click.option("--config", "config_path", default=None, type=click.Path(),
              help="optional; recorded in the manifest, draws are random either way")
@click.option("--draws", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--tolerance", type=float, default=1e-8, show_default=True)
@click.option("--out", "out_path", default=None, type=click.Path())
def cmd_verify(config_path, draws, seed, tolerance, out_path):
    """Cross-check the closed forms against the matrix-inversion oracle."""
    config = _load(config_path) if config_path else None
    started = time.perf_counter()
    try:
        report = run_verification(draws=draws, seed=seed, tolerance=tolerance)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    payload = report.as_dict()
    payload["manifest"] = build_manifest(
        config, None, time.perf_counter() - started,
        worst_error=max(report.max_rel_error.values()),
    )
    text = json.dumps(payload, sort_keys=True, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    click.echo(text)
    if not report.passed:
        sys.exit(EXIT_VERIFY)


@main.command("critical-temperature")
@click.option("--config", "config_path", required=True, type=click.Path())
@click.option("--mismatch", type=float, default=None)
@click.option("--omega-center", type=float, default=None)
@click.option("--omega-halfwidth", type=float, default=100.0, show_default=True)
@click.option("--omega-points", type=int, default=401, show_default=True)
@click.option("--t-low", type=float, default=0.05, show_default=True)
@click.option("--t-high", type=float, default=10.0, show_default=True)
def cmd_critical_temperature(config_path, mismatch, omega_center, omega_halfwidth,
                             omega_points, t_low, t_high):
    """Locate the temperature where the entangled band closes."""
    from .sweep import find_critical_temperature

    config = _load(config_path)
    if mismatch is not None:
        config = config.with_mirror2_omega(config.mirror1.omega_m + mismatch)
    if omega_center is None:
        omega_center = 0.5 * (config.mirror1.omega_m + config.mirror2.omega_m)
    try:
        t_crit = find_critical_temperature(
            config,
            (omega_center - omega_halfwidth, omega_center + omega_halfwidth),
            omega_points=omega_points,
            t_low=t_low,
            t_high=t_high,
        )
    except NoCrossingError as exc:
        click.echo(f"numerical error: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    click.echo(json.dumps({"critical_temperature_k": t_crit}))


if __name__ == "__main__":
    main()
