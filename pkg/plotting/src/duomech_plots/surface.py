"""Load duomech sweep CSVs and render the clipped E(omega, T) surface."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import click
import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

#: columns this component actually consumes from the sweep schema
REQUIRED_COLUMNS = ("omega_rad_s", "temperature_K", "E")

MANIFEST_PREFIX = "# manifest: "


class SchemaError(ValueError):
    """The input file does not match the sweep CSV schema."""


@dataclass(frozen=True)
class SweepTable:
    """A sweep CSV pivoted onto its rectangular (omega, T) grid."""

    omegas: np.ndarray        # shape (n_omega,), rad/s, ascending
    temperatures: np.ndarray  # shape (n_temp,), K, ascending
    degree: np.ndarray        # shape (n_temp, n_omega), E values
    manifest: dict | None = None


@dataclass(frozen=True)
class FigureSpec:
    """Everything needed to render one surface, presentation defaults included."""

    input_path: str
    output_path: str
    clip: float = 1.0
    xlabel: str = "frequency (rad/s)"
    ylabel: str = "temperature (K)"
    zlabel: str = "E"
    title: str = ""
    # the source material does not constrain the look; these defaults keep the
    # sub-unity dip facing the camera
    colormap: str = "viridis"
    elevation: float = 25.0
    azimuth: float = -130.0
    dpi: int = 150

    def __post_init__(self):
        if not self.clip > 0.0:
            raise ValueError(f"clip value must be > 0, got {self.clip!r}")


def read_sweep_csv(path: str | Path) -> SweepTable:
    """Parse a sweep CSV (with optional leading manifest comment) onto its grid."""
    path = Path(path)
    manifest = None
    with path.open(newline="") as fh:
        position = fh.tell()
        while True:
            line = fh.readline()
            if not line.startswith("#"):
                fh.seek(position)
                break
            if line.startswith(MANIFEST_PREFIX):
                manifest = json.loads(line[len(MANIFEST_PREFIX):])
            position = fh.tell()
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in REQUIRED_COLUMNS:
            if column not in header:
                raise SchemaError(
                    f"{path}: missing required column {column!r} "
                    f"(found: {', '.join(header) or 'none'})"
                )
        rows = [
            (float(r["omega_rad_s"]), float(r["temperature_K"]), float(r["E"]))
            for r in reader
        ]
    if not rows:
        raise SchemaError(f"{path}: no data rows")

    omegas = np.unique([r[0] for r in rows])
    temps = np.unique([r[1] for r in rows])
    degree = np.full((len(temps), len(omegas)), np.nan)
    omega_index = {w: i for i, w in enumerate(omegas)}
    temp_index = {t: i for i, t in enumerate(temps)}
    for w, t, e in rows:
        degree[temp_index[t], omega_index[w]] = e
    if np.isnan(degree).any():
        raise SchemaError(f"{path}: rows do not fill a rectangular (omega, T) grid")
    return SweepTable(omegas=omegas, temperatures=temps, degree=degree,
                      manifest=manifest)


def clipped_grid(table: SweepTable, clip: float) -> np.ndarray:
    """E values capped at the clip ceiling (infinities land on the ceiling too)."""
    return np.minimum(np.nan_to_num(table.degree, posinf=clip), clip)


def render_surface(spec: FigureSpec) -> str:
    """Render the clipped surface described by spec; returns the output path."""
    table = read_sweep_csv(spec.input_path)
    height = clipped_grid(table, spec.clip)
    omega_mesh, temp_mesh = np.meshgrid(table.omegas, table.temperatures)

    fig = plt.figure(figsize=(8.0, 6.0))
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(
        omega_mesh,
        temp_mesh,
        height,
        cmap=spec.colormap,
        vmin=0.0,
        vmax=spec.clip,
        linewidth=0,
        antialiased=True,
    )
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    ax.set_zlabel(spec.zlabel)
    ax.set_zlim(0.0, spec.clip)
    if spec.title:
        ax.set_title(spec.title)
    ax.view_init(elev=spec.elevation, azim=spec.azimuth)
    fig.tight_layout()
    # strip the writer metadata so identical inputs give identical bytes
    fig.savefig(spec.output_path, dpi=spec.dpi, metadata={"Software": None})
    plt.close(fig)
    return spec.output_path


@click.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True),
              help="sweep CSV written by the duomech CLI")
@click.option("--output", "output_path", required=True, type=click.Path(),
              help="image file to write (format from the extension)")
@click.option("--clip", type=float, default=1.0, show_default=True,
              help="ceiling at which the surface is cut (1 = separability "
                   "boundary, 0.25 = EPR region only)")
@click.option("--title", default="", help="optional figure title")
def main(input_path, output_path, clip, title):
    """Render a clipped E(omega, T) surface from a duomech sweep CSV."""
    try:
        spec = FigureSpec(input_path=input_path, output_path=output_path,
                          clip=clip, title=title)
        render_surface(spec)
    except (SchemaError, ValueError, OSError) as exc:
        raise click.ClickException(str(exc))
    click.echo(f"wrote {output_path}")


if __name__ == "__main__":
    main()
