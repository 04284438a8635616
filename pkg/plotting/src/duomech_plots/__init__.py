"""Surface plots of E(omega, T) from duomech sweep CSV files.

This package never recomputes any physics: it consumes the CSV schema
written by the `duomech figure` and `duomech sweep` commands and renders
the degree-of-entanglement surface, clipped at a ceiling (by default the
separability boundary E = 1).
"""

__version__ = "0.1.0"

from .surface import (
    FigureSpec,
    SchemaError,
    SweepTable,
    clipped_grid,
    read_sweep_csv,
    render_surface,
)

__all__ = [
    "FigureSpec",
    "SchemaError",
    "SweepTable",
    "clipped_grid",
    "read_sweep_csv",
    "render_surface",
]
