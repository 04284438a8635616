"""Grid evaluation of E(omega, T) and derived scalar diagnostics.

Grid points are independent pure evaluations; rows are optionally distributed
over worker processes and always gathered in grid order, so results are
bit-identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import NoCrossingError
from .params import SteadyState, SystemConfig, steady_state
from .spectra import SpectralPoint, entanglement_degree


@dataclass(frozen=True)
class GridSpec:
    """Rectangular (omega, T) grid around the mechanical resonances.

    Defaults follow the mechanical linewidth scale: a +-100 rad/s window
    resolves 1 rad/s wide resonances and 10-20 rad/s mismatches.
    """

    omega_center: float
    omega_halfwidth: float = 100.0
    omega_points: int = 401
    t_min: float = 0.05
    t_max: float = 5.0
    t_points: int = 100
    mismatch_list: tuple[float, ...] = ()

    def __post_init__(self):
        if self.omega_points < 2 or self.t_points < 2:
            raise ValueError("omega_points and t_points must both be >= 2")
        if self.omega_center - self.omega_halfwidth <= 0.0:
            raise ValueError("omega grid must stay strictly positive (omega = 0 is degenerate)")
        if self.t_min < 0.0 or self.t_max < self.t_min:
            raise ValueError("need 0 <= t_min <= t_max")

    @property
    def omegas(self) -> np.ndarray:
        return np.linspace(
            self.omega_center - self.omega_halfwidth,
            self.omega_center + self.omega_halfwidth,
            self.omega_points,
        )

    @property
    def temperatures(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.t_points)


@dataclass(frozen=True)
class SweepResult:
    """Dense grid of spectral points plus per-temperature summaries."""

    grid: GridSpec
    points: tuple[tuple[SpectralPoint, ...], ...]  # [t_index][omega_index]
    argmin_omega: tuple[float, ...]
    min_degree: tuple[float, ...]
    bandwidth: tuple[float, ...]
    critical_temperature: float | None
    near_singular_count: int = 0

    def row(self, t_index: int) -> tuple[SpectralPoint, ...]:
        return self.points[t_index]

    def iter_points(self):
        for row in self.points:
            yield from row


def _eval_row(args) -> tuple[SpectralPoint, ...]:
    config, ss, omegas, temperature = args
    return tuple(entanglement_degree(config, ss, w, temperature) for w in omegas)


def _bandwidth(omegas: np.ndarray, degrees: np.ndarray) -> float:
    """Lebesgue measure of {omega : E < 1}, linearly interpolating crossings."""
    below = degrees < 1.0
    if not below.any():
        return 0.0
    total = 0.0
    n = len(omegas)
    for i in range(n - 1):
        e0, e1 = degrees[i], degrees[i + 1]
        w0, w1 = omegas[i], omegas[i + 1]
        if below[i] and below[i + 1]:
            total += w1 - w0
        elif below[i] != below[i + 1] and math.isfinite(e0) and math.isfinite(e1):
            frac = (1.0 - e0) / (e1 - e0)
            total += frac * (w1 - w0) if below[i] else (1.0 - frac) * (w1 - w0)
    return total


def _min_degree_at(
    config: SystemConfig, ss: SteadyState, omegas: np.ndarray, temperature: float
) -> float:
    return min(
        entanglement_degree(config, ss, w, temperature).entanglement_degree for w in omegas
    )


def _refine_critical_temperature(
    config: SystemConfig,
    ss: SteadyState,
    omegas: np.ndarray,
    t_low: float,
    t_high: float,
    resolution: float = 1e-3,
) -> float:
    """Bisect min_omega E(T) = 1 inside a bracketing temperature interval."""
    while t_high - t_low > resolution:
        t_mid = 0.5 * (t_low + t_high)
        if _min_degree_at(config, ss, omegas, t_mid) < 1.0:
            t_low = t_mid
        else:
            t_high = t_mid
    return 0.5 * (t_low + t_high)


def run_sweep(config: SystemConfig, grid: GridSpec, threads: int = 1) -> SweepResult:
    """Evaluate the full (omega, T) grid and all per-temperature summaries."""
    ss = steady_state(config)
    omegas = grid.omegas
    temps = grid.temperatures
    tasks = [(config, ss, omegas, float(t)) for t in temps]

    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_eval_row, tasks, chunksize=1))
    else:
        rows = [_eval_row(task) for task in tasks]

    argmin = []
    min_deg = []
    bandwidths = []
    singular = 0
    for row in rows:
        degrees = np.array([p.entanglement_degree for p in row])
        i = int(np.argmin(degrees))
        argmin.append(float(omegas[i]))
        min_deg.append(float(degrees[i]))
        bandwidths.append(_bandwidth(omegas, degrees))
        singular += sum(p.near_singular for p in row)

    critical = None
    for k in range(len(temps) - 1):
        if min_deg[k] < 1.0 <= min_deg[k + 1]:
            critical = _refine_critical_temperature(
                config, ss, omegas, float(temps[k]), float(temps[k + 1])
            )
            break

    return SweepResult(
        grid=grid,
        points=tuple(rows),
        argmin_omega=tuple(argmin),
        min_degree=tuple(min_deg),
        bandwidth=tuple(bandwidths),
        critical_temperature=critical,
        near_singular_count=singular,
    )


def find_critical_temperature(
    config: SystemConfig,
    omega_window: tuple[float, float],
    omega_points: int = 401,
    t_low: float = 0.0,
    t_high: float = 10.0,
    resolution: float = 1e-3,
) -> float:
    """Temperature where min_omega E crosses 1 inside the given window.

    Requires entanglement at t_low and none at t_high; raises NoCrossingError
    otherwise.  Bisection assumes monotonicity only inside the bracket.
    """
    ss = steady_state(config)
    omegas = np.linspace(omega_window[0], omega_window[1], omega_points)
    low_val = _min_degree_at(config, ss, omegas, t_low)
    high_val = _min_degree_at(config, ss, omegas, t_high)
    if not (low_val < 1.0 <= high_val):
        raise NoCrossingError(
            f"min E does not cross 1 in [{t_low}, {t_high}] K "
            f"(min E = {low_val:.4g} at {t_low} K, {high_val:.4g} at {t_high} K)"
        )
    return _refine_critical_temperature(config, ss, omegas, t_low, t_high, resolution)


@dataclass(frozen=True)
class ScalingRow:
    power_multiplier: float
    input_power: float
    min_degree: float
    bandwidth: float
    argmin_omega: float
    near_singular_count: int


def coupling_scaling_study(
    config: SystemConfig,
    power_multipliers,
    grid: GridSpec | None = None,
) -> tuple[ScalingRow, ...]:
    """Minimum E and entangled bandwidth versus drive power.

    The effective optomechanical coupling |beta| G scales with the square
    root of the input power, so this is the natural 1-D strength scan.
    """
    if grid is None:
        center = 0.5 * (config.mirror1.omega_m + config.mirror2.omega_m)
        grid = GridSpec(
            omega_center=center,
            t_min=config.temperature,
            t_max=config.temperature,
            t_points=2,
        )
    rows = []
    for mult in power_multipliers:
        if mult < 0:
            raise ValueError(f"power multiplier must be >= 0, got {mult!r}")
        scaled = config.with_input_power(config.cavity.input_power * mult)
        ss = steady_state(scaled)
        omegas = grid.omegas
        points = [
            entanglement_degree(scaled, ss, w, config.temperature) for w in omegas
        ]
        degrees = np.array([p.entanglement_degree for p in points])
        i = int(np.argmin(degrees))
        rows.append(
            ScalingRow(
                power_multiplier=float(mult),
                input_power=scaled.cavity.input_power,
                min_degree=float(degrees[i]),
                bandwidth=_bandwidth(omegas, degrees),
                argmin_omega=float(omegas[i]),
                near_singular_count=sum(p.near_singular for p in points),
            )
        )
    return tuple(rows)
