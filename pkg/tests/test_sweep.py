"""Grid sweeps, entangled bandwidth, critical temperature, power scaling."""

import numpy as np
import pytest

from duomech import (
    GridSpec,
    NoCrossingError,
    coupling_scaling_study,
    find_critical_temperature,
    run_sweep,
)
from duomech.sweep import _bandwidth

SMALL = dict(omega_center=1e6, omega_halfwidth=100.0, omega_points=41,
             t_min=0.05, t_max=5.0, t_points=8)


def test_grid_axes():
    grid = GridSpec(**SMALL)
    assert len(grid.omegas) == 41
    assert grid.omegas[0] == pytest.approx(1e6 - 100.0)
    assert grid.omegas[-1] == pytest.approx(1e6 + 100.0)
    assert len(grid.temperatures) == 8
    assert grid.temperatures[0] == 0.05 and grid.temperatures[-1] == 5.0


def test_grid_validation():
    with pytest.raises(ValueError, match=">= 2"):
        GridSpec(omega_center=1e6, omega_points=1)
    with pytest.raises(ValueError, match="strictly positive"):
        GridSpec(omega_center=50.0, omega_halfwidth=100.0)
    with pytest.raises(ValueError, match="t_min"):
        GridSpec(omega_center=1e6, t_min=2.0, t_max=1.0)


def test_bandwidth_measures_sub_unity_set():
    omegas = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
    # crossing from 1.5 down to 0.5 midway between 1 and 2, back up after 3
    degrees = np.array([1.5, 1.5, 0.5, 0.5, 1.5])
    assert _bandwidth(omegas, degrees) == pytest.approx(2.0)
    assert _bandwidth(omegas, np.full(5, 2.0)) == 0.0
    assert _bandwidth(omegas, np.full(5, 0.5)) == pytest.approx(4.0)


def test_sweep_shape_and_summaries(reference_config):
    result = run_sweep(reference_config, GridSpec(**SMALL))
    assert len(result.points) == 8
    assert all(len(row) == 41 for row in result.points)
    assert len(result.argmin_omega) == 8
    # entanglement degrades monotonically with temperature on this window
    assert list(result.min_degree) == sorted(result.min_degree)
    # bandwidth shrinks (weakly) as T rises
    bw = list(result.bandwidth)
    assert all(b0 >= b1 - 1e-9 for b0, b1 in zip(bw, bw[1:]))
    assert result.near_singular_count == 0


def test_sweep_is_deterministic_across_workers(reference_config):
    grid = GridSpec(omega_center=1e6, omega_halfwidth=50.0, omega_points=11,
                    t_min=0.1, t_max=2.0, t_points=4)
    serial = run_sweep(reference_config, grid, threads=1)
    parallel = run_sweep(reference_config, grid, threads=2)
    assert serial.points == parallel.points
    assert serial == parallel


def test_sweep_refines_critical_temperature(reference_config):
    result = run_sweep(reference_config, GridSpec(**SMALL))
    t_crit = result.critical_temperature
    assert t_crit is not None
    direct = find_critical_temperature(reference_config, (1e6 - 100.0, 1e6 + 100.0),
                                       omega_points=41, t_low=0.05, t_high=5.0)
    assert t_crit == pytest.approx(direct, abs=2e-3)


def test_grid_refinement_stability(reference_config):
    coarse = GridSpec(omega_center=1e6, omega_halfwidth=100.0, omega_points=101,
                      t_min=0.1, t_max=0.1001, t_points=2)
    fine = GridSpec(omega_center=1e6, omega_halfwidth=100.0, omega_points=201,
                    t_min=0.1, t_max=0.1001, t_points=2)
    r_coarse = run_sweep(reference_config, coarse)
    r_fine = run_sweep(reference_config, fine)
    coarse_step = 2.0
    assert abs(r_coarse.argmin_omega[0] - r_fine.argmin_omega[0]) <= coarse_step
    assert r_fine.bandwidth[0] == pytest.approx(r_coarse.bandwidth[0], rel=0.05)


def test_critical_temperature_bracket_required(reference_config):
    dark = reference_config.with_input_power(0.0)
    with pytest.raises(NoCrossingError):
        # E > 1 on the whole bracket without a drive
        find_critical_temperature(dark, (1e6 - 100.0, 1e6 + 100.0),
                                  omega_points=21, t_low=1.0, t_high=5.0)


def test_critical_temperature_resolution(reference_config):
    window = (1e6 - 100.0, 1e6 + 100.0)
    t_a = find_critical_temperature(reference_config, window, omega_points=41,
                                    t_low=0.05, t_high=5.0, resolution=1e-3)
    t_b = find_critical_temperature(reference_config, window, omega_points=41,
                                    t_low=0.05, t_high=5.0, resolution=1e-4)
    assert t_a == pytest.approx(t_b, abs=2e-3)


def test_coupling_scaling_study(reference_config):
    cold = reference_config.with_temperature(1.0)
    grid = GridSpec(omega_center=1e6, omega_halfwidth=100.0, omega_points=41,
                    t_min=1.0, t_max=1.0, t_points=2)
    rows = coupling_scaling_study(cold, [0.0, 1.0, 4.0], grid=grid)
    assert [r.power_multiplier for r in rows] == [0.0, 1.0, 4.0]
    # no drive: no entanglement at all
    assert rows[0].min_degree >= 1.0
    assert rows[0].bandwidth == 0.0
    # stronger drive at fixed T deepens the dip
    assert rows[2].min_degree < rows[1].min_degree < 1.0


def test_coupling_scaling_rejects_negative_multiplier(reference_config):
    with pytest.raises(ValueError, match="multiplier"):
        coupling_scaling_study(reference_config, [-1.0])
