"""Randomized cross-validation of the closed forms against the matrix oracle."""

from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np

from .oracle import build_system, oracle_densities
from .params import CavityParams, MechanicalMode, SystemConfig, steady_state
from .response import assemble_transfer
from .spectra import commutator_density, variance_u, variance_v

#: sampling ranges for random draws (log-uniform unless stated otherwise)
DRAW_RANGES = {
    "mass_kg": (1e-6, 1e-1),
    "omega_m_rad_s": (1e5, 1e7),
    "gamma_m_rad_s": (1e-1, 1e3),
    "kappa_rad_s": (1e5, 1e8),
    "detuning_rad_s": (-2e7, 2e7),       # uniform
    "wavelength_m": (4e-7, 1.6e-6),
    "path_length_m": (1e-4, 1e-1),
    "power_w": (0.0, 10.0),              # uniform
    "temperature_k": (0.0, 300.0),       # uniform
    "omega_rad_s": (1e4, 1e8),
}

QUANTITIES = ("var_u", "var_v", "comm_abs")


@dataclass(frozen=True)
class VerificationReport:
    draws: int
    seed: int
    max_rel_error: dict
    worst_draw: dict
    tolerance: float
    passed: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _log_uniform(rng, lo, hi):
    return float(np.exp(rng.uniform(np.log(lo), np.log(hi))))


def random_draw(rng) -> tuple[SystemConfig, float, float]:
    """One random (config, omega, T) sample from the documented ranges."""
    r = DRAW_RANGES
    mirrors = [
        MechanicalMode(
            mass=_log_uniform(rng, *r["mass_kg"]),
            omega_m=_log_uniform(rng, *r["omega_m_rad_s"]),
            gamma_m=_log_uniform(rng, *r["gamma_m_rad_s"]),
        )
        for _ in range(2)
    ]
    cavity = CavityParams(
        wavelength=_log_uniform(rng, *r["wavelength_m"]),
        path_length=_log_uniform(rng, *r["path_length_m"]),
        kappa=_log_uniform(rng, *r["kappa_rad_s"]),
        detuning=float(rng.uniform(*r["detuning_rad_s"])),
        input_power=float(rng.uniform(*r["power_w"])),
    )
    temperature = float(rng.uniform(*r["temperature_k"]))
    omega = _log_uniform(rng, *r["omega_rad_s"])
    config = SystemConfig(mirrors[0], mirrors[1], cavity, temperature)
    return config, omega, temperature


def relative_error(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


def closed_form_densities(config, ss, omega, temperature):
    ts = assemble_transfer(ss, config, omega)
    return (
        variance_u(ts, config, temperature),
        variance_v(ts, config, temperature),
        commutator_density(ts, config),
    )


def run_verification(
    draws: int = 1000,
    seed: int = 0,
    tolerance: float = 1e-8,
    _perturb_closed=None,
) -> VerificationReport:
    """Compare closed-form and oracle densities over seeded random draws.

    `_perturb_closed` is a test hook: a callable applied to the closed-form
    (var_u, var_v, comm_abs) triple before comparison, used to confirm that
    the oracle actually detects a corrupted closed form.
    """
    if draws < 1:
        raise ValueError("draws must be >= 1")
    rng = np.random.default_rng(seed)
    worst = {q: 0.0 for q in QUANTITIES}
    worst_draw = {q: None for q in QUANTITIES}
    for index in range(draws):
        config, omega, temperature = random_draw(rng)
        ss = steady_state(config)
        closed = closed_form_densities(config, ss, omega, temperature)
        if _perturb_closed is not None:
            closed = _perturb_closed(closed)
        reference = oracle_densities(build_system(config, ss), omega, temperature)
        for q, a, b in zip(QUANTITIES, closed, reference):
            err = relative_error(a, b)
            if err > worst[q]:
                worst[q] = err
                worst_draw[q] = {
                    "draw_index": index,
                    "omega_rad_s": omega,
                    "temperature_k": temperature,
                    "closed_form": a,
                    "oracle": b,
                }
    passed = all(err <= tolerance for err in worst.values())
    return VerificationReport(
        draws=draws,
        seed=seed,
        max_rel_error=dict(worst),
        worst_draw=worst_draw,
        tolerance=tolerance,
        passed=passed,
    )
