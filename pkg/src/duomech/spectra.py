"""Spectral densities of the EPR variables and the degree of entanglement.

All second moments are densities with the 2*pi*delta(w+w') normalization
stripped.  The relevant Hermitian spectral components are
R_O(w) = (O(w) + O(-w)) / 2 for O in {q1-q2, p1+p2}, with
p_j(w) = -i (w/Omega_j) q_j(w).

The degree of entanglement is

    E(w) = <R_{q1-q2}^2> <R_{p1+p2}^2> / |<[R_q1, R_p1]>|^2

and E < 1 marks inseparability of the two spectral mirror modes; E < 1/4
additionally permits an EPR-type test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .params import MechanicalMode, PhysicalConstants, SteadyState, SystemConfig, CODATA
from .response import TransferSet, assemble_transfer


@dataclass(frozen=True)
class SpectralPoint:
    """Evaluated spectral densities and criteria at one (omega, T)."""

    omega: float
    temperature: float
    var_u: float
    var_v: float
    comm_abs: float
    entanglement_degree: float
    product_entangled: bool
    sum_entangled: bool
    epr: bool
    near_singular: bool


def thermal_kernel(
    mode: MechanicalMode,
    omega: float,
    temperature: float,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Brownian-noise kernel N(w) = w * (Gamma/Omega) * coth(hbar*w / 2*kB*T).

    Even in w and nonnegative.  The T = 0 limit (coth -> sign) and the w = 0
    limit (2*kB*T*Gamma / hbar*Omega) are handled analytically.
    """
    ratio = mode.gamma_m / mode.omega_m
    thermal_energy = 2.0 * constants.k_boltzmann * temperature
    if temperature == 0.0 or thermal_energy == 0.0:
        return abs(omega) * ratio
    if omega == 0.0:
        return thermal_energy * ratio / constants.hbar
    x = constants.hbar * omega / thermal_energy
    if abs(x) < 1e-12:
        # w*coth(x) -> 2 kB T / hbar; also covers x underflowing to zero
        return thermal_energy * ratio / constants.hbar
    if not math.isfinite(x):
        return abs(omega) * ratio
    return omega * ratio / math.tanh(x)


def variance_u(ts: TransferSet, config: SystemConfig, temperature: float) -> float:
    """Density of <R_{q1-q2}^2> at ts.omega."""
    n1 = thermal_kernel(config.mirror1, ts.omega, temperature, config.constants)
    n2 = thermal_kernel(config.mirror2, ts.omega, temperature, config.constants)
    b1p, b2p = ts.b_plus
    b1m, b2m = ts.b_minus
    xi = ts.xi_plus
    return 0.25 * (
        abs(b1p - b2p) ** 2
        + abs(b1m - b2m) ** 2
        + n1 * abs(xi[0][0] - xi[1][0]) ** 2
        + n2 * abs(xi[0][1] - xi[1][1]) ** 2
    )


def variance_v(ts: TransferSet, config: SystemConfig, temperature: float) -> float:
    """Density of <R_{p1+p2}^2> at ts.omega, using p_j(w) = -i(w/Omega_j) q_j(w)."""
    n1 = thermal_kernel(config.mirror1, ts.omega, temperature, config.constants)
    n2 = thermal_kernel(config.mirror2, ts.omega, temperature, config.constants)
    r1 = ts.omega / config.mirror1.omega_m
    r2 = ts.omega / config.mirror2.omega_m
    b1p, b2p = ts.b_plus
    b1m, b2m = ts.b_minus
    xp = ts.xi_plus
    # p1 + p2 = -i (r1 q1 + r2 q2), so each channel contributes through the
    # weighted row combination r1 * row1 + r2 * row2
    return 0.25 * (
        abs(r1 * b1p + r2 * b2p) ** 2
        + abs(r1 * b1m + r2 * b2m) ** 2
        + n1 * abs(r1 * xp[0][0] + r2 * xp[1][0]) ** 2
        + n2 * abs(r1 * xp[0][1] + r2 * xp[1][1]) ** 2
    )


def commutator_density(ts: TransferSet, config: SystemConfig, mirror: int = 1) -> float:
    """|<[R_q, R_p]>| density for the chosen mirror label (default mirror 1).

    Temperature-independent; vanishes at w = 0.  Mirror 2 is exposed for
    diagnostics because the two labelings differ when the mirrors do.
    """
    if mirror not in (1, 2):
        raise ValueError(f"mirror must be 1 or 2, got {mirror!r}")
    mode = config.mirrors[mirror - 1]
    j = mirror - 1
    bp = ts.b_plus[j]
    bm = ts.b_minus[j]
    xi_row = ts.xi_plus[j]
    # each Brownian channel carries its own commutator weight Gamma_l/Omega_l
    thermal = sum(
        (m.gamma_m / m.omega_m) * abs(xi_row[l]) ** 2
        for l, m in enumerate(config.mirrors)
    )
    bracket = abs(bp) ** 2 - abs(bm) ** 2 - ts.omega * thermal
    return abs(0.5 * (ts.omega / mode.omega_m) * bracket)


def sum_criterion(var_u: float, var_v: float, comm_abs: float) -> bool:
    """Sum-of-variances inseparability test: var_u + var_v < 2 * comm_abs^2."""
    return var_u + var_v < 2.0 * comm_abs * comm_abs


def epr_criterion(point: SpectralPoint) -> bool:
    """EPR-paradox condition: E strictly below 1/4."""
    return point.entanglement_degree < 0.25


def entanglement_degree(
    config: SystemConfig,
    ss: SteadyState,
    omega: float,
    temperature: float,
) -> SpectralPoint:
    """Evaluate all densities, E, and the criteria at one (omega, T) point.

    omega must be strictly positive: at w = 0 both the momentum density and
    the commutator density vanish and E is 0/0.
    """
    if not omega > 0.0:
        raise ValueError(
            f"omega must be > 0 (got {omega!r}): the commutator density "
            "vanishes at zero frequency and E degenerates to 0/0"
        )
    ts = assemble_transfer(ss, config, omega)
    return point_from_transfer(ts, config, temperature)


def point_from_transfer(
    ts: TransferSet, config: SystemConfig, temperature: float
) -> SpectralPoint:
    """Build a SpectralPoint from an already-evaluated TransferSet."""
    vu = variance_u(ts, config, temperature)
    vv = variance_v(ts, config, temperature)
    comm = commutator_density(ts, config)
    near = ts.near_singular
    if comm > 0.0:
        degree = vu * vv / (comm * comm)
    else:
        degree = math.inf
        near = True
    return SpectralPoint(
        omega=ts.omega,
        temperature=temperature,
        var_u=vu,
        var_v=vv,
        comm_abs=comm,
        entanglement_degree=degree,
        product_entangled=degree < 1.0,
        sum_entangled=sum_criterion(vu, vv, comm),
        epr=degree < 0.25,
        near_singular=near,
    )
