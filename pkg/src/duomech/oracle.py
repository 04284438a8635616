"""Brute-force ground truth: direct inversion of the linearized system.

The linearized Langevin equations are assembled as a 6x6 complex system
M(w) v(w) = N n(w) with v = (b, b^dag, q1, p1, q2, p2) and noise channels
n = (b_in, b_in^dag, xi_1, xi_2), then inverted numerically.  Every closed
form in `response`/`spectra` must agree with this path; nothing here reuses
their algebra.

Channel spectra (densities, 2*pi*delta(w+w') stripped), fixed by requiring
that folding them through the transfer matrix reproduces the closed-form
thermal kernel and commutator:

    <b_in(w) b_in^dag(w')>  -> 1          (vacuum, only ordering that survives)
    <xi_j(w) xi_j(w')>      -> (Gamma_j / 2 Omega_j) * w * (coth(hbar w / 2 kB T) - 1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NearSingularError
from .params import SteadyState, SystemConfig, steady_state
from .spectra import SpectralPoint, sum_criterion

#: index layout of the state vector and the noise vector
STATE = ("b", "b_dag", "q1", "p1", "q2", "p2")
CHANNELS = ("b_in", "b_in_dag", "xi1", "xi2")


@dataclass(frozen=True)
class LinearSystem:
    """Frequency-domain form of the linearized equations of motion."""

    config: SystemConfig
    ss: SteadyState

    def system_matrix(self, omega: float) -> np.ndarray:
        cfg = self.config
        kappa = cfg.cavity.kappa
        delta = cfg.cavity.detuning
        beta = self.ss.beta
        g1, g2 = self.ss.couplings
        om1, gm1 = cfg.mirror1.omega_m, cfg.mirror1.gamma_m
        om2, gm2 = cfg.mirror2.omega_m, cfg.mirror2.gamma_m

        m = np.zeros((6, 6), dtype=np.complex128)
        iw = -1j * omega
        # cavity field: db/dt = i*Delta*b - i*beta*(G1 q1 - G2 q2) - kappa/2 b + ...
        m[0, 0] = iw - 1j * delta + kappa / 2.0
        m[0, 2] = 1j * beta * g1
        m[0, 4] = -1j * beta * g2
        # adjoint field row
        m[1, 1] = iw + 1j * delta + kappa / 2.0
        m[1, 2] = -1j * beta.conjugate() * g1
        m[1, 4] = 1j * beta.conjugate() * g2
        # dq_j/dt = Omega_j p_j
        m[2, 2] = iw
        m[2, 3] = -om1
        m[4, 4] = iw
        m[4, 5] = -om2
        # dp_j/dt = -Omega_j q_j + (-)^j G_j (beta* b + beta b^dag) - Gamma_j p_j + xi_j
        m[3, 3] = iw + gm1
        m[3, 2] = om1
        m[3, 0] = g1 * beta.conjugate()
        m[3, 1] = g1 * beta
        m[5, 5] = iw + gm2
        m[5, 4] = om2
        m[5, 0] = -g2 * beta.conjugate()
        m[5, 1] = -g2 * beta
        return m

    @property
    def noise_map(self) -> np.ndarray:
        root_kappa = math.sqrt(self.config.cavity.kappa)
        n = np.zeros((6, 4))
        n[0, 0] = root_kappa
        n[1, 1] = root_kappa
        n[3, 2] = 1.0
        n[5, 3] = 1.0
        return n

    def noise_spectra(self, channel: int, omega: float, temperature: float) -> float:
        """Unsymmetrized density of channel auto/cross correlations at +omega."""
        if channel in (0, 1):
            # vacuum: handled as the off-diagonal <b_in b_in^dag> entry
            return 1.0
        mode = self.config.mirrors[channel - 2]
        return _brownian_density(
            mode.gamma_m, mode.omega_m, omega, temperature, self.config.constants
        )

    def spectral_matrix(self, omega: float, temperature: float) -> np.ndarray:
        """4x4 matrix S with <n_c(w) n_c'(w')> = 2 pi delta(w+w') S_cc'(w)."""
        s = np.zeros((4, 4))
        s[0, 1] = 1.0
        for j, mode in enumerate(self.config.mirrors):
            s[2 + j, 2 + j] = _brownian_density(
                mode.gamma_m, mode.omega_m, omega, temperature, self.config.constants
            )
        return s

    def commutator_matrix(self, omega: float) -> np.ndarray:
        """Channel commutator K(w) = S(w) - S(-w)^T, evaluated analytically.

        The coth parts cancel exactly, so K is temperature-independent:
        forming the difference numerically instead would lose ~log10(2kT /
        hbar w) digits at high temperature.
        """
        k = np.zeros((4, 4))
        k[0, 1] = 1.0
        k[1, 0] = -1.0
        for j, mode in enumerate(self.config.mirrors):
            k[2 + j, 2 + j] = -(mode.gamma_m / mode.omega_m) * omega
        return k


def _brownian_density(gamma, omega_m, omega, temperature, constants) -> float:
    ratio = gamma / (2.0 * omega_m)
    thermal_energy = 2.0 * constants.k_boltzmann * temperature
    if temperature == 0.0 or thermal_energy == 0.0:
        return 0.0 if omega >= 0.0 else -2.0 * omega * ratio
    if omega == 0.0:
        return ratio * thermal_energy / constants.hbar
    x = constants.hbar * omega / thermal_energy
    if abs(x) < 1e-12:
        # w*(coth(x) - 1) -> 2 kB T / hbar - w
        return ratio * (thermal_energy / constants.hbar - omega)
    if not math.isfinite(x):
        return 0.0 if omega >= 0.0 else -2.0 * omega * ratio
    return ratio * omega * (1.0 / math.tanh(x) - 1.0)


def build_system(config: SystemConfig, ss: SteadyState | None = None) -> LinearSystem:
    if ss is None:
        ss = steady_state(config)
    return LinearSystem(config=config, ss=ss)


# extended precision where the platform has it: the commutator density is a
# small difference of large terms, and 11 extra mantissa bits in the solve
# keep that cancellation well below the verification tolerance
_SOLVE_DTYPE = getattr(np, "complex256", np.complex128)


def _eliminate(matrix: np.ndarray, rhs: np.ndarray, omega: float) -> np.ndarray:
    """Gaussian elimination with partial pivoting on an augmented system."""
    n = matrix.shape[0]
    a = np.hstack([matrix, rhs]).astype(_SOLVE_DTYPE)
    for col in range(n):
        pivot = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot, col] == 0:
            raise NearSingularError(f"system matrix singular at omega={omega!r}")
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
        a[col] = a[col] / a[col, col]
        for row in range(n):
            if row != col and a[row, col] != 0:
                a[row] = a[row] - a[row, col] * a[col]
    return a[:, n:]


def solve_transfer(system: LinearSystem, omega: float) -> np.ndarray:
    """6x4 coefficient matrix T(w) with v(w) = T(w) n(w)."""
    m = system.system_matrix(omega)
    return _eliminate(m, system.noise_map, omega).astype(np.complex128)


def residual(system: LinearSystem, omega: float, transfer: np.ndarray) -> float:
    """Relative residual ||M T - N|| / ||N|| of a candidate transfer matrix."""
    m = system.system_matrix(omega)
    n = system.noise_map
    return float(np.linalg.norm(m @ transfer - n) / np.linalg.norm(n))


def oracle_densities(
    system: LinearSystem, omega: float, temperature: float
) -> tuple[float, float, float]:
    """(var_u, var_v, comm_abs) densities from direct matrix inversion."""
    t_plus = _eliminate(system.system_matrix(omega), system.noise_map, omega)
    t_minus = _eliminate(system.system_matrix(-omega), system.noise_map, -omega)
    s_plus = system.spectral_matrix(omega, temperature).astype(_SOLVE_DTYPE)
    s_minus = system.spectral_matrix(-omega, temperature).astype(_SOLVE_DTYPE)

    u_p = t_plus[2] - t_plus[4]
    u_m = t_minus[2] - t_minus[4]
    v_p = t_plus[3] + t_plus[5]
    v_m = t_minus[3] + t_minus[5]

    var_u = float((0.25 * ((u_p @ s_plus @ u_m) + (u_m @ s_minus @ u_p))).real)
    var_v = float((0.25 * ((v_p @ s_plus @ v_m) + (v_m @ s_minus @ v_p))).real)

    # channel commutator densities [n(w), n'(-w)]
    k_plus = system.commutator_matrix(omega).astype(_SOLVE_DTYPE)
    k_minus = system.commutator_matrix(-omega).astype(_SOLVE_DTYPE)
    comm = 0.25 * ((t_plus[2] @ k_plus @ t_minus[3]) + (t_minus[2] @ k_minus @ t_plus[3]))
    return var_u, var_v, float(abs(comm))


def oracle_point(
    system: LinearSystem, omega: float, temperature: float
) -> SpectralPoint:
    """SpectralPoint computed entirely through the matrix-inversion path."""
    var_u, var_v, comm = oracle_densities(system, omega, temperature)
    degree = var_u * var_v / (comm * comm) if comm > 0.0 else math.inf
    return SpectralPoint(
        omega=omega,
        temperature=temperature,
        var_u=var_u,
        var_v=var_v,
        comm_abs=comm,
        entanglement_degree=degree,
        product_entangled=degree < 1.0,
        sum_entangled=sum_criterion(var_u, var_v, comm),
        epr=degree < 0.25,
        near_singular=not comm > 0.0,
    )
