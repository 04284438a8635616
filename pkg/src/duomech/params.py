"""Physical inputs, optomechanical couplings and the semiclassical working point.

All frequencies, damping rates and detunings are stored in angular units
(rad/s).  Masses are kg, lengths m, powers W, temperatures K.  Every container
is a frozen dataclass: values are immutable after construction and safe to
share across worker processes.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InvalidParameterError


def _require_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise InvalidParameterError(f"{name} must be a finite positive number, got {value!r}")


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants (CODATA 2018). Not meant to be user-tuned."""

    hbar: float = 1.054571817e-34       # J s
    k_boltzmann: float = 1.380649e-23   # J/K
    c_light: float = 299792458.0        # m/s

    def __post_init__(self):
        _require_positive("hbar", self.hbar)
        _require_positive("k_boltzmann", self.k_boltzmann)
        _require_positive("c_light", self.c_light)


CODATA = PhysicalConstants()


@dataclass(frozen=True)
class MechanicalMode:
    """One oscillation mode of a cavity mirror.

    mass      effective mass of the mode (kg)
    omega_m   mechanical resonance frequency (rad/s)
    gamma_m   mechanical damping rate (rad/s)
    """

    mass: float
    omega_m: float
    gamma_m: float

    def __post_init__(self):
        _require_positive("mass", self.mass)
        _require_positive("omega_m", self.omega_m)
        _require_positive("gamma_m", self.gamma_m)
        if self.quality_factor < 1.0:
            warnings.warn(
                f"mechanical quality factor {self.quality_factor:.3g} < 1; "
                "the mode is overdamped",
                stacklevel=2,
            )

    @property
    def quality_factor(self) -> float:
        return self.omega_m / self.gamma_m


@dataclass(frozen=True)
class CavityParams:
    """Optical cavity and drive parameters.

    wavelength    drive laser wavelength (m)
    path_length   diagonal of the square optical path (m)
    kappa         cavity amplitude decay rate (rad/s)
    detuning      effective cavity detuning, any sign (rad/s)
    input_power   drive power at the input port (W)
    """

    wavelength: float
    path_length: float
    kappa: float
    detuning: float
    input_power: float

    def __post_init__(self):
        _require_positive("wavelength", self.wavelength)
        _require_positive("path_length", self.path_length)
        _require_positive("kappa", self.kappa)
        if not math.isfinite(self.detuning):
            raise InvalidParameterError(f"detuning must be finite, got {self.detuning!r}")
        if not (math.isfinite(self.input_power) and self.input_power >= 0):
            raise InvalidParameterError(
                f"input_power must be finite and >= 0, got {self.input_power!r}"
            )

    def optical_frequency(self, constants: PhysicalConstants = CODATA) -> float:
        """Cavity mode frequency 2*pi*c/wavelength (rad/s)."""
        return 2.0 * math.pi * constants.c_light / self.wavelength


@dataclass(frozen=True)
class SystemConfig:
    """Complete physical description of the two-mirror optomechanical system."""

    mirror1: MechanicalMode
    mirror2: MechanicalMode
    cavity: CavityParams
    temperature: float
    constants: PhysicalConstants = CODATA

    def __post_init__(self):
        if not (math.isfinite(self.temperature) and self.temperature >= 0):
            raise InvalidParameterError(
                f"temperature must be finite and >= 0, got {self.temperature!r}"
            )

    @property
    def mirrors(self) -> tuple[MechanicalMode, MechanicalMode]:
        return (self.mirror1, self.mirror2)

    def with_mirror2_omega(self, omega_m: float) -> "SystemConfig":
        """Copy of this config with the second mirror retuned (mismatch scans)."""
        m2 = MechanicalMode(self.mirror2.mass, omega_m, self.mirror2.gamma_m)
        return SystemConfig(self.mirror1, m2, self.cavity, self.temperature, self.constants)

    def with_input_power(self, power: float) -> "SystemConfig":
        cav = CavityParams(
            self.cavity.wavelength,
            self.cavity.path_length,
            self.cavity.kappa,
            self.cavity.detuning,
            power,
        )
        return SystemConfig(self.mirror1, self.mirror2, cav, self.temperature, self.constants)

    def with_temperature(self, temperature: float) -> "SystemConfig":
        return SystemConfig(self.mirror1, self.mirror2, self.cavity, temperature, self.constants)


@dataclass(frozen=True)
class SteadyState:
    """Semiclassical working point of the driven system.

    beta                 intracavity field amplitude (dimensionless)
    photon_number        |beta|^2
    q_ss                 displaced equilibrium positions of the two mirrors
    couplings            bare optomechanical couplings G_j (rad/s)
    effective_couplings  |beta| * G_j (rad/s)
    """

    beta: complex
    photon_number: float
    q_ss: tuple[float, float]
    couplings: tuple[float, float]
    effective_couplings: tuple[float, float]

    def with_phase(self, phi: float) -> "SteadyState":
        """Rotate the intracavity amplitude by a global phase (diagnostics)."""
        return SteadyState(
            beta=self.beta * cmath.exp(1j * phi),
            photon_number=self.photon_number,
            q_ss=self.q_ss,
            couplings=self.couplings,
            effective_couplings=self.effective_couplings,
        )


def derive_coupling(
    mode: MechanicalMode,
    cavity: CavityParams,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Optomechanical coupling G = (omega_cav / 2L) * sqrt(hbar / (m * Omega)).

    Scales as m^-1/2, Omega^-1/2 and 1/L.
    """
    omega_cav = cavity.optical_frequency(constants)
    g = (omega_cav / (2.0 * cavity.path_length)) * math.sqrt(
        constants.hbar / (mode.mass * mode.omega_m)
    )
    if not math.isfinite(g) or g <= 0:
        raise InvalidParameterError(f"coupling evaluated to non-finite/non-positive value {g!r}")
    return g


def input_amplitude(cavity: CavityParams, constants: PhysicalConstants = CODATA) -> float:
    """Drive amplitude |beta_in| = sqrt(P / (hbar * omega_drive)) in sqrt(photons/s).

    The drive frequency is taken as the cavity frequency plus the effective
    detuning; at optical frequencies the distinction is negligible.
    """
    omega_drive = cavity.optical_frequency(constants) + cavity.detuning
    if omega_drive <= 0:
        raise InvalidParameterError("drive frequency must be positive")
    return math.sqrt(cavity.input_power / (constants.hbar * omega_drive))


def steady_state(config: SystemConfig) -> SteadyState:
    """Solve the semiclassical steady state of the driven cavity.

    beta = sqrt(kappa) * beta_in / (kappa/2 - i*detuning), with beta_in real
    positive, and each mirror displaced by (-)^j G_j |beta|^2 / Omega_j.
    """
    cav = config.cavity
    b_in = input_amplitude(cav, config.constants)
    beta = math.sqrt(cav.kappa) * b_in / (cav.kappa / 2.0 - 1j * cav.detuning)
    n_photon = abs(beta) ** 2
    g1 = derive_coupling(config.mirror1, cav, config.constants)
    g2 = derive_coupling(config.mirror2, cav, config.constants)
    q1 = -g1 * n_photon / config.mirror1.omega_m
    q2 = +g2 * n_photon / config.mirror2.omega_m
    return SteadyState(
        beta=beta,
        photon_number=n_photon,
        q_ss=(q1, q2),
        couplings=(g1, g2),
        effective_couplings=(abs(beta) * g1, abs(beta) * g2),
    )


def self_consistent_detuning(
    config: SystemConfig,
    bare_detuning: float,
    steps: int = 64,
    rel_tol: float = 1e-9,
) -> float:
    """Effective detuning including the static radiation-pressure shift.

    Solves the scalar fixed point

        Delta = Delta_bare + S * kappa * |beta_in|^2 / (kappa^2/4 + Delta^2)

    with S = G1^2/Omega1 + G2^2/Omega2, equivalent to a real cubic in Delta.
    Among the (up to three) real roots, the one continuously connected to
    Delta_bare as the drive power goes to zero is returned: that is the branch
    the system actually reaches when the drive is ramped up.
    """
    cav = config.cavity
    kappa = cav.kappa
    g1 = derive_coupling(config.mirror1, cav, config.constants)
    g2 = derive_coupling(config.mirror2, cav, config.constants)
    shift = g1 ** 2 / config.mirror1.omega_m + g2 ** 2 / config.mirror2.omega_m
    b_in_sq = input_amplitude(cav, config.constants) ** 2

    delta = bare_detuning
    quarter = kappa * kappa / 4.0
    for k in range(1, steps + 1):
        strength = shift * kappa * b_in_sq * (k / steps)
        # cubic: x^3 - bare*x^2 + quarter*x - (bare*quarter + strength) = 0
        roots = np.roots([1.0, -bare_detuning, quarter, -(bare_detuning * quarter + strength)])
        real_roots = [r.real for r in roots if abs(r.imag) <= 1e-9 * max(1.0, abs(r))]
        if not real_roots:
            raise ConvergenceError(
                f"no real root found at continuation step {k}/{steps} "
                f"(bare={bare_detuning!r}, strength={strength!r})"
            )
        delta = min(real_roots, key=lambda r: abs(r - delta))

    forward = bare_detuning + shift * kappa * b_in_sq / (quarter + delta * delta)
    scale = max(abs(delta), abs(bare_detuning), kappa)
    if abs(forward - delta) > rel_tol * scale:
        raise ConvergenceError(
            f"fixed-point residual {abs(forward - delta):.3e} exceeds "
            f"{rel_tol:.1e} * {scale:.3e} (bracket around {delta!r})"
        )
    return delta
