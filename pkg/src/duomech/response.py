"""Closed-form frequency-domain response of the linearized system.

Conventions: O(omega) = integral dt e^{i omega t} O(t), so d/dt -> -i*omega.
Under this convention the position fluctuation of mirror j solves

    q_j(omega) = B_j(omega) b_in(omega) + B_j*(-omega) b_in^dag(omega)
                 + Xi_{j,1}(omega) xi_1(omega) + Xi_{j,2}(omega) xi_2(omega)

with the coefficients implemented below.  Conjugation symmetries:
chi*(w) = chi(-w), D*(w) = D(-w), Xi*(w) = Xi(-w); no such relation holds
for B (B*(w) != B(-w) in general).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .params import CavityParams, MechanicalMode, SteadyState, SystemConfig

#: default near-singularity threshold: |D(w)| below this fraction of the
#: zero-field denominator flags the point as dominated by the radiation spring
DEFAULT_SINGULAR_RATIO = 1e-6

Pair = tuple[complex, complex]
Matrix2 = tuple[Pair, Pair]


@dataclass(frozen=True)
class TransferSet:
    """All response coefficients of Eqs. q_j(omega) at +omega and -omega."""

    omega: float
    chi_plus: Pair
    chi_minus: Pair
    d_plus: complex
    d_minus: complex
    b_plus: Pair
    b_minus: Pair
    xi_plus: Matrix2
    xi_minus: Matrix2
    near_singular: bool = False

    def mirrored(self) -> "TransferSet":
        """The same evaluation viewed from -omega."""
        return TransferSet(
            omega=-self.omega,
            chi_plus=self.chi_minus,
            chi_minus=self.chi_plus,
            d_plus=self.d_minus,
            d_minus=self.d_plus,
            b_plus=self.b_minus,
            b_minus=self.b_plus,
            xi_plus=self.xi_minus,
            xi_minus=self.xi_plus,
            near_singular=self.near_singular,
        )


def susceptibility(mode: MechanicalMode, omega: float) -> complex:
    """Mechanical susceptibility chi(w) = 1 / (Omega^2 - w^2 - i*w*Gamma).

    The difference of squares is computed as (Omega-w)(Omega+w) so that
    Hz-scale offsets from a 1e6 rad/s carrier keep full precision.
    """
    return 1.0 / complex(
        (mode.omega_m - omega) * (mode.omega_m + omega), -omega * mode.gamma_m
    )


def cavity_lorentzians(cavity: CavityParams, omega: float) -> Pair:
    """The two cavity denominators kappa/2 - i(Delta+w) and kappa/2 + i(Delta-w)."""
    half = cavity.kappa / 2.0
    return (
        complex(half, -(cavity.detuning + omega)),
        complex(half, cavity.detuning - omega),
    )


def _lorentzian_gap(cavity: CavityParams, omega: float) -> complex:
    # 1/d_plus - 1/d_minus with the subtraction done analytically:
    # d_minus - d_plus = 2i*Delta exactly
    d_plus, d_minus = cavity_lorentzians(cavity, omega)
    return 2j * cavity.detuning / (d_plus * d_minus)


def denominator_d(ss: SteadyState, config: SystemConfig, omega: float) -> complex:
    """Common denominator D(w) of all response coefficients."""
    chi1 = susceptibility(config.mirror1, omega)
    chi2 = susceptibility(config.mirror2, omega)
    om1 = config.mirror1.omega_m
    om2 = config.mirror2.omega_m
    g1, g2 = ss.couplings
    gap = _lorentzian_gap(config.cavity, omega)
    return 1.0 / (om1 * om2 * chi1 * chi2) - 1j * ss.photon_number * (
        g1 * g1 / (om2 * chi2) + g2 * g2 / (om1 * chi1)
    ) * gap


def _free_denominator(config: SystemConfig, omega: float) -> complex:
    chi1 = susceptibility(config.mirror1, omega)
    chi2 = susceptibility(config.mirror2, omega)
    return 1.0 / (config.mirror1.omega_m * config.mirror2.omega_m * chi1 * chi2)


def radiation_transfer(ss: SteadyState, config: SystemConfig, omega: float) -> Pair:
    """Vacuum-noise transduction coefficients (B_1(w), B_2(w))."""
    d = denominator_d(ss, config, omega)
    d_plus, _ = cavity_lorentzians(config.cavity, omega)
    chi1 = susceptibility(config.mirror1, omega)
    chi2 = susceptibility(config.mirror2, omega)
    g1, g2 = ss.couplings
    root_kappa = math.sqrt(config.cavity.kappa)
    beta_conj = ss.beta.conjugate()
    b1 = -(1.0 / d) * (1.0 / (config.mirror2.omega_m * chi2)) * (
        root_kappa * g1 * beta_conj / d_plus
    )
    b2 = +(1.0 / d) * (1.0 / (config.mirror1.omega_m * chi1)) * (
        root_kappa * g2 * beta_conj / d_plus
    )
    return (b1, b2)


def brownian_transfer(ss: SteadyState, config: SystemConfig, omega: float) -> Matrix2:
    """Thermal-noise transfer matrix Xi_{j,k}(w)."""
    d = denominator_d(ss, config, omega)
    chi1 = susceptibility(config.mirror1, omega)
    chi2 = susceptibility(config.mirror2, omega)
    om1 = config.mirror1.omega_m
    om2 = config.mirror2.omega_m
    g1, g2 = ss.couplings
    gap = _lorentzian_gap(config.cavity, omega)
    cross = -1j * ss.photon_number * gap
    xi11 = (1.0 / (om2 * chi2) + cross * g2 * g2) / d
    xi12 = (cross * g2 * g1) / d
    xi21 = (cross * g1 * g2) / d
    xi22 = (1.0 / (om1 * chi1) + cross * g1 * g1) / d
    return ((xi11, xi12), (xi21, xi22))


def assemble_transfer(
    ss: SteadyState,
    config: SystemConfig,
    omega: float,
    singular_ratio: float = DEFAULT_SINGULAR_RATIO,
) -> TransferSet:
    """Evaluate every response coefficient at +omega and -omega."""
    chi_p = (susceptibility(config.mirror1, omega), susceptibility(config.mirror2, omega))
    chi_m = (susceptibility(config.mirror1, -omega), susceptibility(config.mirror2, -omega))
    d_p = denominator_d(ss, config, omega)
    d_m = denominator_d(ss, config, -omega)
    near = (
        abs(d_p) < singular_ratio * abs(_free_denominator(config, omega))
        or abs(d_m) < singular_ratio * abs(_free_denominator(config, -omega))
    )
    return TransferSet(
        omega=omega,
        chi_plus=chi_p,
        chi_minus=chi_m,
        d_plus=d_p,
        d_minus=d_m,
        b_plus=radiation_transfer(ss, config, omega),
        b_minus=radiation_transfer(ss, config, -omega),
        xi_plus=brownian_transfer(ss, config, omega),
        xi_minus=brownian_transfer(ss, config, -omega),
        near_singular=near,
    )
