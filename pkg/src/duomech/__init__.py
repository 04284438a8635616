"""Stationary continuous-variable entanglement between two mirror modes.

A driven optical ring cavity couples the oscillation modes of its two movable
mirrors through radiation pressure.  This package evaluates the closed-form
frequency-domain solution of the linearized dynamics, the spectral densities
of the EPR variables q1 - q2 and p1 + p2, and the resulting degree of
entanglement E(omega, T), with an independent matrix-inversion oracle for
validation.
"""

__version__ = "0.1.0"

from .configio import load_config, parse_config_text
from .errors import (
    ConfigError,
    ConvergenceError,
    DuomechError,
    InvalidParameterError,
    NearSingularError,
    NoCrossingError,
)
from .params import (
    CODATA,
    CavityParams,
    MechanicalMode,
    PhysicalConstants,
    SteadyState,
    SystemConfig,
    derive_coupling,
    input_amplitude,
    self_consistent_detuning,
    steady_state,
)
from .response import TransferSet, assemble_transfer, susceptibility
from .spectra import (
    SpectralPoint,
    commutator_density,
    entanglement_degree,
    epr_criterion,
    sum_criterion,
    thermal_kernel,
    variance_u,
    variance_v,
)
from .oracle import LinearSystem, build_system, oracle_densities, solve_transfer
from .sweep import (
    GridSpec,
    SweepResult,
    coupling_scaling_study,
    find_critical_temperature,
    run_sweep,
)
from .verify import run_verification

__all__ = [
    "CODATA",
    "CavityParams",
    "ConfigError",
    "ConvergenceError",
    "DuomechError",
    "GridSpec",
    "InvalidParameterError",
    "LinearSystem",
    "MechanicalMode",
    "NearSingularError",
    "NoCrossingError",
    "PhysicalConstants",
    "SpectralPoint",
    "SteadyState",
    "SweepResult",
    "SystemConfig",
    "TransferSet",
    "assemble_transfer",
    "build_system",
    "commutator_density",
    "coupling_scaling_study",
    "derive_coupling",
    "entanglement_degree",
    "epr_criterion",
    "find_critical_temperature",
    "input_amplitude",
    "load_config",
    "oracle_densities",
    "parse_config_text",
    "run_sweep",
    "run_verification",
    "self_consistent_detuning",
    "solve_transfer",
    "steady_state",
    "sum_criterion",
    "susceptibility",
    "thermal_kernel",
    "variance_u",
    "variance_v",
]
