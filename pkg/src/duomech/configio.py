"""Flat key/value configuration files with mandatory unit suffixes.

Format, one entry per line::

    mirror1.mass   = 23.0 mg
    mirror1.omega  = 1.0e6 rad_s
    cavity.power   = 1.0 W
    temperature    = 2.0 K

Blank lines and ``#`` comments are ignored.  Unknown keys, missing keys,
missing units and units of the wrong dimension are all hard errors: silent
Hz-vs-rad/s confusion is exactly the failure mode this format exists to stop.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ConfigError
from .params import CavityParams, MechanicalMode, SystemConfig

# unit -> factor to the canonical unit of its dimension
_UNITS = {
    "mass": {"kg": 1.0, "g": 1e-3, "mg": 1e-6, "ug": 1e-9},
    "length": {"m": 1.0, "mm": 1e-3, "um": 1e-6, "nm": 1e-9},
    "rate": {"rad_s": 1.0, "krad_s": 1e3, "Mrad_s": 1e6},
    "power": {"W": 1.0, "mW": 1e-3, "uW": 1e-6},
    "temperature": {"K": 1.0, "mK": 1e-3},
}

# key -> dimension
_SCHEMA = {
    "mirror1.mass": "mass",
    "mirror1.omega": "rate",
    "mirror1.gamma": "rate",
    "mirror2.mass": "mass",
    "mirror2.omega": "rate",
    "mirror2.gamma": "rate",
    "cavity.wavelength": "length",
    "cavity.path_length": "length",
    "cavity.kappa": "rate",
    "cavity.detuning": "rate",
    "cavity.power": "power",
    "temperature": "temperature",
}


def parse_config_text(text: str, source: str = "<string>") -> SystemConfig:
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value unit', got {raw!r}")
        key, _, rhs = line.partition("=")
        key = key.strip()
        if key not in _SCHEMA:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        parts = rhs.split()
        if len(parts) != 2:
            raise ConfigError(
                f"{source}:{lineno}: key {key!r} needs '<value> <unit>', got {rhs.strip()!r}"
            )
        value_str, unit = parts
        dimension = _SCHEMA[key]
        table = _UNITS[dimension]
        if unit not in table:
            raise ConfigError(
                f"{source}:{lineno}: key {key!r} expects a {dimension} unit "
                f"({', '.join(sorted(table))}), got {unit!r}"
            )
        try:
            value = float(value_str)
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: cannot parse number {value_str!r}") from None
        values[key] = value * table[unit]

    missing = sorted(set(_SCHEMA) - set(values))
    if missing:
        raise ConfigError(f"{source}: missing required keys: {', '.join(missing)}")

    try:
        return SystemConfig(
            mirror1=MechanicalMode(
                values["mirror1.mass"], values["mirror1.omega"], values["mirror1.gamma"]
            ),
            mirror2=MechanicalMode(
                values["mirror2.mass"], values["mirror2.omega"], values["mirror2.gamma"]
            ),
            cavity=CavityParams(
                wavelength=values["cavity.wavelength"],
                path_length=values["cavity.path_length"],
                kappa=values["cavity.kappa"],
                detuning=values["cavity.detuning"],
                input_power=values["cavity.power"],
            ),
            temperature=values["temperature"],
        )
    except Exception as exc:
        raise ConfigError(f"{source}: {exc}") from exc


def load_config(path: str | Path) -> SystemConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config_text(text, source=str(path))


def config_as_dict(config: SystemConfig) -> dict[str, float]:
    """Canonical-unit snapshot of a config (for manifests and reports)."""
    return {
        "mirror1.mass": config.mirror1.mass,
        "mirror1.omega": config.mirror1.omega_m,
        "mirror1.gamma": config.mirror1.gamma_m,
        "mirror2.mass": config.mirror2.mass,
        "mirror2.omega": config.mirror2.omega_m,
        "mirror2.gamma": config.mirror2.gamma_m,
        "cavity.wavelength": config.cavity.wavelength,
        "cavity.path_length": config.cavity.path_length,
        "cavity.kappa": config.cavity.kappa,
        "cavity.detuning": config.cavity.detuning,
        "cavity.power": config.cavity.input_power,
        "temperature": config.temperature,
    }
