"""Exception types shared across the package."""


class DuomechError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(DuomechError):
    """A physical parameter is out of range or produced a non-finite value."""


class ConfigError(DuomechError):
    """A configuration file could not be parsed or validated."""


class ConvergenceError(DuomechError):
    """A root-finding or fixed-point iteration failed to converge."""


class NoCrossingError(DuomechError):
    """A bracketing search found no sign change in the probed interval."""


class NearSingularError(DuomechError):
    """The frequency-domain system matrix is singular or nearly so."""
