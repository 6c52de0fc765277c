"""Exception taxonomy shared across the package.

The CLI maps these onto process exit codes; see :mod:`polariton_lab.cli`.
"""


class PolaritonError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PolaritonError, ValueError):
    """An argument lies outside the physical domain of an operation."""


class SingularityError(PolaritonError, ArithmeticError):
    """A formula was evaluated at (or too close to) a physical singularity."""


class NoBoundModeError(PolaritonError):
    """No bound surface mode exists for the requested parameters."""


class BracketError(PolaritonError):
    """A search interval does not contain the feature being located."""


class ConfigError(PolaritonError, ValueError):
    """A run configuration is malformed or inconsistent."""


class ExtractionError(PolaritonError):
    """A diagnostic could not be extracted from simulation output."""
