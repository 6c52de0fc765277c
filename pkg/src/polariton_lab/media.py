"""Frequency-dependent material response of the two half-spaces.

The upper half-space is a plain dielectric with constant relative
permittivity and permeability.  The lower half-space is a negative-index
metamaterial described by lossy Drude models for both the electric and
the magnetic response,

    eps(w) = eps_b - omega_e**2 / (w * (w + i*gamma_e))
    mu(w)  = mu_b  - omega_m**2 / (w * (w + i*gamma_m))

with all frequencies in rad/s.  Both media also expose the real part of
d(w*f)/dw (f = eps or mu), the dispersive weight that enters the
electromagnetic energy density; for the Drude forms it is evaluated from
the closed-form derivative rather than by finite differences.

All functions are pure and accept scalars or numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def _require_positive_omega(omega) -> None:
    if not np.all(np.asarray(omega) > 0):
        raise DomainError("angular frequency must be positive")


@dataclass(frozen=True)
class UniformMedium:
    """Non-dispersive medium (vacuum, glass, a dilute gas)."""

    eps: float = 1.0
    mu: float = 1.0

    def __post_init__(self) -> None:
        if self.eps <= 0 or self.mu <= 0:
            raise DomainError("uniform medium requires eps > 0 and mu > 0")

    def permittivity(self, omega) -> complex:
        _require_positive_omega(omega)
        return complex(self.eps)

    def permeability(self, omega) -> complex:
        _require_positive_omega(omega)
        return complex(self.mu)

    def eps_energy_factor(self, omega) -> float:
        """Re d(w*eps)/dw, a constant for a dispersionless medium."""
        _require_positive_omega(omega)
        return self.eps

    def mu_energy_factor(self, omega) -> float:
        _require_positive_omega(omega)
        return self.mu


@dataclass(frozen=True)
class DrudeMedium:
    """Doubly dispersive Drude medium (electric and magnetic plasma response)."""

    eps_b: float
    mu_b: float
    omega_e: float
    gamma_e: float
    omega_m: float
    gamma_m: float

    def __post_init__(self) -> None:
        if self.omega_e <= 0:
            raise DomainError("electric plasma frequency must be positive")
        if self.omega_m < 0:
            raise DomainError("magnetic plasma frequency must be non-negative")
        if self.gamma_e < 0 or self.gamma_m < 0:
            raise DomainError("decay rates must be non-negative")
        if self.eps_b < 1 or self.mu_b < 1:
            raise DomainError("background eps_b and mu_b must be >= 1")

    def permittivity(self, omega) -> complex:
        """Complex relative permittivity; Im >= 0 for gamma_e >= 0 (passive)."""
        _require_positive_omega(omega)
        return self.eps_b - self.omega_e**2 / (omega * (omega + 1j * self.gamma_e))

    def permeability(self, omega) -> complex:
        """Complex relative permeability; Im >= 0 for gamma_m >= 0 (passive)."""
        _require_positive_omega(omega)
        return self.mu_b - self.omega_m**2 / (omega * (omega + 1j * self.gamma_m))

    def eps_energy_factor(self, omega) -> float:
        """Re d(w*eps)/dw from the closed-form derivative.

        w*eps(w) = eps_b*w - omega_e**2/(w + i*gamma_e), so the derivative is
        eps_b + omega_e**2/(w + i*gamma_e)**2 and its real part is returned.
        Positive in the operating band even where Re(eps) < 0.
        """
        _require_positive_omega(omega)
        return self.eps_b + self.omega_e**2 * (omega**2 - self.gamma_e**2) / (
            omega**2 + self.gamma_e**2
        ) ** 2

    def mu_energy_factor(self, omega) -> float:
        _require_positive_omega(omega)
        return self.mu_b + self.omega_m**2 * (omega**2 - self.gamma_m**2) / (
            omega**2 + self.gamma_m**2
        ) ** 2
