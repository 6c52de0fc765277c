"""Slow-light cross-phase modulation in a thin resonant atomic layer.

A layer of five-level atoms (thickness z0, densities n1 and n3 on the
two populated ground levels) sits on the dielectric side of the
interface, driven by a control field of Rabi frequency Omega_c and
probed by two weak surface-polariton pulses a and b.  Double
electromagnetically induced transparency slows both pulses; the faster
pulse b sweeps through pulse a and picks up a cross-Kerr phase.

This module evaluates the closed-form quantities of that scheme: the
exponential-overlap factor of the evanescent fields with the layer, the
cross-Kerr coefficient, the slow-down parameter and group velocity, the
accumulated nonlinear phase of a full walk-through collision, and the
Doppler temperature bound for a gas-phase layer.  No density-matrix
dynamics are solved here.

All functions are pure; scan loops may call them concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from scipy.constants import Boltzmann as K_B
from scipy.constants import epsilon_0 as EPS_0
from scipy.constants import hbar as HBAR

from .errors import DomainError, SingularityError


def overlap_factor(u: float) -> float:
    """Layer average of exp(-2*u*z/z0) over z in [0, z0].

    Equals (1 - exp(-2u)) / (2u), continued to 1 at u = 0; strictly
    decreasing and bounded in (0, 1].  The argument is the net
    amplitude-decay constant of the participating fields times the layer
    thickness.  Evaluated via expm1, which stays accurate through the
    removable singularity at the origin.
    """
    if u < 0:
        raise DomainError("overlap argument must be non-negative")
    if u == 0:
        return 1.0
    return -math.expm1(-2.0 * u) / (2.0 * u)


@dataclass(frozen=True)
class SinglePhotonField:
    """Peak field amplitude of a one-photon pulse in its interface mode.

    The photon energy hbar*omega is assigned to the effective volume
    mode_length * spot_width * pulse_length with the dielectric energy
    weight eps_0 * eps_r, so that

        eps_0 * eps_r * amplitude**2 * volume = hbar * omega

    holds exactly.  pulse_length is the bare-velocity length v0*tau;
    equivalently, the slowed pulse of length v*tau carries only the
    field fraction 1/(1+beta) of the photon energy.
    """

    amplitude: float
    omega: float
    mode_length: float
    spot_width: float
    pulse_length: float
    eps_r: float = 1.0

    def __post_init__(self) -> None:
        for name in ("amplitude", "omega", "mode_length", "spot_width", "pulse_length", "eps_r"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")

    @classmethod
    def single_photon(
        cls,
        omega: float,
        mode_length: float,
        spot_width: float,
        pulse_length: float,
        eps_r: float = 1.0,
    ) -> "SinglePhotonField":
        volume = mode_length * spot_width * pulse_length
        amplitude = math.sqrt(HBAR * omega / (EPS_0 * eps_r * volume))
        return cls(amplitude, omega, mode_length, spot_width, pulse_length, eps_r)

    @property
    def intensity(self) -> float:
        return self.amplitude**2

    @property
    def mode_volume(self) -> float:
        return self.mode_length * self.spot_width * self.pulse_length

    @property
    def pulse_energy(self) -> float:
        """Reconstructed energy; equals hbar*omega for a single photon."""
        return EPS_0 * self.eps_r * self.amplitude**2 * self.mode_volume


@dataclass(frozen=True)
class DeitScenario:
    """Atomic layer and drive parameters.

    Densities in 1/m^3, thickness in m, dipole magnitudes in C*m,
    detuning and Rabi frequency in rad/s, wavevector z-components
    (amplitude decay constants kp_a, kp_b of the two probe modes and kc
    of the control mode) in 1/m.
    """

    n1: float
    n3: float
    z0: float
    d24: float
    d15: float
    d35: float
    delta: float
    omega_c: float
    kp_a: float
    kp_b: float
    kc: float

    def __post_init__(self) -> None:
        for name in ("n1", "n3", "z0", "d24", "d15", "d35"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be non-negative")
        if self.omega_c == 0:
            raise DomainError("control Rabi frequency must be nonzero")
        if self.delta == 0:
            raise DomainError("spectral detuning must be nonzero")


def kerr_coefficient(
    scenario: DeitScenario,
    field_a: SinglePhotonField,
    field_b: SinglePhotonField,
    v_b0: float,
) -> float:
    """Cross-Kerr phase coefficient of pulse b due to pulse a.

    Evaluates

        chi_a = 2*pi*n1*z0 / (hbar**4 * v_b0 * |Omega_c|**2 * Delta)
                * overlap_factor((kp_a + kp_b - kc) * z0)
                * <|d24.E_b|**2> * <|d15.E_a|**2>

    with isotropically averaged dipole projections <|d.E|**2> =
    |d|**2 |E|**2 / 3 and the single-photon interface amplitudes of the
    two pulses.  The overlap factor carries the entire z-profile of the
    field products across the layer, so the amplitudes enter at their
    interface peak values.  The result is treated as the dimensionless
    phase coefficient used by the walk-through phase formulas; its sign
    follows the sign of the detuning.
    """
    if scenario.omega_c == 0 or scenario.delta == 0:
        raise SingularityError("Kerr coefficient diverges for Omega_c = 0 or Delta = 0")
    if v_b0 <= 0:
        raise DomainError("bare group velocity must be positive")
    u = (scenario.kp_a + scenario.kp_b - scenario.kc) * scenario.z0
    prefactor = (
        2.0
        * math.pi
        * scenario.n1
        * scenario.z0
        / (HBAR**4 * v_b0 * abs(scenario.omega_c) ** 2 * scenario.delta)
    )
    d_b = scenario.d24**2 * field_b.intensity / 3.0
    d_a = scenario.d15**2 * field_a.intensity / 3.0
    return prefactor * overlap_factor(u) * d_b * d_a


def slowdown_beta(scenario: DeitScenario, field_b: SinglePhotonField) -> float:
    """Slow-down parameter of pulse b in the driven layer.

    beta_b = 2*pi*n3*z0 * overlap_factor((kp_b - kc)*z0)
             * <|d35.E_b|**2> / (hbar**2 |Omega_c|**2)

    referred to the transverse footprint spot_width * pulse_length of
    the pulse, which makes the collective-coupling ratio dimensionless.
    Non-negative; the group velocity is v_b0 / (1 + beta_b).
    """
    if scenario.omega_c == 0:
        raise SingularityError("slow-down diverges for Omega_c = 0")
    u = (scenario.kp_b - scenario.kc) * scenario.z0
    coupling = scenario.d35**2 * field_b.intensity / 3.0 / (HBAR**2 * abs(scenario.omega_c) ** 2)
    footprint = field_b.spot_width * field_b.pulse_length
    return 2.0 * math.pi * scenario.n3 * scenario.z0 * overlap_factor(u) * coupling * footprint


def group_velocity(v0: float, beta: float) -> float:
    """Slowed group velocity v0 / (1 + beta)."""
    if v0 <= 0:
        raise DomainError("bare group velocity must be positive")
    if beta < 0:
        raise DomainError("slow-down parameter must be non-negative")
    return v0 / (1.0 + beta)


@dataclass(frozen=True)
class CollisionSetup:
    """Two-pulse collision geometry for the phase-shift formulas.

    Pulse b is expected to outrace pulse a (v_b > v_a); equality is the
    walk-off singularity and is rejected by the operations that divide
    by the velocity mismatch, not by this container, so that singular
    configurations can be diagnosed downstream.
    """

    tau: float
    Lx: float
    v_a0: float
    v_b0: float
    beta_a: float
    beta_b: float
    chi_a: float

    def __post_init__(self) -> None:
        if self.tau <= 0 or self.Lx <= 0:
            raise DomainError("tau and Lx must be positive")
        if self.v_a0 <= 0 or self.v_b0 <= 0:
            raise DomainError("bare group velocities must be positive")
        if self.beta_a < 0 or self.beta_b < 0:
            raise DomainError("slow-down parameters must be non-negative")

    @property
    def v_a(self) -> float:
        return self.v_a0 / (1.0 + self.beta_a)

    @property
    def v_b(self) -> float:
        return self.v_b0 / (1.0 + self.beta_b)


class XpmPhases(NamedTuple):
    exact: float
    walkthrough: float


def xpm_phase_shift(setup: CollisionSetup) -> XpmPhases:
    """Nonlinear phase of pulse b after sweeping through pulse a.

    Returns the exact walk-through expression

        phi = chi_a / (v_a0 * (1/v_a - 1/v_b))

    together with the medium-length approximation
    (Lx / 2 tau) * chi_a / v_a0, which coincides with it exactly when
    Lx * (1/v_a - 1/v_b) = 2 tau.
    """
    v_a, v_b = setup.v_a, setup.v_b
    if v_a == v_b:
        raise SingularityError("walk-off singularity: equal group velocities")
    inv_mismatch = 1.0 / v_a - 1.0 / v_b
    exact = setup.chi_a / (setup.v_a0 * inv_mismatch)
    walkthrough = (setup.Lx / (2.0 * setup.tau)) * setup.chi_a / setup.v_a0
    return XpmPhases(exact=exact, walkthrough=walkthrough)


class GasTemperatureBound(NamedTuple):
    v_max: float
    T_max: float


def max_gas_temperature(wavelength: float, delta: float, atom_mass: float) -> GasTemperatureBound:
    """Thermal-motion bound for a gas-phase atomic layer.

    Doppler shifts must stay well inside the transparency window, which
    caps the mean thermal velocity at v_max = 0.1 * wavelength * delta /
    (2*pi) and hence the gas temperature at m * v_max**2 / (2 kB).
    """
    if wavelength <= 0 or delta <= 0 or atom_mass <= 0:
        raise DomainError("wavelength, detuning and atomic mass must be positive")
    v_max = 0.1 * wavelength * delta / (2.0 * math.pi)
    t_max = atom_mass * v_max**2 / (2.0 * K_B)
    return GasTemperatureBound(v_max=v_max, T_max=t_max)
