"""Scenario evaluation: wiring dispersion, the atomic layer and the solver.

These helpers implement the evaluation recipes behind the CLI commands
so that they can be exercised directly from tests.  The per-frequency
Kerr evaluation follows the thin-layer operating recipe: unless the
config pins them, the layer thickness tracks 1/Re(k1) and the probe and
control decay constants track Re(k1), so the decay-thickness products
stay at unity across the sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import RunConfig
from .deit import (
    CollisionSetup,
    DeitScenario,
    SinglePhotonField,
    kerr_coefficient,
    max_gas_temperature,
    xpm_phase_shift,
)
from .dispersion import (
    Polarization,
    SweepRow,
    find_low_loss_frequency,
    mode_profile,
    solve_mode,
    sweep,
)
from .errors import NoBoundModeError
from .propagation import (
    PropagationConfig,
    PropagationResult,
    PulseState,
    gaussian_envelope,
    propagate_pair,
    square_envelope,
)


def run_sweep(
    cfg: RunConfig,
    points: int | None = None,
    polarization: Polarization | None = None,
) -> list[SweepRow]:
    cfg.require("media", "sweep")
    iface = cfg.media.interface()
    n = points if points is not None else cfg.sweep.points
    pol = polarization if polarization is not None else cfg.sweep.polarization
    omegas = np.linspace(cfg.sweep.omega_min, cfg.sweep.omega_max, n) * cfg.media.omega_e
    return sweep(iface, pol, omegas, lambda_ref=cfg.sweep.lambda_ref)


@dataclass(frozen=True)
class LowLossReport:
    omega0: float
    omega0_norm: float
    kappa: float
    zeta1: float
    Lz_over_lambda: float


def locate_low_loss(cfg: RunConfig, polarization: Polarization | None = None) -> LowLossReport:
    cfg.require("media", "sweep")
    iface = cfg.media.interface()
    pol = polarization if polarization is not None else cfg.sweep.polarization
    bracket = (
        cfg.sweep.bracket_min * cfg.media.omega_e,
        cfg.sweep.bracket_max * cfg.media.omega_e,
    )
    omega0 = find_low_loss_frequency(iface, pol, bracket)
    mode = solve_mode(omega0, iface, pol)
    profile = mode_profile(mode, iface)
    return LowLossReport(
        omega0=omega0,
        omega0_norm=omega0 / cfg.media.omega_e,
        kappa=mode.kappa,
        zeta1=profile.zeta1,
        Lz_over_lambda=profile.Lz / cfg.sweep.lambda_ref,
    )


@dataclass(frozen=True)
class KerrPoint:
    omega_norm: float
    chi_a: float
    phi_exact: float
    phi_walkthrough: float


def _resolve(value, fallback: float) -> float:
    return fallback if value == "auto" else value


def kerr_at_omega(cfg: RunConfig, omega: float) -> KerrPoint:
    """Kerr coefficient and collision phase at one angular frequency.

    Frequencies without a bound mode, and modes with no dielectric-side
    confinement to set the layer thickness against, yield NaN entries.
    """
    cfg.require("media", "sweep", "deit", "collision")
    iface = cfg.media.interface()
    pol = cfg.sweep.polarization
    norm = omega / cfg.media.omega_e
    try:
        mode = solve_mode(omega, iface, pol)
    except NoBoundModeError:
        return KerrPoint(norm, math.nan, math.nan, math.nan)
    profile = mode_profile(mode, iface)
    kp = mode.k1.real
    if profile.deconfined or not math.isfinite(profile.Lz) or kp <= 0:
        return KerrPoint(norm, math.nan, math.nan, math.nan)

    deit = cfg.deit
    col = cfg.collision
    scenario = DeitScenario(
        n1=deit.n1,
        n3=deit.n3,
        z0=_resolve(deit.z0, 1.0 / kp),
        d24=deit.d24,
        d15=deit.d15,
        d35=deit.d35,
        delta=deit.delta_rad,
        omega_c=deit.omega_c_rad,
        kp_a=_resolve(deit.kp_a, kp),
        kp_b=_resolve(deit.kp_b, kp),
        kc=_resolve(deit.kc, kp),
    )
    field_a = SinglePhotonField.single_photon(
        omega=omega,
        mode_length=profile.Lz,
        spot_width=deit.spot_width,
        pulse_length=col.v_a0 * col.tau,
        eps_r=cfg.media.eps1,
    )
    field_b = SinglePhotonField.single_photon(
        omega=omega,
        mode_length=profile.Lz,
        spot_width=deit.spot_width,
        pulse_length=col.v_b0 * col.tau,
        eps_r=cfg.media.eps1,
    )
    chi = kerr_coefficient(scenario, field_a, field_b, col.v_b0)
    phases = xpm_phase_shift(collision_setup(cfg, chi))
    return KerrPoint(norm, chi, phases.exact, phases.walkthrough)


def run_kerr_sweep(cfg: RunConfig, points: int | None = None) -> list[KerrPoint]:
    cfg.require("media", "sweep", "deit", "collision")
    n = points if points is not None else cfg.sweep.points
    omegas = np.linspace(cfg.sweep.omega_min, cfg.sweep.omega_max, n) * cfg.media.omega_e
    return [kerr_at_omega(cfg, float(w)) for w in omegas]


def collision_setup(cfg: RunConfig, chi_a: float) -> CollisionSetup:
    col = cfg.collision
    return CollisionSetup(
        tau=col.tau,
        Lx=col.L_x,
        v_a0=col.v_a0,
        v_b0=col.v_b0,
        beta_a=col.beta_a,
        beta_b=col.beta_b,
        chi_a=chi_a,
    )


def resolve_chi(cfg: RunConfig) -> float:
    """The collision's Kerr coefficient: configured, or derived at omega_op."""
    cfg.require("collision")
    chi = cfg.collision.chi_a
    if chi != "auto":
        return chi
    cfg.require("media", "sweep", "deit")
    point = kerr_at_omega(cfg, cfg.deit.omega_op * cfg.media.omega_e)
    if not math.isfinite(point.chi_a):
        raise NoBoundModeError(
            "cannot derive chi_a: no confined mode at the operating frequency"
        )
    return point.chi_a


def build_collision_scenario(
    cfg: RunConfig, chi_a: float
) -> tuple[PulseState, PulseState, PropagationConfig, CollisionSetup]:
    """Initial pulse states and solver settings for the configured collision."""
    cfg.require("collision", "propagation")
    setup = collision_setup(cfg, chi_a)
    prop = cfg.propagation
    dx = prop.x_span / prop.nx
    x = np.arange(prop.nx) * dx
    v_a, v_b = setup.v_a, setup.v_b

    if prop.pulse_shape == "square":
        env_a = square_envelope(x, prop.center_a, v_a * setup.tau)
        env_b = square_envelope(x, prop.center_b, v_b * setup.tau)
    else:
        env_a = gaussian_envelope(x, prop.center_a, v_a * setup.tau)
        env_b = gaussian_envelope(x, prop.center_b, v_b * setup.tau)

    g_xpm = chi_a / (setup.v_a0 * setup.tau)
    pcfg = PropagationConfig(
        dt=prop.dt,
        t_final=prop.t_final,
        g_xpm=g_xpm,
        g_spm=prop.g_spm,
        kappa=prop.kappa,
        snapshot_every=prop.snapshot_every,
    )
    a0 = PulseState(envelope=env_a, v=v_a, x_grid=x)
    b0 = PulseState(envelope=env_b, v=v_b, x_grid=x)
    return a0, b0, pcfg, setup


@dataclass(frozen=True)
class PropagationComparison:
    numeric: float
    exact: float
    walkthrough: float
    deviation: float
    result: PropagationResult


def propagation_comparison(cfg: RunConfig) -> PropagationComparison:
    """Run the collision and compare against the analytic phase formulas."""
    chi = resolve_chi(cfg)
    a0, b0, pcfg, setup = build_collision_scenario(cfg, chi)
    result = propagate_pair(a0, b0, pcfg)
    numeric = float(np.max(np.abs(result.phase_profile_b)))
    phases = xpm_phase_shift(setup)
    if phases.exact == 0.0:
        deviation = 0.0 if numeric == 0.0 else math.inf
    else:
        deviation = abs(numeric - abs(phases.exact)) / abs(phases.exact)
    return PropagationComparison(
        numeric=numeric,
        exact=phases.exact,
        walkthrough=phases.walkthrough,
        deviation=deviation,
        result=result,
    )


@dataclass(frozen=True)
class TemperatureReading:
    convention: str
    delta_rad: float
    v_max: float
    T_max: float


def temperature_report(cfg: RunConfig) -> list[TemperatureReading]:
    """Doppler bound under both readings of the quoted detuning."""
    cfg.require("deit")
    deit = cfg.deit
    readings = []
    for convention, delta_rad in (
        ("ordinary", 2.0 * math.pi * deit.delta),
        ("angular", deit.delta),
    ):
        bound = max_gas_temperature(deit.wavelength, delta_rad, deit.atom_mass)
        readings.append(
            TemperatureReading(
                convention=convention,
                delta_rad=delta_rad,
                v_max=bound.v_max,
                T_max=bound.T_max,
            )
        )
    return readings
