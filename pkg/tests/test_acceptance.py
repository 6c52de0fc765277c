"""Acceptance suite: one test per release criterion, in order.

Each test prints a PASS line with the measured quantities once its
assertions hold, so `pytest -v -s tests/test_acceptance.py` reads as a
checklist.  Tolerances are fixed here, not tuned at runtime.
"""

import math
import time
from dataclasses import replace

import numpy as np
import pytest

from polariton_lab import (
    DrudeMedium,
    InterfaceSpec,
    NoBoundModeError,
    Polarization,
    UniformMedium,
    find_low_loss_frequency,
    kerr_coefficient,
    mode_profile,
    mode_residuals,
    overlap_factor,
    solve_mode,
    xpm_phase_shift,
)
from polariton_lab.deit import CollisionSetup, DeitScenario, SinglePhotonField
from polariton_lab.dispersion import loss_on_grid
from polariton_lab.pipeline import (
    build_collision_scenario,
    kerr_at_omega,
    propagation_comparison,
    resolve_chi,
    run_sweep,
    temperature_report,
)

OMEGA_E = 1.37e16
BRACKET = (0.10 * OMEGA_E, 0.20 * OMEGA_E)


def report(number: int, message: str) -> None:
    print(f"criterion {number:02d} PASS: {message}")


def test_c01_zero_damping_suppresses_loss(iface):
    nimm = iface.nimm
    lossless = InterfaceSpec(
        dielectric=iface.dielectric,
        nimm=DrudeMedium(
            eps_b=nimm.eps_b, mu_b=nimm.mu_b,
            omega_e=nimm.omega_e, gamma_e=0.0,
            omega_m=nimm.omega_m, gamma_m=0.0,
        ),
    )
    start = time.perf_counter()
    worst = 0.0
    for wn in np.linspace(0.118, 0.20, 100):
        mode = solve_mode(wn * OMEGA_E, lossless, Polarization.TM)
        worst = max(worst, abs(mode.K_parallel.imag) / abs(mode.K_parallel))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-12
    assert elapsed < 1.0
    report(1, f"max |Im K|/|K| = {worst:.1e} over 100 undamped points ({elapsed:.2f}s)")


def test_c02_low_loss_window(iface):
    start = time.perf_counter()
    omega0 = find_low_loss_frequency(iface, Polarization.TM, BRACKET)
    kappa0 = solve_mode(omega0, iface, Polarization.TM).kappa
    grid = loss_on_grid(np.linspace(*BRACKET, 4096), iface, Polarization.TM)
    kappa_max = float(np.max(grid[np.isfinite(grid)]))
    elapsed = time.perf_counter() - start
    assert BRACKET[0] < omega0 < BRACKET[1]
    assert kappa0 <= 1e-3 * kappa_max
    assert elapsed < 5.0
    report(
        2,
        f"omega0 = {omega0 / OMEGA_E:.6f} we, kappa(omega0)/max = "
        f"{kappa0 / kappa_max:.1e} ({elapsed:.2f}s)",
    )


def test_c03_mode_length_minimum(cfg):
    start = time.perf_counter()
    rows = run_sweep(cfg)
    best = min(r.Lz_over_lambda for r in rows if r.status == "ok")
    elapsed = time.perf_counter() - start
    assert 30.0 <= best <= 120.0
    assert elapsed < 5.0
    report(3, f"min Lz/lambda over the sweep = {best:.1f} ({elapsed:.2f}s)")


def test_c04_energy_fractions(cfg, iface):
    rows = [r for r in run_sweep(cfg) if r.status == "ok"]
    assert len(rows) > 100
    worst = max(abs(r.frac_dielectric + r.frac_nimm - 1.0) for r in rows)
    assert worst <= 1e-9
    omega0 = find_low_loss_frequency(iface, cfg.sweep.polarization, BRACKET)
    frac_nimm = mode_profile(
        solve_mode(omega0, iface, cfg.sweep.polarization), iface
    ).frac_nimm
    assert frac_nimm <= 0.05
    report(
        4,
        f"sum deviation <= {worst:.1e} on {len(rows)} points, "
        f"frac_nimm(omega0) = {frac_nimm:.4f}",
    )


def test_c05_energy_factor_derivative_cross_check():
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(1000):
        medium = DrudeMedium(
            eps_b=rng.uniform(1, 5),
            mu_b=rng.uniform(1, 5),
            omega_e=rng.uniform(5e15, 3e16),
            gamma_e=rng.uniform(0, 5e13),
            omega_m=rng.uniform(0.05, 0.5) * 1e16,
            gamma_m=rng.uniform(0, 1e12),
        )
        w = rng.uniform(0.05, 0.5) * medium.omega_e
        h = 1e-6 * w
        fd_eps = ((w + h) * medium.permittivity(w + h)
                  - (w - h) * medium.permittivity(w - h)).real / (2 * h)
        fd_mu = ((w + h) * medium.permeability(w + h)
                 - (w - h) * medium.permeability(w - h)).real / (2 * h)
        worst = max(
            worst,
            abs(medium.eps_energy_factor(w) - fd_eps) / abs(fd_eps),
            abs(medium.mu_energy_factor(w) - fd_mu) / abs(fd_mu),
        )
    assert worst <= 1e-6
    report(5, f"analytic vs finite-difference energy factors: worst rel = {worst:.1e}")


def test_c06_te_tm_swap_identity():
    rng = np.random.default_rng(211)
    worst = 0.0
    compared = 0
    for _ in range(1000):
        iface = InterfaceSpec(
            dielectric=UniformMedium(eps=rng.uniform(1, 3), mu=rng.uniform(1, 2)),
            nimm=DrudeMedium(
                eps_b=rng.uniform(1, 3),
                mu_b=rng.uniform(1, 3),
                omega_e=rng.uniform(5e15, 3e16),
                gamma_e=rng.uniform(0, 5e13),
                omega_m=rng.uniform(1e15, 1e16),
                gamma_m=rng.uniform(0, 5e11),
            ),
        )
        w = rng.uniform(0.05, 0.5) * iface.nimm.omega_e
        try:
            te = solve_mode(w, iface, Polarization.TE)
        except NoBoundModeError:
            with pytest.raises(NoBoundModeError):
                solve_mode(w, iface.swapped(), Polarization.TM)
            continue
        tm = solve_mode(w, iface.swapped(), Polarization.TM)
        worst = max(
            worst,
            abs(te.K_parallel - tm.K_parallel) / abs(tm.K_parallel),
            abs(te.k1 - tm.k1) / abs(tm.k1),
            abs(te.k2 - tm.k2) / abs(tm.k2),
        )
        compared += 1
    assert worst <= 1e-12
    assert compared >= 50
    report(6, f"TE == TM-on-swapped to {worst:.1e} on {compared}/1000 bound draws")


def test_c07_dispersion_residuals(cfg, iface):
    worst_wave = 0.0
    worst_boundary = 0.0
    count = 0
    for wn in np.linspace(0.117, 0.20, 400):
        try:
            mode = solve_mode(wn * OMEGA_E, iface, Polarization.TM)
        except NoBoundModeError:
            continue
        res = mode_residuals(mode, iface)
        worst_wave = max(worst_wave, res["wave_dielectric"], res["wave_nimm"])
        worst_boundary = max(worst_boundary, res["boundary"])
        count += 1
    assert count > 300
    assert worst_wave <= 1e-10
    assert worst_boundary <= 1e-8
    report(
        7,
        f"wave residual <= {worst_wave:.1e}, boundary residual <= "
        f"{worst_boundary:.1e} at {count} accepted modes",
    )


def test_c08_overlap_factor_properties():
    assert overlap_factor(0.0) == 1.0
    assert overlap_factor(1.0) == pytest.approx((1 - math.exp(-2)) / 2, rel=1e-12)
    grid = np.linspace(0.0, 25.0, 1_000_000)
    values = np.array([overlap_factor(float(u)) for u in grid])
    diffs = np.diff(values)
    assert np.all(diffs < 0)
    assert values.min() > 0 and values.max() == 1.0
    report(8, "overlap factor: limit 1 at 0, closed form at 1, strictly decreasing on 1e6 points")


def test_c09_xpm_oracle_equivalence(cfg):
    start = time.perf_counter()
    base = propagation_comparison(cfg)
    assert base.deviation <= 0.05

    refined_prop = replace(
        cfg.propagation, nx=2 * cfg.propagation.nx, dt=cfg.propagation.dt / 2
    )
    refined_cfg = replace(cfg, propagation=refined_prop)
    fine = propagation_comparison(refined_cfg)
    assert fine.deviation <= 0.02

    chi = resolve_chi(cfg)
    _, _, _, setup = build_collision_scenario(cfg, chi)
    mismatch = 1.0 / setup.v_a - 1.0 / setup.v_b
    tuned = replace(setup, Lx=2.0 * setup.tau / mismatch)
    phases = xpm_phase_shift(tuned)
    assert phases.exact == pytest.approx(phases.walkthrough, rel=1e-12)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    report(
        9,
        f"numeric vs exact: {base.deviation:.2%} coarse, {fine.deviation:.2%} refined; "
        f"exact == walkthrough to 1e-12 ({elapsed:.1f}s)",
    )


def test_c10_order_pi_phase(cfg):
    point = kerr_at_omega(cfg, cfg.deit.omega_op * OMEGA_E)
    assert 0.3 * math.pi <= point.phi_exact <= 3.0 * math.pi
    report(
        10,
        f"phi_b(0.144 we) = {point.phi_exact:.3f} rad = {point.phi_exact / math.pi:.3f} pi",
    )


def test_c11_kerr_and_phase_increase_with_frequency(cfg):
    band = np.linspace(0.125, 0.17, 61) * OMEGA_E
    points = [kerr_at_omega(cfg, float(w)) for w in band]
    chis = [p.chi_a for p in points]
    phis = [p.phi_exact for p in points]
    assert all(math.isfinite(c) for c in chis)
    assert all(b > a for a, b in zip(chis, chis[1:]))
    assert all(b > a for a, b in zip(phis, phis[1:]))
    report(
        11,
        f"chi and phi strictly increasing on [0.125, 0.17] we "
        f"(chi: {chis[0]:.3g} -> {chis[-1]:.3g})",
    )


def test_c12_temperature_bound(cfg):
    readings = temperature_report(cfg)
    assert [r.convention for r in readings] == ["ordinary", "angular"]
    target = 0.8e-6
    ratios = [max(r.T_max / target, target / r.T_max) for r in readings]
    assert min(ratios) <= 3.0
    report(
        12,
        "T_max = "
        + ", ".join(f"{r.T_max * 1e6:.2f} uK ({r.convention})" for r in readings)
        + f"; best within x{min(ratios):.2f} of 0.8 uK",
    )


def test_c13_scaling_properties(cfg):
    base_scenario = DeitScenario(
        n1=1e20, n3=1e20, z0=1.25e-6,
        d24=3.39e-29, d15=3.39e-29, d35=3.39e-29,
        delta=2 * math.pi * 1.38e6, omega_c=2 * math.pi * 1e6,
        kp_a=8e5, kp_b=8e5, kc=8e5,
    )
    field = SinglePhotonField.single_photon(
        omega=0.144 * OMEGA_E, mode_length=1.8e-4, spot_width=7.8e-7, pulse_length=225.0
    )
    chi = kerr_coefficient(base_scenario, field, field, v_b0=2.25e8)

    def check(label, scenario, expected_factor):
        scaled = kerr_coefficient(scenario, field, field, v_b0=2.25e8)
        assert abs(scaled - expected_factor * chi) <= 1e-10 * abs(expected_factor * chi), label

    check("n1 x2", replace(base_scenario, n1=2e20), 2.0)
    check(
        "z0 x2 at fixed overlap",
        replace(base_scenario, z0=2.5e-6, kp_a=4e5, kp_b=4e5, kc=4e5),
        2.0,
    )
    check("omega_c x2", replace(base_scenario, omega_c=2 * base_scenario.omega_c), 0.25)
    check("delta x2", replace(base_scenario, delta=2 * base_scenario.delta), 0.5)

    setup = CollisionSetup(
        tau=1e-6, Lx=3e-4, v_a0=2.25e8, v_b0=2.25e8,
        beta_a=2999999.0, beta_b=1499999.0, chi_a=chi,
    )
    doubled = xpm_phase_shift(replace(setup, chi_a=2 * chi))
    single = xpm_phase_shift(setup)
    assert abs(doubled.exact - 2 * single.exact) <= 1e-10 * abs(2 * single.exact)
    assert abs(doubled.walkthrough - 2 * single.walkthrough) <= 1e-10 * abs(
        2 * single.walkthrough
    )
    report(13, "chi scalings (n1, z0, omega_c^-2, delta^-1) and phi linearity hold to 1e-10")
