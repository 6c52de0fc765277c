"""Surface-polariton dispersion, loss and confinement at a planar interface.

The complex propagation constant K of a surface wave guided by the
interface between a uniform dielectric (z > 0) and a doubly dispersive
Drude medium (z < 0) follows in closed form from the boundary
conditions.  For the TM polarization

    K**2 = (w/c)**2 * eps2*mu2 * (1 - eta_eps/eta_mu) / (1 - eta_eps**2)

with eta_eps = eps2/eps1 and eta_mu = mu2/mu1; the TE case exchanges the
roles of eta_eps and eta_mu.  The normal wavenumbers on the two sides
satisfy k_j**2 = K**2 - (w/c)**2 * eps_j*mu_j and the boundary condition
-k2/k1 = eta (eta_eps for TM, eta_mu for TE).

No root search is needed; the delicate part is branch selection.  Each
square root is taken on the principal branch and the sign is flipped to
enforce Re > 0 (forward propagation for K, evanescent decay for k1, k2),
with Re = 0 ties broken toward Im >= 0.  A frequency hosts a bound mode
only if the sign-corrected pair still satisfies the boundary condition
and Im K >= 0 (the forward wave must decay, not grow).  Near the
low-loss frequency the mode approaches the dielectric light line, Re k1
tends to zero and the field deconfines; profiles there are flagged
rather than rejected.

All operations are pure functions of value types and may be called from
any number of threads; sweeps are embarrassingly parallel over grid
points (this implementation evaluates them sequentially, in order).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.constants import c as C_LIGHT

from .errors import BracketError, DomainError, NoBoundModeError, SingularityError
from .media import DrudeMedium, UniformMedium

# Acceptance tolerances for a solved mode.
BOUNDARY_RTOL = 1e-8
WAVE_RESIDUAL_RTOL = 1e-10
DENOMINATOR_ATOL = 1e-12

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


class Polarization(Enum):
    TM = "TM"
    TE = "TE"


@dataclass(frozen=True)
class InterfaceSpec:
    """Dielectric half-space (z > 0) over a Drude half-space (z < 0)."""

    dielectric: UniformMedium
    nimm: DrudeMedium

    def swapped(self) -> "InterfaceSpec":
        """Duality partner: eps and mu roles exchanged in both media.

        Solving TE on this interface equals solving TM on the swapped one.
        """
        return InterfaceSpec(
            dielectric=UniformMedium(eps=self.dielectric.mu, mu=self.dielectric.eps),
            nimm=DrudeMedium(
                eps_b=self.nimm.mu_b,
                mu_b=self.nimm.eps_b,
                omega_e=self.nimm.omega_m,
                gamma_e=self.nimm.gamma_m,
                omega_m=self.nimm.omega_e,
                gamma_m=self.nimm.gamma_e,
            ),
        )


@dataclass(frozen=True)
class SurfaceMode:
    """A solved bound mode at one frequency.

    K_parallel is the complex wavenumber along the interface (real part:
    propagation constant, imaginary part: absorption); k1 and k2 are the
    normal wavenumbers in the dielectric and the Drude medium.
    """

    omega: float
    polarization: Polarization
    K_parallel: complex
    k1: complex
    k2: complex
    eta_eps: complex
    eta_mu: complex

    @property
    def k_par(self) -> float:
        return self.K_parallel.real

    @property
    def kappa(self) -> float:
        return self.K_parallel.imag

    @property
    def zeta1(self) -> float:
        """Decay length of the field amplitude into the dielectric."""
        return 1.0 / self.k1.real if self.k1.real > 0 else math.inf

    @property
    def zeta2(self) -> float:
        return 1.0 / self.k2.real if self.k2.real > 0 else math.inf


@dataclass(frozen=True)
class ModeProfile:
    """Confinement lengths, mode length and per-side energy fractions."""

    zeta1: float
    zeta2: float
    Lz: float
    term_dielectric: float
    term_nimm: float
    frac_dielectric: float
    frac_nimm: float
    deconfined: bool


def _decaying_root(wsq):
    """Square root with Re >= 0, ties (Re == 0) broken toward Im >= 0."""
    root = np.sqrt(np.asarray(wsq, dtype=complex))
    flip = (root.real < 0) | ((root.real == 0) & (root.imag < 0))
    return np.where(flip, -root, root)


def _dispersion_fields(omega, iface: InterfaceSpec, pol: Polarization):
    """Vectorized K, k1, k2 and validity masks over one or many frequencies.

    Returns (K, k1, k2, eta_eps, eta_mu, singular, bound); `singular`
    marks frequencies where 1 - eta**2 is numerically zero and `bound`
    marks frequencies hosting a bound mode.
    """
    eps1 = iface.dielectric.eps
    mu1 = iface.dielectric.mu
    eps2 = iface.nimm.permittivity(omega)
    mu2 = iface.nimm.permeability(omega)
    eta_eps = eps2 / eps1
    eta_mu = mu2 / mu1
    if pol is Polarization.TM:
        eta, other = eta_eps, eta_mu
    else:
        eta, other = eta_mu, eta_eps

    k0sq = (np.asarray(omega) / C_LIGHT) ** 2
    denom = 1.0 - eta * eta
    singular = np.abs(denom) <= DENOMINATOR_ATOL * np.maximum(1.0, np.abs(eta) ** 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        Ksq = k0sq * eps2 * mu2 * (1.0 - eta / other) / denom
        K = _decaying_root(Ksq)
        k1 = _decaying_root(K * K - k0sq * eps1 * mu1)
        k2 = _decaying_root(K * K - k0sq * eps2 * mu2)
        residual = np.abs(k2 / k1 + eta) / np.abs(eta)
    bound = (
        ~singular
        & np.isfinite(residual)
        & (residual <= BOUNDARY_RTOL)
        & (np.imag(K) >= 0)
    )
    return K, k1, k2, eta_eps, eta_mu, singular, bound


def solve_mode(omega: float, iface: InterfaceSpec, pol: Polarization) -> SurfaceMode:
    """Solve the interface dispersion relation at one frequency.

    Raises SingularityError when 1 - eta**2 degenerates, and
    NoBoundModeError when no branch pair yields an evanescent,
    non-growing forward wave (e.g. below the low-loss frequency, where
    the solution dips inside the dielectric light cone).
    """
    if omega <= 0:
        raise DomainError("angular frequency must be positive")
    K, k1, k2, eta_eps, eta_mu, singular, bound = _dispersion_fields(omega, iface, pol)
    if singular:
        raise SingularityError(
            f"dispersion denominator 1 - eta**2 vanishes at omega={omega:g}"
        )
    if not bound:
        raise NoBoundModeError(
            f"no bound {pol.value} mode at omega={omega:g}: the sign-corrected "
            "branch pair violates the boundary condition or Im K < 0"
        )
    return SurfaceMode(
        omega=float(omega),
        polarization=pol,
        K_parallel=complex(K),
        k1=complex(k1),
        k2=complex(k2),
        eta_eps=complex(eta_eps),
        eta_mu=complex(eta_mu),
    )


def mode_residuals(mode: SurfaceMode, iface: InterfaceSpec) -> dict:
    """Relative residuals of the wave-equation and boundary constraints."""
    k0sq = (mode.omega / C_LIGHT) ** 2
    eps1, mu1 = iface.dielectric.eps, iface.dielectric.mu
    eps2 = iface.nimm.permittivity(mode.omega)
    mu2 = iface.nimm.permeability(mode.omega)
    Ksq = mode.K_parallel**2
    scale = abs(Ksq)
    eta = mode.eta_eps if mode.polarization is Polarization.TM else mode.eta_mu
    return {
        "wave_dielectric": abs(mode.k1**2 - (Ksq - k0sq * eps1 * mu1)) / scale,
        "wave_nimm": abs(mode.k2**2 - (Ksq - k0sq * eps2 * mu2)) / scale,
        "boundary": abs(mode.k2 / mode.k1 + eta) / abs(eta),
    }


def mode_profile(mode: SurfaceMode, iface: InterfaceSpec) -> ModeProfile:
    """Mode length and per-side energy split of a solved mode.

    Each half-space contributes (energy-density weight) x (decay length)
    to the mode length; the energy fractions are those two terms divided
    by their sum.  A side with Re k_j = 0 has no evanescent confinement:
    the profile is returned with infinite lengths and flagged deconfined
    instead of failing.
    """
    w = mode.omega
    k0sq = (w / C_LIGHT) ** 2
    kpar_sq = mode.k_par**2
    die, nimm = iface.dielectric, iface.nimm

    if mode.polarization is Polarization.TM:
        weight1 = die.eps_energy_factor(w)
        weight2 = nimm.eps_energy_factor(w)
        cross1 = die.mu_energy_factor(w) * abs(die.permittivity(w)) ** 2
        cross2 = nimm.mu_energy_factor(w) * abs(nimm.permittivity(w)) ** 2
    else:
        weight1 = die.mu_energy_factor(w)
        weight2 = nimm.mu_energy_factor(w)
        cross1 = die.eps_energy_factor(w) * abs(die.permeability(w)) ** 2
        cross2 = nimm.eps_energy_factor(w) * abs(nimm.permeability(w)) ** 2

    bracket1 = weight1 * (1.0 + kpar_sq / abs(mode.k1) ** 2) + k0sq * cross1 / abs(mode.k1) ** 2
    bracket2 = weight2 * (1.0 + kpar_sq / abs(mode.k2) ** 2) + k0sq * cross2 / abs(mode.k2) ** 2

    zeta1, zeta2 = mode.zeta1, mode.zeta2
    term1 = bracket1 * zeta1
    term2 = bracket2 * zeta2
    Lz = term1 + term2
    deconfined = math.isinf(zeta1) or math.isinf(zeta2)
    if deconfined or Lz == 0:
        frac1 = frac2 = math.nan
    else:
        frac1 = term1 / Lz
        frac2 = term2 / Lz
    return ModeProfile(
        zeta1=zeta1,
        zeta2=zeta2,
        Lz=Lz,
        term_dielectric=term1,
        term_nimm=term2,
        frac_dielectric=frac1,
        frac_nimm=frac2,
        deconfined=deconfined,
    )


def loss_on_grid(omegas: np.ndarray, iface: InterfaceSpec, pol: Polarization) -> np.ndarray:
    """Im K over a frequency grid, +inf where no bound mode exists."""
    K, _, _, _, _, _, bound = _dispersion_fields(np.asarray(omegas, dtype=float), iface, pol)
    return np.where(bound, np.imag(K), np.inf)


def find_low_loss_frequency(
    iface: InterfaceSpec,
    pol: Polarization,
    bracket: tuple[float, float],
    grid_points: int = 4096,
    rel_tol: float = 1e-8,
) -> float:
    """Locate the loss minimum: argmin of Im K(omega) on the bracket.

    A coarse grid scan finds the basin (the dip can be very sharp), then
    golden-section refinement narrows it to `rel_tol` relative accuracy
    in omega.  Frequencies without a bound mode score +inf.

    Degenerate case: with zero damping the loss vanishes identically, so
    every point ties; the grid argmin (the first grid point) is returned
    without refinement.  Otherwise an argmin on the bracket edge raises
    BracketError and an entirely unbound bracket raises NoBoundModeError.
    """
    lo, hi = bracket
    if not (0 < lo < hi):
        raise DomainError(f"invalid bracket ({lo:g}, {hi:g})")
    if grid_points < 3:
        raise DomainError("grid scan needs at least 3 points")

    grid = np.linspace(lo, hi, grid_points)
    kappa = loss_on_grid(grid, iface, pol)
    finite = np.isfinite(kappa)
    if not finite.any():
        raise NoBoundModeError("no bound mode anywhere on the bracket")

    kmin = kappa[finite].min()
    kmax = kappa[finite].max()
    if kmin == kmax:
        # Flat loss (zero damping): every bound point is a minimum.
        return float(grid[int(np.argmin(kappa))])

    i_min = int(np.argmin(kappa))
    if i_min == 0 or i_min == grid_points - 1:
        raise BracketError(
            "loss minimum sits on the bracket boundary; widen the bracket"
        )

    def objective(w: float) -> float:
        return float(loss_on_grid(np.asarray([w]), iface, pol)[0])

    a, b = float(grid[i_min - 1]), float(grid[i_min + 1])
    x_best, f_best = float(grid[i_min]), float(kappa[i_min])
    c = a + _INV_PHI2 * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = objective(c), objective(d)
    while (b - a) > rel_tol * x_best:
        for x, f in ((c, fc), (d, fd)):
            if f < f_best:
                x_best, f_best = x, f
        if fc < fd:
            b, d, fd = d, c, fc
            c = a + _INV_PHI2 * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = objective(d)
    for x, f in ((c, fc), (d, fd)):
        if f < f_best:
            x_best, f_best = x, f
    return x_best


@dataclass(frozen=True)
class SweepRow:
    """One frequency sample of a characterization sweep.

    Lengths are normalized to the reference wavelength; frequencies to
    the electric plasma frequency of the Drude medium.  `status` is one
    of "ok", "deconfined", "no_bound_mode" or "singular"; rows without a
    bound mode carry NaN in the numeric columns.
    """

    omega_norm: float
    k_parallel: float
    kappa: float
    zeta1_over_lambda: float
    Lz_over_lambda: float
    frac_dielectric: float
    frac_nimm: float
    status: str


def sweep(
    iface: InterfaceSpec,
    pol: Polarization,
    omegas,
    lambda_ref: float = 780e-9,
) -> list[SweepRow]:
    """Characterize the interface on a frequency grid, one row per point.

    The grid must be strictly increasing and positive.  Points without a
    bound mode are emitted with a status flag, never dropped, so the
    output row count always equals the grid size.
    """
    omegas = np.asarray(omegas, dtype=float)
    if omegas.size == 0:
        raise DomainError("sweep grid is empty")
    if not np.all(omegas > 0):
        raise DomainError("sweep grid must be positive")
    if omegas.size > 1 and not np.all(np.diff(omegas) > 0):
        raise DomainError("sweep grid must be strictly increasing")

    rows = []
    nan = math.nan
    for w in omegas:
        norm = float(w / iface.nimm.omega_e)
        try:
            mode = solve_mode(float(w), iface, pol)
        except NoBoundModeError:
            rows.append(SweepRow(norm, nan, nan, nan, nan, nan, nan, "no_bound_mode"))
            continue
        except SingularityError:
            rows.append(SweepRow(norm, nan, nan, nan, nan, nan, nan, "singular"))
            continue
        profile = mode_profile(mode, iface)
        rows.append(
            SweepRow(
                omega_norm=norm,
                k_parallel=mode.k_par,
                kappa=mode.kappa,
                zeta1_over_lambda=profile.zeta1 / lambda_ref,
                Lz_over_lambda=profile.Lz / lambda_ref,
                frac_dielectric=profile.frac_dielectric,
                frac_nimm=profile.frac_nimm,
                status="deconfined" if profile.deconfined else "ok",
            )
        )
    return rows
