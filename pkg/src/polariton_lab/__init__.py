"""Surface-polariton dispersion and slow-light cross-phase modulation.

Library layout:

- :mod:`polariton_lab.media`: material response of the two half-spaces
- :mod:`polariton_lab.dispersion`: bound-mode solver, loss minimum, sweeps
- :mod:`polariton_lab.deit`: driven-atomic-layer Kerr and slow-light formulas
- :mod:`polariton_lab.propagation`: two-pulse collision solver
- :mod:`polariton_lab.config` / :mod:`polariton_lab.pipeline` /
  :mod:`polariton_lab.cli`: configuration, scenario wiring, command line
"""

from .deit import (
    CollisionSetup,
    DeitScenario,
    GasTemperatureBound,
    SinglePhotonField,
    XpmPhases,
    group_velocity,
    kerr_coefficient,
    max_gas_temperature,
    overlap_factor,
    slowdown_beta,
    xpm_phase_shift,
)
from .dispersion import (
    InterfaceSpec,
    ModeProfile,
    Polarization,
    SurfaceMode,
    SweepRow,
    find_low_loss_frequency,
    mode_profile,
    mode_residuals,
    solve_mode,
    sweep,
)
from .errors import (
    BracketError,
    ConfigError,
    DomainError,
    ExtractionError,
    NoBoundModeError,
    PolaritonError,
    SingularityError,
)
from .media import DrudeMedium, UniformMedium
from .propagation import (
    PropagationConfig,
    PropagationResult,
    PulseState,
    extract_phase,
    gaussian_envelope,
    propagate_pair,
    square_envelope,
)

__version__ = "0.1.0"

__all__ = [
    "BracketError",
    "CollisionSetup",
    "ConfigError",
    "DeitScenario",
    "DomainError",
    "DrudeMedium",
    "ExtractionError",
    "GasTemperatureBound",
    "InterfaceSpec",
    "ModeProfile",
    "NoBoundModeError",
    "Polarization",
    "PolaritonError",
    "PropagationConfig",
    "PropagationResult",
    "PulseState",
    "SingularityError",
    "SinglePhotonField",
    "SurfaceMode",
    "SweepRow",
    "UniformMedium",
    "XpmPhases",
    "extract_phase",
    "find_low_loss_frequency",
    "gaussian_envelope",
    "group_velocity",
    "kerr_coefficient",
    "max_gas_temperature",
    "mode_profile",
    "mode_residuals",
    "overlap_factor",
    "propagate_pair",
    "slowdown_beta",
    "solve_mode",
    "square_envelope",
    "sweep",
    "xpm_phase_shift",
]
