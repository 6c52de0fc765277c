"""Run configuration: strict TOML loading and typed sections.

Configs are sectioned key-value TOML.  Parsing is strict: unknown
sections or keys are rejected outright, since a silently ignored typo in
a physics parameter is worse than an error.  Frequencies that describe
the sweep are given in units of the electric plasma frequency; everything
else is SI.

The `frequency_units` switch in the [deit] section fixes how the quoted
detuning and control Rabi frequency are read: "ordinary" treats them as
cyclic frequencies (Hz, multiplied by 2*pi internally), "angular" treats
them as already being rad/s.  Both readings are physically defensible
for a bare "MHz" figure; the temperature command always reports both.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .dispersion import InterfaceSpec, Polarization
from .errors import ConfigError
from .media import DrudeMedium, UniformMedium

DEFAULT_CONFIG_RESOURCE = "configs/rubidium_nimm.toml"

# 87Rb: mass and D2 transition wavelength.
RB87_MASS = 1.44316060e-25
RB87_WAVELENGTH = 7.8e-7

AutoFloat = Union[float, str]


@dataclass(frozen=True)
class MediaConfig:
    eps1: float
    mu1: float
    eps_b: float
    mu_b: float
    omega_e: float
    gamma_e: float
    omega_m: float
    gamma_m: float

    def interface(self) -> InterfaceSpec:
        return InterfaceSpec(
            dielectric=UniformMedium(eps=self.eps1, mu=self.mu1),
            nimm=DrudeMedium(
                eps_b=self.eps_b,
                mu_b=self.mu_b,
                omega_e=self.omega_e,
                gamma_e=self.gamma_e,
                omega_m=self.omega_m,
                gamma_m=self.gamma_m,
            ),
        )


@dataclass(frozen=True)
class SweepConfig:
    omega_min: float
    omega_max: float
    points: int
    polarization: Polarization
    lambda_ref: float
    bracket_min: float
    bracket_max: float


@dataclass(frozen=True)
class DeitConfig:
    n1: float
    n3: float
    d24: float
    d15: float
    d35: float
    delta: float
    omega_c: float
    spot_width: float
    z0: AutoFloat
    kp_a: AutoFloat
    kp_b: AutoFloat
    kc: AutoFloat
    frequency_units: str
    atom_mass: float
    wavelength: float
    omega_op: float

    def _to_angular(self, value: float) -> float:
        if self.frequency_units == "ordinary":
            return 2.0 * math.pi * value
        return value

    @property
    def delta_rad(self) -> float:
        return self._to_angular(self.delta)

    @property
    def omega_c_rad(self) -> float:
        return self._to_angular(self.omega_c)


@dataclass(frozen=True)
class CollisionConfig:
    tau: float
    L_x: float
    v_a0: float
    v_b0: float
    beta_a: float
    beta_b: float
    chi_a: AutoFloat


@dataclass(frozen=True)
class PropagationSection:
    nx: int
    x_span: float
    dt: float
    t_final: float
    pulse_shape: str
    center_a: float
    center_b: float
    g_spm: float
    kappa: float
    snapshot_every: int
    tolerance: float


@dataclass(frozen=True)
class RunConfig:
    media: MediaConfig | None
    sweep: SweepConfig | None
    deit: DeitConfig | None
    collision: CollisionConfig | None
    propagation: PropagationSection | None
    output: str | None
    source: str

    def require(self, *sections: str) -> None:
        missing = [name for name in sections if getattr(self, name) is None]
        if missing:
            raise ConfigError(
                f"{self.source}: missing required section(s) "
                + ", ".join(f"[{m}]" for m in missing)
            )


_FLOAT = "float"
_INT = "int"
_STR = "str"
_AUTO_FLOAT = "float or 'auto'"

_REQUIRED = object()

_SCHEMA: dict[str, dict[str, tuple[str, Any]]] = {
    "media": {
        "eps1": (_FLOAT, _REQUIRED),
        "mu1": (_FLOAT, _REQUIRED),
        "eps_b": (_FLOAT, _REQUIRED),
        "mu_b": (_FLOAT, _REQUIRED),
        "omega_e": (_FLOAT, _REQUIRED),
        "gamma_e": (_FLOAT, _REQUIRED),
        "omega_m": (_FLOAT, _REQUIRED),
        "gamma_m": (_FLOAT, _REQUIRED),
    },
    "sweep": {
        "omega_min": (_FLOAT, _REQUIRED),
        "omega_max": (_FLOAT, _REQUIRED),
        "points": (_INT, _REQUIRED),
        "polarization": (_STR, "TM"),
        "lambda_ref": (_FLOAT, RB87_WAVELENGTH),
        "bracket_min": (_FLOAT, None),
        "bracket_max": (_FLOAT, None),
    },
    "deit": {
        "n1": (_FLOAT, _REQUIRED),
        "n3": (_FLOAT, _REQUIRED),
        "d24": (_FLOAT, _REQUIRED),
        "d15": (_FLOAT, _REQUIRED),
        "d35": (_FLOAT, _REQUIRED),
        "delta": (_FLOAT, _REQUIRED),
        "omega_c": (_FLOAT, _REQUIRED),
        "spot_width": (_FLOAT, _REQUIRED),
        "z0": (_AUTO_FLOAT, "auto"),
        "kp_a": (_AUTO_FLOAT, "auto"),
        "kp_b": (_AUTO_FLOAT, "auto"),
        "kc": (_AUTO_FLOAT, "auto"),
        "frequency_units": (_STR, "ordinary"),
        "atom_mass": (_FLOAT, RB87_MASS),
        "wavelength": (_FLOAT, RB87_WAVELENGTH),
        "omega_op": (_FLOAT, 0.144),
    },
    "collision": {
        "tau": (_FLOAT, _REQUIRED),
        "L_x": (_FLOAT, _REQUIRED),
        "v_a0": (_FLOAT, _REQUIRED),
        "v_b0": (_FLOAT, _REQUIRED),
        "beta_a": (_FLOAT, _REQUIRED),
        "beta_b": (_FLOAT, _REQUIRED),
        "chi_a": (_AUTO_FLOAT, "auto"),
    },
    "propagation": {
        "nx": (_INT, _REQUIRED),
        "x_span": (_FLOAT, _REQUIRED),
        "dt": (_FLOAT, _REQUIRED),
        "t_final": (_FLOAT, _REQUIRED),
        "pulse_shape": (_STR, "square"),
        "center_a": (_FLOAT, _REQUIRED),
        "center_b": (_FLOAT, _REQUIRED),
        "g_spm": (_FLOAT, 0.0),
        "kappa": (_FLOAT, 0.0),
        "snapshot_every": (_INT, 0),
        "tolerance": (_FLOAT, 0.05),
    },
    "output": {
        "path": (_STR, None),
    },
}

_CHOICES = {
    ("sweep", "polarization"): {"TM", "TE"},
    ("deit", "frequency_units"): {"ordinary", "angular"},
    ("propagation", "pulse_shape"): {"square", "gaussian"},
}


def _coerce(section: str, key: str, kind: str, value: Any) -> Any:
    where = f"[{section}] {key}"
    if kind == _FLOAT:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{where}: expected a number, got {value!r}")
        return float(value)
    if kind == _INT:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{where}: expected an integer, got {value!r}")
        return value
    if kind == _STR:
        if not isinstance(value, str):
            raise ConfigError(f"{where}: expected a string, got {value!r}")
        allowed = _CHOICES.get((section, key))
        if allowed and value not in allowed:
            raise ConfigError(f"{where}: must be one of {sorted(allowed)}, got {value!r}")
        return value
    if kind == _AUTO_FLOAT:
        if isinstance(value, str):
            if value != "auto":
                raise ConfigError(f"{where}: expected a number or 'auto', got {value!r}")
            return value
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{where}: expected a number or 'auto', got {value!r}")
        return float(value)
    raise AssertionError(kind)


def _parse_section(section: str, raw: dict, source: str) -> dict:
    schema = _SCHEMA[section]
    unknown = sorted(set(raw) - set(schema))
    if unknown:
        raise ConfigError(f"{source}: unknown key(s) in [{section}]: {', '.join(unknown)}")
    out: dict[str, Any] = {}
    for key, (kind, default) in schema.items():
        if key in raw:
            out[key] = _coerce(section, key, kind, raw[key])
        elif default is _REQUIRED:
            raise ConfigError(f"{source}: [{section}] is missing required key '{key}'")
        else:
            out[key] = default
    return out


def parse_config(data: dict, source: str = "<config>") -> RunConfig:
    unknown = sorted(set(data) - set(_SCHEMA))
    if unknown:
        raise ConfigError(f"{source}: unknown section(s): {', '.join(unknown)}")

    def section(name: str):
        if name not in data:
            return None
        raw = data[name]
        if not isinstance(raw, dict):
            raise ConfigError(f"{source}: [{name}] must be a table")
        return _parse_section(name, raw, source)

    media = section("media")
    sweep_raw = section("sweep")
    deit = section("deit")
    collision = section("collision")
    propagation = section("propagation")
    output = section("output")

    sweep = None
    if sweep_raw is not None:
        if sweep_raw["bracket_min"] is None:
            sweep_raw["bracket_min"] = sweep_raw["omega_min"]
        if sweep_raw["bracket_max"] is None:
            sweep_raw["bracket_max"] = sweep_raw["omega_max"]
        if not (0 < sweep_raw["omega_min"] < sweep_raw["omega_max"]):
            raise ConfigError(f"{source}: sweep band must satisfy 0 < omega_min < omega_max")
        if sweep_raw["points"] < 1:
            raise ConfigError(f"{source}: sweep points must be >= 1")
        sweep_raw["polarization"] = Polarization(sweep_raw["polarization"])
        sweep = SweepConfig(**sweep_raw)

    return RunConfig(
        media=MediaConfig(**media) if media is not None else None,
        sweep=sweep,
        deit=DeitConfig(**deit) if deit is not None else None,
        collision=CollisionConfig(**collision) if collision is not None else None,
        propagation=PropagationSection(**propagation) if propagation is not None else None,
        output=output["path"] if output is not None else None,
        source=source,
    )


def load_config(path: str | Path) -> RunConfig:
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: invalid TOML: {exc}") from exc
    return parse_config(data, source=str(path))


def default_config() -> RunConfig:
    """The bundled rubidium-over-metamaterial scenario."""
    resource = resources.files("polariton_lab").joinpath(DEFAULT_CONFIG_RESOURCE)
    data = tomllib.loads(resource.read_text(encoding="utf-8"))
    return parse_config(data, source=f"<bundled {DEFAULT_CONFIG_RESOURCE}>")
