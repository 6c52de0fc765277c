"""Command-line harness.

    polariton-lab <sweep|find-omega0|kerr|propagate|temperature|reproduce>
                  --config <path> [--output <path>] [--points N]
                  [--polarization TM|TE]

Every command is deterministic given a config file.  CSV output is
UTF-8 with LF line endings and plain decimal numbers at 12 significant
digits.  Exit codes: 0 success, 1 configuration error, 2 I/O error,
3 no bound mode, 4 physical singularity.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from .config import RunConfig, default_config, load_config
from .dispersion import Polarization
from .errors import (
    BracketError,
    ConfigError,
    DomainError,
    NoBoundModeError,
    SingularityError,
)
from .pipeline import (
    locate_low_loss,
    propagation_comparison,
    run_kerr_sweep,
    run_sweep,
    temperature_report,
)

SWEEP_HEADER = (
    "omega_norm,k_parallel,kappa,zeta1_over_lambda,Lz_over_lambda,"
    "frac_dielectric,frac_nimm,status"
)
KERR_HEADER = "omega_norm,chi_a,phi_b"

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_NO_BOUND_MODE = 3
EXIT_SINGULARITY = 4


def format_number(x: float) -> str:
    """Plain decimal notation with 12 significant digits."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    x = x + 0.0  # normalize -0.0
    if x == 0.0:
        return "0.000000000000"
    mantissa, exponent = f"{x:.11e}".split("e")
    sign = "-" if mantissa.startswith("-") else ""
    digits = mantissa.lstrip("-").replace(".", "")
    e = int(exponent)
    if e >= 11:
        body = digits + "0" * (e - 11) + "."
    elif e >= 0:
        body = digits[: e + 1] + "." + digits[e + 1 :]
    else:
        body = "0." + "0" * (-e - 1) + digits
    return sign + body


def _write_lines(path: Path, lines: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def _output_path(args, cfg: RunConfig, default_name: str) -> Path:
    if args.output:
        return Path(args.output)
    if cfg.output:
        return Path(cfg.output)
    return Path(default_name)


def _load(args) -> RunConfig:
    if args.config is None:
        return default_config()
    return load_config(args.config)


def _sweep_lines(cfg: RunConfig, points, polarization) -> list[str]:
    rows = run_sweep(cfg, points=points, polarization=polarization)
    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    format_number(r.omega_norm),
                    format_number(r.k_parallel),
                    format_number(r.kappa),
                    format_number(r.zeta1_over_lambda),
                    format_number(r.Lz_over_lambda),
                    format_number(r.frac_dielectric),
                    format_number(r.frac_nimm),
                    r.status,
                ]
            )
        )
    return lines


def _kerr_lines(cfg: RunConfig, points) -> list[str]:
    rows = run_kerr_sweep(cfg, points=points)
    lines = [KERR_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    format_number(r.omega_norm),
                    format_number(r.chi_a),
                    format_number(r.phi_exact),
                ]
            )
        )
    return lines


def cmd_sweep(args) -> int:
    cfg = _load(args)
    pol = Polarization(args.polarization) if args.polarization else None
    lines = _sweep_lines(cfg, args.points, pol)
    path = _output_path(args, cfg, "sweep.csv")
    _write_lines(path, lines)
    print(f"wrote {len(lines) - 1} rows to {path}")
    return EXIT_OK


def cmd_find_omega0(args) -> int:
    cfg = _load(args)
    pol = Polarization(args.polarization) if args.polarization else None
    report = locate_low_loss(cfg, polarization=pol)
    print(
        "omega0_norm={} kappa={} zeta1={} Lz_over_lambda={}".format(
            format_number(report.omega0_norm),
            format_number(report.kappa),
            format_number(report.zeta1),
            format_number(report.Lz_over_lambda),
        )
    )
    return EXIT_OK


def cmd_kerr(args) -> int:
    cfg = _load(args)
    lines = _kerr_lines(cfg, args.points)
    path = _output_path(args, cfg, "kerr.csv")
    _write_lines(path, lines)
    print(f"wrote {len(lines) - 1} rows to {path}")
    return EXIT_OK


def _write_snapshots(path_stem: Path, result) -> None:
    header = "t,x,re,im,intensity,phase"
    for label, pick in (("a", lambda s: s.envelope_a), ("b", lambda s: s.envelope_b)):
        lines = [header]
        for snap in result.snapshots:
            env = pick(snap)
            for x, e in zip(snap.x_grid, env):
                lines.append(
                    ",".join(
                        [
                            format_number(snap.t),
                            format_number(float(x)),
                            format_number(e.real),
                            format_number(e.imag),
                            format_number(abs(e) ** 2),
                            format_number(float(np.angle(e))),
                        ]
                    )
                )
        _write_lines(Path(f"{path_stem}_snapshots_{label}.csv"), lines)


def cmd_propagate(args) -> int:
    cfg = _load(args)
    cfg.require("collision", "propagation")
    comparison = propagation_comparison(cfg)
    print(
        "phi_numeric={} phi_exact={} phi_walkthrough={} deviation={}".format(
            format_number(comparison.numeric),
            format_number(comparison.exact),
            format_number(comparison.walkthrough),
            format_number(comparison.deviation),
        )
    )
    if comparison.result.snapshots:
        stem = _output_path(args, cfg, "propagate")
        _write_snapshots(stem.with_suffix(""), comparison.result)
    tolerance = cfg.propagation.tolerance
    return EXIT_OK if comparison.deviation <= tolerance else EXIT_CONFIG


def cmd_temperature(args) -> int:
    cfg = _load(args)
    for reading in temperature_report(cfg):
        print(
            "convention={} delta_rad={} v_max={} T_max={}".format(
                reading.convention,
                format_number(reading.delta_rad),
                format_number(reading.v_max),
                format_number(reading.T_max),
            )
        )
    return EXIT_OK


def cmd_reproduce(args) -> int:
    cfg = _load(args)
    if args.target in ("fig2", "fig3"):
        pol = Polarization(args.polarization) if args.polarization else None
        lines = _sweep_lines(cfg, args.points, pol)
    else:
        lines = _kerr_lines(cfg, args.points)
    path = _output_path(args, cfg, f"reproduce_{args.target}.csv")
    _write_lines(path, lines)
    print(f"wrote {len(lines) - 1} rows to {path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polariton-lab",
        description="Surface-polariton dispersion and slow-light cross-phase modulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="TOML config path (default: bundled scenario)")
        p.add_argument("--output", help="output file path")
        p.add_argument("--points", type=int, help="override the sweep point count")
        p.add_argument("--polarization", choices=["TM", "TE"], help="override the polarization")
        p.set_defaults(func=func)
        return p

    add("sweep", cmd_sweep, "characterize loss and confinement over the sweep band")
    add("find-omega0", cmd_find_omega0, "locate the low-loss frequency")
    add("kerr", cmd_kerr, "Kerr coefficient and collision phase over the sweep band")
    add("propagate", cmd_propagate, "two-pulse collision vs the analytic phase")
    add("temperature", cmd_temperature, "gas temperature bound under both unit readings")
    rep = add("reproduce", cmd_reproduce, "regenerate the bundled figure data")
    rep.add_argument("target", choices=["fig2", "fig3", "fig6"])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DomainError, BracketError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except NoBoundModeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_BOUND_MODE
    except SingularityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULARITY


if __name__ == "__main__":
    sys.exit(main())
