"""Command-line front end: config ingestion, sweeps, CSV emission.

Usage::

    router <subcommand> [--config FILE] [--set key=value]... [--out FILE]
           [--engine closed|oracle] [--threads K]

Subcommands: spectrum, map, poles, flatband, switch, validate.
Exit codes: 0 success, 2 config error, 3 numerical-domain error,
4 validation failure.
"""

import argparse
import sys
from dataclasses import dataclass, field, fields

import numpy as np

from .analysis import (
    OBSERVABLES,
    find_switch,
    flat_band_width,
    map2d,
    spectrum,
)
from .config import RouterConfig
from .core import poles
from .errors import RouterError
from .validation import run_equivalence_suite

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_VALIDATION = 4


class ParseError(Exception):
    """Malformed config text; message carries the line number."""


class ValidationError(Exception):
    """Config value violates a constraint of the targeted operation."""


def _parse_bool(s):
    if s.lower() in ("1", "true", "yes", "on"):
        return True
    if s.lower() in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


# key -> (type converter, default).  Aliases omega0/xi/g set both waveguides.
_KEYS = {
    "omega_a": (float, 0.0),
    "omega_b": (float, 0.0),
    "xi_a": (float, 1.0),
    "xi_b": (float, 1.0),
    "g_a": (float, 0.5),
    "g_b": (float, 0.5),
    "omega_e": (float, 0.0),
    "omega_s": (float, 0.0),
    "nu": (float, 0.0),
    "rabi": (float, 0.0),
    "n_atoms": (int, 5),
    "include_nu": (_parse_bool, False),
    "e_lo": (float, -1.9),
    "e_hi": (float, 1.9),
    "n_points": (int, 401),
    "param": (str, "rabi"),
    "p_lo": (float, 0.0),
    "p_hi": (float, 1.5),
    "p_points": (int, 101),
    "observable": (str, "T_bfwd"),
    "tol": (float, 0.05),
    "contrast_target": (float, 0.9),
    "omega_off": (float, 0.0),
    "omega_on_lo": (float, 0.0),
    "omega_on_hi": (float, 2.0),
    "orientation": (str, "forward"),
    "n_samples": (int, 1000),
    "seed": (int, 20260824),
    "engine": (str, "closed"),
    "threads": (int, 1),
}

_ALIASES = {
    "omega0": ("omega_a", "omega_b"),
    "xi": ("xi_a", "xi_b"),
    "g": ("g_a", "g_b"),
}

_ROUTER_FIELDS = (
    "omega_a", "omega_b", "xi_a", "xi_b", "g_a", "g_b",
    "omega_e", "omega_s", "nu", "rabi", "n_atoms", "include_nu",
)


@dataclass
class RunConfig:
    values: dict = field(default_factory=lambda: {k: d for k, (_, d) in _KEYS.items()})

    def __getattr__(self, name):
        try:
            return self.__dict__["values"][name]
        except KeyError:
            raise AttributeError(name)

    def router(self) -> RouterConfig:
        try:
            return RouterConfig(**{k: self.values[k] for k in _ROUTER_FIELDS})
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc


def _apply(cfg: RunConfig, key, raw, where):
    targets = _ALIASES.get(key, (key,))
    for t in targets:
        if t not in _KEYS:
            raise ParseError(f"{where}: unknown key {key!r}")
        conv = _KEYS[t][0]
        try:
            cfg.values[t] = conv(raw)
        except ValueError as exc:
            raise ParseError(f"{where}: bad value for {key!r}: {exc}")


def parse_config(path=None, overrides=()) -> RunConfig:
    """Flat key=value config file plus command-line overrides."""
    cfg = RunConfig()
    if path is not None:
        try:
            with open(path) as fh:
                lines = fh.readlines()
        except OSError as exc:
            raise ParseError(f"cannot read config {path}: {exc}")
        for lineno, line in enumerate(lines, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith(("#", ";")):
                continue
            if "=" not in stripped:
                raise ParseError(f"{path}:{lineno}: expected key = value")
            key, _, raw = stripped.partition("=")
            _apply(cfg, key.strip(), raw.strip(), f"{path}:{lineno}")
    for ov in overrides:
        if "=" not in ov:
            raise ParseError(f"--set {ov!r}: expected key=value")
        key, _, raw = ov.partition("=")
        _apply(cfg, key.strip(), raw.strip(), f"--set {ov!r}")
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig):
    cfg.router()  # raises ValidationError on bad physical parameters
    v = cfg.values
    if v["n_points"] < 2:
        raise ValidationError("n_points >= 2")
    if v["e_lo"] >= v["e_hi"]:
        raise ValidationError("e_lo < e_hi")
    if v["param"] not in ("rabi", "n_atoms"):
        raise ValidationError("param must be 'rabi' or 'n_atoms'")
    if v["observable"] not in OBSERVABLES:
        raise ValidationError(f"observable must be one of {OBSERVABLES}")
    if not 0.0 < v["tol"] < 0.25:
        raise ValidationError("tol in (0, 0.25)")
    if v["orientation"] not in ("forward", "reverse"):
        raise ValidationError("orientation must be 'forward' or 'reverse'")
    if v["engine"] not in ("closed", "oracle"):
        raise ValidationError("engine must be 'closed' or 'oracle'")
    if v["p_points"] < 1:
        raise ValidationError("p_points >= 1")
    if v["n_samples"] < 1:
        raise ValidationError("n_samples >= 1")
    if v["threads"] < 1:
        raise ValidationError("threads >= 1")


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _emit(cfg: RunConfig, header, rows, out_path=None):
    lines = [f"# {k} = {_fmt(cfg.values[k])}" for k in sorted(cfg.values)]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(x) for x in row))
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_spectrum(cfg: RunConfig, out):
    rows = spectrum(
        cfg.router(), cfg.e_lo, cfg.e_hi, cfg.n_points,
        engine=cfg.engine, threads=cfg.threads,
    )
    _emit(
        cfg,
        ["E", "R_a", "T_a", "T_bback", "T_bfwd", "schannel"],
        [
            (r.E, r.probs.R_a, r.probs.T_a, r.probs.T_b_back, r.probs.T_b_fwd,
             r.channel_character)
            for r in rows
        ],
        out,
    )
    return EXIT_OK


def _cmd_map(cfg: RunConfig, out):
    e_grid = np.linspace(cfg.e_lo, cfg.e_hi, cfg.n_points)
    if cfg.param == "n_atoms":
        p_grid = np.arange(int(round(cfg.p_lo)), int(round(cfg.p_hi)) + 1)
        if len(p_grid) == 0 or p_grid[0] < 1:
            raise ValidationError("n_atoms grid must start at >= 1")
    else:
        p_grid = np.linspace(cfg.p_lo, cfg.p_hi, cfg.p_points)
    grid = map2d(
        cfg.router(), e_grid, cfg.param, p_grid,
        observable=cfg.observable, engine=cfg.engine, threads=cfg.threads,
    )
    rows = [
        (float(e), p if cfg.param == "n_atoms" else float(p), float(grid.values[i, j]))
        for i, e in enumerate(grid.e_axis)
        for j, p in enumerate(grid.param_axis)
    ]
    _emit(cfg, ["E", "param", "value"], rows, out)
    return EXIT_OK


def _cmd_poles(cfg: RunConfig, out):
    e_plus, e_minus = poles(cfg.router())
    _emit(cfg, ["pole", "E"], [("E_plus", e_plus), ("E_minus", e_minus)], out)
    return EXIT_OK


def _cmd_flatband(cfg: RunConfig, out):
    reports = flat_band_width(
        cfg.router(), tol=cfg.tol, window=(cfg.e_lo, cfg.e_hi), engine=cfg.engine
    )
    _emit(
        cfg,
        ["center", "lo", "hi", "width", "tol", "max_dev"],
        [(r.center, r.lo, r.hi, r.width, r.tol, r.max_dev) for r in reports],
        out,
    )
    return EXIT_OK


def _cmd_switch(cfg: RunConfig, out):
    rep = find_switch(
        cfg.router(),
        e_window=(cfg.e_lo, cfg.e_hi),
        omega_on_window=(cfg.omega_on_lo, cfg.omega_on_hi),
        contrast_target=cfg.contrast_target,
        omega_off=cfg.omega_off,
        orientation=cfg.orientation,
        engine=cfg.engine,
    )
    _emit(
        cfg,
        ["E_star", "omega_off", "omega_on", "T_a_off", "T_bfwd_off",
         "T_a_on", "T_bfwd_on", "contrast", "target_reached"],
        [(rep.E_star, rep.omega_off, rep.omega_on, rep.T_a_off, rep.T_bfwd_off,
          rep.T_a_on, rep.T_bfwd_on, rep.contrast,
          "true" if rep.target_reached else "false")],
        out,
    )
    return EXIT_OK


def _cmd_validate(cfg: RunConfig, out):
    res = run_equivalence_suite(n_samples=cfg.n_samples, seed=cfg.seed)
    report = [
        f"# samples = {res.n_samples}",
        f"max_prob_deviation = {res.max_prob_dev:.17g}",
        f"max_flow_deviation_closed = {res.max_flow_dev_closed:.17g}",
        f"max_flow_deviation_oracle = {res.max_flow_dev_oracle:.17g}",
        f"worst_energy = {res.worst_energy:.17g}",
    ]
    text = "\n".join(report) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if res.passed() else EXIT_VALIDATION


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "map": _cmd_map,
    "poles": _cmd_poles,
    "flatband": _cmd_flatband,
    "switch": _cmd_switch,
    "validate": _cmd_validate,
}


def build_parser():
    p = argparse.ArgumentParser(prog="router", description=__doc__)
    p.add_argument("subcommand", choices=sorted(_COMMANDS))
    p.add_argument("--config", default=None, help="flat key=value config file")
    p.add_argument("--set", dest="overrides", action="append", default=[],
                   metavar="KEY=VALUE", help="override one config key")
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.add_argument("--engine", choices=("closed", "oracle"), default=None)
    p.add_argument("--threads", type=int, default=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        overrides = list(args.overrides)
        if args.engine:
            overrides.append(f"engine={args.engine}")
        if args.threads:
            overrides.append(f"threads={args.threads}")
        cfg = parse_config(args.config, overrides)
    except (ParseError, ValidationError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return _COMMANDS[args.subcommand](cfg, args.out)
    except (ParseError, ValidationError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except RouterError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
