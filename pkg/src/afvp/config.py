"""Run configuration: flat key=value files with per-problem presets.

Unknown keys are errors (fail-fast on typos).  Omitted domain and perturbation
parameters fall back to the standard benchmark presets for the chosen problem.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .advect1d import validate_distribution_params
from .errors import ConfigError
from .grids import PRESET_DOMAINS, PRESET_PARAMS, Domain, InitialCondition

SCHEMES = ("af2", "af3", "dd")
SPLITTINGS = ("lie", "strang", "yoshida")
QUADRATURES = ("analytic_quadrature", "simpson")

_FLOAT_KEYS = {
    "amplitude", "wavenumber", "beam_velocity",
    "x_min", "x_max", "v_min", "v_max",
    "cfl", "t_max", "alpha", "beta",
}
_INT_KEYS = {"n_x", "n_v", "diag_every"}
_STR_KEYS = {"problem", "scheme", "splitting", "init_quadrature", "output_dir"}
_LIST_KEYS = {"snapshot_times"}
KNOWN_KEYS = _FLOAT_KEYS | _INT_KEYS | _STR_KEYS | _LIST_KEYS


@dataclass
class SimConfig:
    problem: str
    amplitude: float
    wavenumber: float
    beam_velocity: float
    x_min: float
    x_max: float
    v_min: float
    v_max: float
    n_x: int = 128
    n_v: int = 128
    scheme: str = "af3"
    splitting: str = "strang"
    cfl: float = 1.0 / np.pi
    t_max: float = 15.0
    alpha: float = 1.0
    beta: float = 1.0
    init_quadrature: str = "analytic_quadrature"
    diag_every: int = 1
    snapshot_times: list = field(default_factory=list)
    output_dir: str = "out"

    def __post_init__(self):
        if self.problem not in PRESET_PARAMS:
            raise ConfigError(f"unknown problem: {self.problem!r}")
        if self.scheme not in SCHEMES:
            raise ConfigError(f"unknown scheme: {self.scheme!r}")
        if self.splitting not in SPLITTINGS:
            raise ConfigError(f"unknown splitting: {self.splitting!r}")
        if self.init_quadrature not in QUADRATURES:
            raise ConfigError(f"unknown init_quadrature: {self.init_quadrature!r}")
        bound = 0.5 if self.scheme == "dd" else 1.0
        if not 0.0 < self.cfl <= bound:
            raise ConfigError(
                f"cfl must lie in (0, {bound}] for scheme {self.scheme}, got {self.cfl}"
            )
        if self.scheme == "dd":
            validate_distribution_params(self.alpha, self.beta)
        if self.t_max < 0.0:
            raise ConfigError("t_max must be >= 0")
        if self.diag_every < 1:
            raise ConfigError("diag_every must be >= 1")
        # domain construction validates ranges and minimum resolution
        self.domain()
        self.initial_condition().check_commensurate(self.domain())

    def domain(self) -> Domain:
        return Domain(self.x_min, self.x_max, self.v_min, self.v_max, self.n_x, self.n_v)

    def initial_condition(self) -> InitialCondition:
        return InitialCondition(
            kind=self.problem,
            amplitude=self.amplitude,
            wavenumber=self.wavenumber,
            beam_velocity=self.beam_velocity,
        )

    def with_resolution(self, n: int) -> "SimConfig":
        return from_mapping({**self.as_mapping(), "n_x": n, "n_v": n})

    def as_mapping(self) -> dict:
        return {
            "problem": self.problem,
            "amplitude": self.amplitude,
            "wavenumber": self.wavenumber,
            "beam_velocity": self.beam_velocity,
            "x_min": self.x_min,
            "x_max": self.x_max,
            "v_min": self.v_min,
            "v_max": self.v_max,
            "n_x": self.n_x,
            "n_v": self.n_v,
            "scheme": self.scheme,
            "splitting": self.splitting,
            "cfl": self.cfl,
            "t_max": self.t_max,
            "alpha": self.alpha,
            "beta": self.beta,
            "init_quadrature": self.init_quadrature,
            "diag_every": self.diag_every,
            "snapshot_times": list(self.snapshot_times),
            "output_dir": self.output_dir,
        }


def from_mapping(raw: dict) -> SimConfig:
    """Build a config from a key/value mapping, applying problem presets."""
    unknown = set(raw) - KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "problem" not in raw:
        raise ConfigError("config requires a 'problem' key")
    problem = str(raw["problem"])
    if problem not in PRESET_PARAMS:
        raise ConfigError(f"unknown problem: {problem!r}")
    merged = {"problem": problem}
    merged.update(PRESET_PARAMS[problem])
    merged.update(PRESET_DOMAINS[problem])
    for key, value in raw.items():
        if key == "problem":
            continue
        if key in _FLOAT_KEYS:
            merged[key] = float(value)
        elif key in _INT_KEYS:
            merged[key] = int(value)
        elif key in _LIST_KEYS:
            if isinstance(value, str):
                parts = [p for p in value.replace(",", " ").split() if p]
                merged[key] = [float(p) for p in parts]
            else:
                merged[key] = [float(p) for p in value]
        else:
            merged[key] = str(value)
    try:
        return SimConfig(**merged)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None


def parse_config(path) -> SimConfig:
    """Parse a flat key=value config file."""
    raw = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, start=1):
                stripped = line.split("#", 1)[0].strip()
                if not stripped:
                    continue
                if "=" not in stripped:
                    raise ConfigError(f"{path}:{lineno}: expected key=value, got {line.strip()!r}")
                key, _, value = stripped.partition("=")
                key = key.strip()
                if key in raw:
                    raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
                raw[key] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    try:
        return from_mapping(raw)
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None
