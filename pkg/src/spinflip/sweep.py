"""Sweep engine, screening factor, JSON configuration and CSV output.

Configuration file schema (all quantities SI; see README for a worked
example):

    {
      "materials": [                       # optional extra/override models
        {"label": "...", "variant": "vacuum" | "drude_metal" |
                         "isotropic_sc" | "uniaxial_sc",
         "parameters": {...}}
      ],
      "stack": {
        "layers": [{"material": "vacuum"},
                   {"material": "niobium", "thickness": 1e-6},
                   {"material": "copper"}],
        "temperature": 4.2
      },
      "z": 10e-6,
      "transition": {"frequency": 560e3, "label": "..."},     # optional
      "quadrature": {"rel_tol": 1e-8, ...},                   # optional
      "sweep": {"axis": "distance_z" | "thickness_d" |
                        "temperature_T" | "reduced_T_over_Tc",
                "min": ..., "max": ..., "points": ...,
                "spacing": "linear" | "log"}                  # sweep runs only
    }

CSV output: "#"-prefixed metadata lines (version, input echo), one header row
with unit-annotated column names, then one row per grid point with decimal
floats carrying 17 significant digits (value-exact round trip).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import __version__
from .constants import RB87_CLOCK_TRANSITION, TransitionSpec
from .errors import ConfigError, DomainError, SpinflipError
from .materials import (DrudeMetal, IsotropicSuperconductor, MaterialModel,
                        TwoFluidParams, UniaxialSuperconductor, Vacuum,
                        material_presets)
from .quadrature import DEFAULT_SETTINGS, QuadratureSettings
from .rates import spin_flip_rate
from .stratified import Layer, LayerStack

__all__ = [
    "SweepSpec",
    "SweepTable",
    "RunConfig",
    "screening_factor",
    "run_sweep",
    "emit_csv",
    "load_config",
    "parse_config",
]

AXES = ("distance_z", "thickness_d", "temperature_T", "reduced_T_over_Tc")


@dataclass(frozen=True)
class SweepSpec:
    axis: str
    minimum: float
    maximum: float
    points: int
    spacing: str = "linear"

    def __post_init__(self):
        if self.axis not in AXES:
            raise ConfigError(f"unknown sweep axis {self.axis!r}; choose from {AXES}")
        if not self.minimum < self.maximum:
            raise ConfigError("sweep requires min < max")
        if self.points < 2:
            raise ConfigError("sweep requires at least 2 points")
        if self.spacing not in ("linear", "log"):
            raise ConfigError("spacing must be 'linear' or 'log'")
        if self.spacing == "log" and self.minimum <= 0:
            raise ConfigError("log spacing requires min > 0")

    def grid(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.minimum, self.maximum, self.points)
        return np.linspace(self.minimum, self.maximum, self.points)


@dataclass(frozen=True)
class RunConfig:
    stack: LayerStack
    z: float
    transition: TransitionSpec = RB87_CLOCK_TRANSITION
    settings: QuadratureSettings = DEFAULT_SETTINGS
    echo: dict = field(default_factory=dict)   # raw input for CSV metadata

    def __post_init__(self):
        if self.z <= 0:
            raise ConfigError("z must be positive")


@dataclass
class SweepTable:
    axis: str
    columns: dict[str, list]      # column name (unit-annotated) -> values
    metadata: dict[str, Any]

    @property
    def rows(self) -> int:
        return len(next(iter(self.columns.values())))


def _film_critical_temperature(stack: LayerStack) -> float:
    for layer in stack.layers[1:]:
        m = layer.material
        if isinstance(m, IsotropicSuperconductor):
            return m.params.Tc
        if isinstance(m, UniaxialSuperconductor):
            return m.transverse.Tc
    raise ConfigError("reduced-temperature sweep requires a superconducting layer")


def _stack_regime(stack: LayerStack, T: float) -> str:
    """Row status annotation: flags superconducting layers driven normal."""
    for layer in stack.layers[1:]:
        m = layer.material
        tc = None
        if isinstance(m, IsotropicSuperconductor):
            tc = m.params.Tc
        elif isinstance(m, UniaxialSuperconductor):
            tc = m.transverse.Tc
        if tc is not None and T >= tc:
            return "normal-state film"
    return "ok"


def screening_factor(stack: LayerStack, z: float,
                     transition: TransitionSpec = RB87_CLOCK_TRANSITION,
                     T: float | None = None,
                     settings: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """Relative lifetime gain of the film over the bare substrate,
    (tau(d) - tau(0)) / tau(0), with both lifetimes computed on the same
    rate route so the ratio is route-normalization free."""
    tau_d = spin_flip_rate(stack, z, transition, T, settings).tau
    tau_0 = spin_flip_rate(stack.with_film_thickness(0.0), z, transition, T, settings).tau
    return (tau_d - tau_0) / tau_0


def _evaluate_row(spec_axis: str, value: float, config: RunConfig,
                  tau0: float | None):
    """One grid point -> (row dict, status).  Pure in its inputs."""
    stack, z, T = config.stack, config.z, config.stack.temperature
    if spec_axis == "distance_z":
        z = float(value)
    elif spec_axis == "thickness_d":
        stack = stack.with_film_thickness(float(value))
    elif spec_axis == "temperature_T":
        T = float(value)
    else:  # reduced_T_over_Tc
        T = float(value) * _film_critical_temperature(stack)
    result = spin_flip_rate(stack, z, config.transition, T, config.settings)
    row = {
        "gamma_total_per_s": result.gamma_total,
        "tau_s": result.tau,
        "n_th": result.n_th,
    }
    if spec_axis == "thickness_d" and tau0 is not None:
        row["screening_factor"] = (result.tau - tau0) / tau0
    return row, _stack_regime(stack, T)


_AXIS_COLUMN = {
    "distance_z": "z_m",
    "thickness_d": "d_m",
    "temperature_T": "T_K",
    "reduced_T_over_Tc": "T_over_Tc",
}


def run_sweep(spec: SweepSpec, config: RunConfig) -> SweepTable:
    """Evaluate the rate over the sweep grid.

    Rows are independent and deterministic; per-row failures are recorded in
    the status column and only an all-row failure aborts the run.  Thickness
    sweeps carry the screening factor against the zero-thickness stack.
    """
    grid = spec.grid()
    tau0 = None
    if spec.axis == "thickness_d":
        base = spin_flip_rate(config.stack.with_film_thickness(0.0), config.z,
                              config.transition, None, config.settings)
        tau0 = base.tau

    names = ["gamma_total_per_s", "tau_s", "n_th"]
    if spec.axis == "thickness_d":
        names.append("screening_factor")
    columns: dict[str, list] = {_AXIS_COLUMN[spec.axis]: []}
    for name in names:
        columns[name] = []
    columns["status"] = []

    failures = 0
    for value in grid:
        columns[_AXIS_COLUMN[spec.axis]].append(float(value))
        try:
            row, status = _evaluate_row(spec.axis, value, config, tau0)
        except SpinflipError as exc:
            failures += 1
            for name in names:
                columns[name].append(math.nan)
            columns["status"].append(f"error: {exc}")
            continue
        for name in names:
            columns[name].append(row[name])
        columns["status"].append(status)

    if failures == len(grid):
        raise SpinflipError("every sweep row failed")

    metadata = dict(config.echo)
    metadata["sweep"] = {"axis": spec.axis, "min": spec.minimum,
                         "max": spec.maximum, "points": spec.points,
                         "spacing": spec.spacing}
    return SweepTable(axis=spec.axis, columns=columns, metadata=metadata)


def _format_value(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    s = str(v)
    if any(ch in s for ch in ',"\n'):
        s = '"' + s.replace('"', '""') + '"'
    return s


def emit_csv(table: SweepTable, path) -> None:
    """Write the table as UTF-8 CSV with LF endings, '#' metadata comments and
    17-significant-digit floats."""
    lines = [f"# spinflip {__version__}"]
    lines.append("# input: " + json.dumps(table.metadata, sort_keys=True,
                                          separators=(",", ":")))
    names = list(table.columns)
    lines.append(",".join(names))
    for i in range(table.rows):
        lines.append(",".join(_format_value(table.columns[n][i]) for n in names))
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise SpinflipError(f"cannot write CSV to {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# JSON configuration
# ---------------------------------------------------------------------------

def _require(mapping: dict, key: str, context: str):
    if key not in mapping:
        raise ConfigError(f"missing {key!r} in {context}")
    return mapping[key]


def _positive(mapping: dict, key: str, context: str) -> float:
    value = _require(mapping, key, context)
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{context}.{key} must be a number") from None
    if value <= 0:
        raise ConfigError(f"{context}.{key} must be positive")
    return value


def _two_fluid(params: dict, context: str) -> TwoFluidParams:
    return TwoFluidParams(
        lambda0=_positive(params, "lambda0", context),
        Tc=_positive(params, "Tc", context),
        sigma_normal=_positive(params, "sigma_normal", context),
        alpha=_positive(params, "alpha", context),
    )


def _parse_material(entry: dict) -> MaterialModel:
    label = str(_require(entry, "label", "material"))
    variant = _require(entry, "variant", f"material {label!r}")
    params = entry.get("parameters", {})
    ctx = f"material {label!r}"
    if variant == "vacuum":
        return Vacuum(label=label)
    if variant == "drude_metal":
        return DrudeMetal(sigma=_positive(params, "sigma", ctx), label=label)
    if variant == "isotropic_sc":
        return IsotropicSuperconductor(
            params=_two_fluid(params, ctx), label=label,
            first_critical_field=params.get("first_critical_field"),
            gap_frequency=params.get("gap_frequency"))
    if variant == "uniaxial_sc":
        return UniaxialSuperconductor(
            transverse=_two_fluid(_require(params, "transverse", ctx), ctx),
            longitudinal=_two_fluid(_require(params, "longitudinal", ctx), ctx),
            label=label,
            first_critical_field=params.get("first_critical_field"),
            gap_frequency=params.get("gap_frequency"))
    raise ConfigError(f"unknown material variant {variant!r} for {label!r}")


def parse_config(raw: dict) -> tuple[RunConfig, SweepSpec | None]:
    """Validate a configuration mapping; returns the run configuration and
    the sweep specification when one is present.  Raises ConfigError before
    any computation on invalid input."""
    if not isinstance(raw, dict):
        raise ConfigError("configuration must be a JSON object")

    registry = {m.label: m for m in material_presets()}
    for entry in raw.get("materials", []):
        m = _parse_material(entry)
        registry[m.label] = m

    stack_raw = _require(raw, "stack", "configuration")
    layers_raw = _require(stack_raw, "layers", "stack")
    if not isinstance(layers_raw, list) or len(layers_raw) < 2:
        raise ConfigError("stack.layers must list at least 2 layers")
    layers = []
    for i, lr in enumerate(layers_raw):
        name = _require(lr, "material", f"stack.layers[{i}]")
        if name not in registry:
            raise ConfigError(f"stack references unknown material {name!r}")
        interior = 0 < i < len(layers_raw) - 1
        if interior:
            thickness = float(_require(lr, "thickness", f"stack.layers[{i}]"))
            if thickness < 0:
                raise ConfigError(f"stack.layers[{i}].thickness must be >= 0")
        else:
            thickness = math.inf
        layers.append(Layer(registry[name], thickness))
    temperature = float(_require(stack_raw, "temperature", "stack"))
    try:
        stack = LayerStack(tuple(layers), temperature)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc

    z = _positive(raw, "z", "configuration")

    transition = RB87_CLOCK_TRANSITION
    if "transition" in raw:
        tr = raw["transition"]
        trkw = {"frequency": _positive(tr, "frequency", "transition"),
                "label": str(tr.get("label", ""))}
        if "matrix_elements" in tr:
            trkw["coupling_mode"] = "explicit"
            trkw["matrix_elements"] = tuple(complex(*xy) if isinstance(xy, list) else complex(xy)
                                            for xy in tr["matrix_elements"])
        try:
            transition = TransitionSpec(**trkw)
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc

    settings = DEFAULT_SETTINGS
    if "quadrature" in raw:
        q = raw["quadrature"]
        try:
            settings = QuadratureSettings(
                rel_tol=float(q.get("rel_tol", DEFAULT_SETTINGS.rel_tol)),
                abs_floor=float(q.get("abs_floor", DEFAULT_SETTINGS.abs_floor)),
                max_refinements=int(q.get("max_refinements",
                                          DEFAULT_SETTINGS.max_refinements)),
                tail_threshold=float(q.get("tail_threshold",
                                           DEFAULT_SETTINGS.tail_threshold)))
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc

    sweep = None
    if "sweep" in raw:
        s = raw["sweep"]
        sweep = SweepSpec(
            axis=str(_require(s, "axis", "sweep")),
            minimum=float(_require(s, "min", "sweep")),
            maximum=float(_require(s, "max", "sweep")),
            points=int(_require(s, "points", "sweep")),
            spacing=str(s.get("spacing", "linear")))

    config = RunConfig(stack=stack, z=z, transition=transition,
                       settings=settings, echo=raw)
    return config, sweep


def load_config(path) -> tuple[RunConfig, SweepSpec | None]:
    """Read and validate a JSON configuration file."""
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in {path}: {exc}") from exc
    return parse_config(raw)
