"""Canonical figure reproduction.

The JSON files under spinflip/configs define one sweep per curve for the four
benchmark figures (fig2..fig5); reproduce() runs them through the ordinary
config/sweep machinery and writes one CSV per curve.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .errors import ConfigError
from .quadrature import QuadratureSettings
from .sweep import RunConfig, emit_csv, parse_config, run_sweep

__all__ = ["FIGURES", "figure_curves", "reproduce"]

FIGURES = ("fig2", "fig3", "fig4", "fig5")


def figure_curves(name: str) -> list[dict]:
    """Curve configurations of one canonical figure."""
    if name not in FIGURES:
        raise ConfigError(f"unknown figure {name!r}; choose from {FIGURES}")
    text = resources.files("spinflip.configs").joinpath(f"{name}.json").read_text("utf-8")
    return json.loads(text)["curves"]


def reproduce(name: str, out_dir, rel_tol: float | None = None) -> list[Path]:
    """Run every curve of figure `name` and emit <figure>_<curve>.csv files
    into `out_dir`.  Returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for curve in figure_curves(name):
        curve_name = curve["name"]
        config, spec = parse_config({k: v for k, v in curve.items() if k != "name"})
        if spec is None:
            raise ConfigError(f"curve {curve_name!r} carries no sweep")
        if rel_tol is not None:
            config = RunConfig(stack=config.stack, z=config.z,
                               transition=config.transition,
                               settings=QuadratureSettings(
                                   rel_tol=rel_tol,
                                   abs_floor=config.settings.abs_floor,
                                   max_refinements=config.settings.max_refinements,
                                   tail_threshold=config.settings.tail_threshold),
                               echo=config.echo)
        table = run_sweep(spec, config)
        path = out / f"{name}_{curve_name}.csv"
        emit_csv(table, path)
        written.append(path)
    return written
