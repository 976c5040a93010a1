"""Physical constants, unit conventions and the atomic transition description.

All quantities in this package are strict SI (m, s, K, Hz, S/m, T).  The
constants are CODATA 2018 values hard-coded to full published precision; the
electron g-factor is fixed at exactly 2 so that rate prefactors are
reproducible to the digit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "Constants",
    "CONSTANTS",
    "TransitionSpec",
    "RB87_CLOCK_TRANSITION",
    "rate_prefactor",
    "thermal_photon_number",
]


@dataclass(frozen=True)
class Constants:
    """Fundamental constants (SI units)."""

    mu0: float = 1.25663706212e-6    # vacuum permeability (H/m)
    eps0: float = 8.8541878128e-12   # vacuum permittivity (F/m)
    hbar: float = 1.054571817e-34    # reduced Planck constant (J s)
    h: float = 6.62607015e-34        # Planck constant (J s, exact)
    kB: float = 1.380649e-23         # Boltzmann constant (J/K, exact)
    c: float = 299792458.0           # speed of light (m/s, exact)
    muB: float = 9.2740100783e-24    # Bohr magneton (J/T)
    gS: float = 2.0                  # electron g-factor, exactly 2 here

    def __post_init__(self):
        for name in ("mu0", "eps0", "hbar", "h", "kB", "c", "muB", "gS"):
            if getattr(self, name) <= 0:
                raise DomainError(f"constant {name} must be positive")


CONSTANTS = Constants()


@dataclass(frozen=True)
class TransitionSpec:
    """Magnetic dipole transition driving the spin flip.

    coupling_mode selects how the spin matrix elements enter the rate:

    * ``"preset"`` -- the built-in weights for the Rb-87 ground-state
      transition |2,2> -> |2,1>; the rate formulas already absorb the
      matrix elements, so none may be supplied.
    * ``"explicit"`` -- ``matrix_elements`` holds the complex 3-vector
      <f|S|i> in hbar units and the general contraction is used.
    """

    frequency: float                 # transition frequency (Hz)
    label: str = ""
    coupling_mode: str = "preset"
    matrix_elements: tuple[complex, complex, complex] | None = None

    def __post_init__(self):
        if self.frequency <= 0:
            raise DomainError("transition frequency must be positive")
        if self.coupling_mode not in ("preset", "explicit"):
            raise DomainError(f"unknown coupling_mode {self.coupling_mode!r}")
        if self.coupling_mode == "preset" and self.matrix_elements is not None:
            raise DomainError("preset coupling already absorbs the matrix elements")
        if self.coupling_mode == "explicit" and self.matrix_elements is None:
            raise DomainError("explicit coupling requires matrix_elements")
        if self.matrix_elements is not None and len(self.matrix_elements) != 3:
            raise DomainError("matrix_elements must be a 3-vector")

    @property
    def omega(self) -> float:
        """Angular frequency (rad/s)."""
        return 2.0 * math.pi * self.frequency


# Default transition: Rb-87 ground state |2,2> -> |2,1> at 560 kHz.
RB87_CLOCK_TRANSITION = TransitionSpec(frequency=560e3, label="Rb-87 |2,2> -> |2,1>")


def rate_prefactor(constants: Constants = CONSTANTS) -> float:
    """Common prefactor of the layered-medium spin-flip rate formulas,
    mu0 * (muB * gS)**2 / (8 * hbar), in SI units."""
    c = constants
    return c.mu0 * (c.muB * c.gS) ** 2 / (8.0 * c.hbar)


def thermal_photon_number(frequency: float, T: float,
                          constants: Constants = CONSTANTS) -> float:
    """Planck occupation of the field mode at `frequency` and temperature `T`.

    Returns exactly 0 at T = 0.  Uses expm1 so the small-argument regime
    (hbar*omega << kB*T, the usual case at sub-MHz transitions) is evaluated
    without cancellation.
    """
    if frequency <= 0:
        raise DomainError("frequency must be positive")
    if T < 0:
        raise DomainError("temperature must be non-negative")
    if T == 0:
        return 0.0
    x = constants.h * frequency / (constants.kB * T)
    return 1.0 / math.expm1(x)
