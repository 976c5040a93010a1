"""Planar stack geometry and interface/stack coefficients.

Conventions, fixed once for the whole package:

* Layers are ordered top (atom side, always vacuum) to bottom (substrate).
  The first and last layers are semi-infinite; a three-layer stack has one
  interior film of thickness d.  Two-layer stacks (bare substrate) are
  handled as three-layer stacks with a zero-thickness film.
* The atom height z is measured from the TOP interface of the film.
* z-wavenumbers use the decaying branch: principal square root post-selected
  to Im >= 0 (and Re >= 0 on the real axis), so every propagation factor
  exp(2i h d), exp(2i h z) has magnitude <= 1.
* Two wave families propagate in a uniaxial layer: the ordinary family
  (h from k_t^2 = (omega/c)^2 eps_t, TE-like, "M") and the extraordinary
  family (TM-like, "N").  Interface coefficients R_H (TE family) and R_V
  (TM family) are signed as

      R_H(h_f, h_f1)          = (h_f1 - h_f)/(h_f1 + h_f) = -r_TE
      R_V(h_f, h_f1, k_f, k_f1) = (h_f k_f1^2 - h_f1 k_f^2)/(h_f k_f1^2 + h_f1 k_f^2)

  i.e. R_H is the negative of the usual TE Fresnel coefficient while R_V has
  the usual TM sign.
* The film scattering amplitudes returned by scattering_coefficients are
  phase-referenced to the top interface: the raw stack formula carries a
  factor exp(-2i h1 d) from an origin at the bottom of the film, which
  diverges for evanescent waves; referencing to the top interface absorbs it
  into the atom-side factor exp(2i h1 z) and keeps every integrand decaying.
  Signs: +quotient for the M family, -quotient for the N family, so in the
  isotropic limit B_M = -r_TE(stack) and B_N = -r_TM(stack).

All coefficient functions accept scalar or ndarray eta and vectorize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS
from .errors import (DegenerateInterfaceError, DomainError, ResonanceError,
                     SingularMaterialError)
from .materials import MaterialModel, PermittivityTensor, UniaxialSuperconductor, Vacuum, permittivity

__all__ = [
    "Layer",
    "LayerStack",
    "LayerWavevectors",
    "layer_wavevectors",
    "fresnel_te",
    "generalized_r_te",
    "interface_rh",
    "interface_rv",
    "interface_rv_general",
    "scattering_coefficients",
    "te_reflection",
    "tm_reflection",
]

_DENOMINATOR_GUARD = 1e-14


@dataclass(frozen=True)
class Layer:
    """One layer of the stack.  Thickness is ignored for the outer layers."""

    material: MaterialModel
    thickness: float = math.inf

    def __post_init__(self):
        if self.thickness < 0:
            raise DomainError("layer thickness must be non-negative")


@dataclass(frozen=True)
class LayerStack:
    """Ordered layers, top (atom side) to bottom, at one equilibrium temperature."""

    layers: tuple[Layer, ...]
    temperature: float

    def __post_init__(self):
        if not isinstance(self.layers, tuple):
            object.__setattr__(self, "layers", tuple(self.layers))
        if len(self.layers) not in (2, 3):
            raise DomainError("stack must have 2 or 3 layers")
        if not isinstance(self.layers[0].material, Vacuum):
            raise DomainError("layer 1 must be vacuum (the atom sits in it)")
        if self.temperature < 0:
            raise DomainError("temperature must be non-negative")
        for layer in self.layers[1:-1]:
            if not math.isfinite(layer.thickness):
                raise DomainError("interior layers must have finite thickness")

    @property
    def film_thickness(self) -> float:
        """Thickness of the interior film; 0 for a bare substrate."""
        return self.layers[1].thickness if len(self.layers) == 3 else 0.0

    @property
    def is_anisotropic(self) -> bool:
        return any(isinstance(l.material, UniaxialSuperconductor) for l in self.layers)

    def with_film_thickness(self, d: float) -> "LayerStack":
        """Same stack with the interior film thickness replaced by `d`.

        Only defined when a film exists; a bare substrate accepts d = 0 as a
        no-op (there is no film material to grow)."""
        if len(self.layers) == 2:
            if d != 0.0:
                raise DomainError("bare substrate has no film to resize")
            return self
        film = Layer(self.layers[1].material, d)
        return LayerStack((self.layers[0], film, self.layers[2]), self.temperature)

    def with_temperature(self, T: float) -> "LayerStack":
        return LayerStack(self.layers, T)


@dataclass(frozen=True)
class LayerWavevectors:
    """Ordinary (h1) and extraordinary (h2) z-wavenumbers in one layer."""

    h1: complex
    h2: complex


def _decaying_sqrt(w):
    """Principal complex square root folded onto Im >= 0 (Re >= 0 on the real axis)."""
    root = np.sqrt(np.asarray(w, dtype=complex))
    return np.where(root.imag < 0, -root, root)


def layer_wavevectors(eta, omega: float, eps: PermittivityTensor) -> LayerWavevectors:
    """z-wavenumbers of both wave families at transverse wavenumber `eta`.

    h1^2 = (omega/c)^2 eps_t - eta^2
    h2^2 = eta^2 (1 - eps_t/eps_z) + (omega/c)^2 eps_t - eta^2
    """
    if omega <= 0:
        raise DomainError("omega must be positive")
    if np.any(np.asarray(eta) < 0):
        raise DomainError("eta must be non-negative")
    if eps.eps_z == 0:
        raise SingularMaterialError("eps_z = 0 makes the extraordinary wave singular")
    eta = np.asarray(eta, dtype=float)
    kt2 = (omega / CONSTANTS.c) ** 2 * eps.eps_t
    h1 = _decaying_sqrt(kt2 - eta**2)
    h2 = _decaying_sqrt(eta**2 * (1.0 - eps.eps_t / eps.eps_z) + kt2 - eta**2)
    return LayerWavevectors(h1, h2)


def fresnel_te(k1z, k2z):
    """TE Fresnel reflection coefficient (k1z - k2z)/(k1z + k2z)."""
    den = k1z + k2z
    if np.any(np.abs(den) == 0):
        raise DegenerateInterfaceError("k1z + k2z = 0")
    return (k1z - k2z) / den


def generalized_r_te(r12, r23, k2z, d: float):
    """Film reflection coefficient combining two interfaces with the interior
    round-trip phase:  (r12 + r23 e^{2i k2z d}) / (1 - r21 r23 e^{2i k2z d}),
    with r21 = -r12."""
    if d < 0:
        raise DomainError("film thickness must be non-negative")
    phase = np.exp(2j * np.asarray(k2z, dtype=complex) * d)
    den = 1.0 + r12 * r23 * phase
    if np.any(np.abs(den) < _DENOMINATOR_GUARD):
        raise ResonanceError("film denominator below guard threshold")
    return (r12 + r23 * phase) / den


def interface_rh(h_f, h_f1):
    """TE-family interface coefficient (h_f1 - h_f)/(h_f1 + h_f) = -fresnel_te."""
    den = h_f + h_f1
    if np.any(np.abs(den) == 0):
        raise DegenerateInterfaceError("h_f + h_f1 = 0")
    return (h_f1 - h_f) / den


def interface_rv(h_f, h_f1, k_f, k_f1):
    """TM-family interface coefficient
    (h_f k_f1^2 - h_f1 k_f^2)/(h_f k_f1^2 + h_f1 k_f^2)."""
    a = h_f * k_f1**2
    b = h_f1 * k_f**2
    den = a + b
    if np.any(np.abs(den) == 0):
        raise DegenerateInterfaceError("TM interface denominator vanished")
    return (a - b) / den


def interface_rv_general(h_f, h_f1, k_f, k_f1, w1=1.0, w2=1.0):
    """Weighted TM-family interface coefficient (X - 1)/(X + 1) with
    X = h_f [(w1 - w2) h_f1^2 + w2 k_f1^2] / (h_f1 [(w1 - w2) h_f^2 + w2 k_f^2]).

    Reduces algebraically to interface_rv at w1 = w2 = 1; kept as a test hook
    for that identity."""
    x = (h_f * ((w1 - w2) * h_f1**2 + w2 * k_f1**2)) / (
        h_f1 * ((w1 - w2) * h_f**2 + w2 * k_f**2))
    return (x - 1.0) / (x + 1.0)


def _three_layer_eps(stack: LayerStack):
    """(materials, d) with two-layer stacks promoted to a zero-thickness film
    of the substrate material."""
    mats = [layer.material for layer in stack.layers]
    if len(mats) == 2:
        return (mats[0], mats[1], mats[1]), 0.0
    return tuple(mats), stack.layers[1].thickness


def _stack_permittivities(stack: LayerStack, omega: float):
    mats, d = _three_layer_eps(stack)
    eps = tuple(permittivity(m, omega, stack.temperature) for m in mats)
    return eps, d


def _film_quotient(r1, r2, h2, d):
    """(R1 + R2 e^{2i h2 d}) / (1 + R1 R2 e^{2i h2 d}) with resonance guard."""
    phase = np.exp(2j * h2 * d)
    den = 1.0 + r1 * r2 * phase
    if np.any(np.abs(den) < _DENOMINATOR_GUARD):
        raise ResonanceError("scattering denominator below guard threshold")
    return (r1 + r2 * phase) / den


def scattering_coefficients(stack: LayerStack, eta, omega: float):
    """Phase-referenced film scattering amplitudes (B_M, B_N) at `eta`.

    B_M uses the ordinary-family wavevectors and TE-family interface
    coefficients; B_N the extraordinary family and TM-family coefficients.
    Signs: B_M = +quotient, B_N = -quotient (see module docstring).
    """
    (eps1, eps2, eps3), d = _stack_permittivities(stack, omega)
    wv1 = layer_wavevectors(eta, omega, eps1)
    wv2 = layer_wavevectors(eta, omega, eps2)
    wv3 = layer_wavevectors(eta, omega, eps3)

    r1_h = interface_rh(wv1.h1, wv2.h1)
    r2_h = interface_rh(wv2.h1, wv3.h1)
    b_m = _film_quotient(r1_h, r2_h, wv2.h1, d)

    k = omega / CONSTANTS.c
    k1 = _decaying_sqrt(k**2 * eps1.eps_t)
    k2 = _decaying_sqrt(k**2 * eps2.eps_t)
    k3 = _decaying_sqrt(k**2 * eps3.eps_t)
    r1_v = interface_rv(wv1.h2, wv2.h2, k1, k2)
    r2_v = interface_rv(wv2.h2, wv3.h2, k2, k3)
    b_n = -_film_quotient(r1_v, r2_v, wv2.h2, d)

    return b_m, b_n


def te_reflection(stack: LayerStack, eta, omega: float):
    """Generalized TE reflection coefficient of the stack at `eta`."""
    (eps1, eps2, eps3), d = _stack_permittivities(stack, omega)
    h1 = layer_wavevectors(eta, omega, eps1).h1
    h2 = layer_wavevectors(eta, omega, eps2).h1
    h3 = layer_wavevectors(eta, omega, eps3).h1
    return generalized_r_te(fresnel_te(h1, h2), fresnel_te(h2, h3), h2, d)


def tm_reflection(stack: LayerStack, eta, omega: float):
    """Generalized TM-family reflection coefficient of the stack (built from
    the extraordinary wavevectors and interface_rv, composed like the TE film
    coefficient)."""
    (eps1, eps2, eps3), d = _stack_permittivities(stack, omega)
    wv1 = layer_wavevectors(eta, omega, eps1)
    wv2 = layer_wavevectors(eta, omega, eps2)
    wv3 = layer_wavevectors(eta, omega, eps3)
    k = omega / CONSTANTS.c
    k1 = _decaying_sqrt(k**2 * eps1.eps_t)
    k2 = _decaying_sqrt(k**2 * eps2.eps_t)
    k3 = _decaying_sqrt(k**2 * eps3.eps_t)
    r12 = interface_rv(wv1.h2, wv2.h2, k1, k2)
    r23 = interface_rv(wv2.h2, wv3.h2, k2, k3)
    return _film_quotient(r12, r23, wv2.h2, d)
