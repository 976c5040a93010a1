"""Spin-flip rate computations above a layered structure.

Two integration routes are provided:

* gamma_isotropic -- the layered-medium rate for stacks of isotropic layers,

      Gamma_s = P * integral K^2 dK/(2 pi)^2 * e^{-2 K z}/2 * Im r_TE(K),

  with P = mu0 (muB gS)^2 / (8 hbar) and r_TE the generalized TE reflection
  coefficient of the stack.

* gamma_anisotropic -- the scattering-coefficient rate valid for a uniaxial
  film,

      Gamma_d = P * integral_0^inf d eta * e^{-2 eta z}/(8 pi)
                  * Im[3 eta^2 M(eta) + k1^2 N(eta)],

  where (M, N) are the film responses of the TE-like and TM-like wave
  families and k1 = omega/c.  M and N are the negatives of the
  scattering_coefficients amplitudes (whose sign convention makes them equal
  to -r_TE / -r_TM in the isotropic limit); the rate uses the passive-response
  sign so the integrand, a magnetic noise spectral density, is non-negative
  for passive media.

The two routes carry different angular normalizations: on purely isotropic
stacks gamma_anisotropic / gamma_isotropic is the constant 3*pi (exposed as
PATH_CALIBRATION_RATIO and measurable via isotropic_path_ratio).  Each route
is used verbatim for its own material class; the ratio is documented, never
silently applied.

Both rates are "field" rates at zero temperature of the field; thermal
occupation multiplies them by (n_th + 1).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constants import (CONSTANTS, RB87_CLOCK_TRANSITION, TransitionSpec,
                        rate_prefactor, thermal_photon_number)
from .errors import DomainError, GrazingSingularityError
from .quadrature import (DEFAULT_SETTINGS, QuadratureDiagnostics,
                         QuadratureSettings, integrate_semi_infinite)
from .stratified import LayerStack, layer_wavevectors, scattering_coefficients, te_reflection
from .materials import permittivity

__all__ = [
    "RateResult",
    "SpinOrientation",
    "PATH_CALIBRATION_RATIO",
    "PRESET_SPIN_WEIGHT",
    "gamma_isotropic",
    "gamma_anisotropic",
    "gamma_general",
    "spin_flip_rate",
    "double_curl_integrand",
    "rate_integrand_anisotropic",
    "isotropic_path_ratio",
]

# Measured gamma_anisotropic / gamma_isotropic on isotropic stacks (the two
# published integral forms are not mutually normalized).  Documented here and
# asserted by the test suite; never applied to a result.
PATH_CALIBRATION_RATIO = 3.0 * math.pi

# Effective squared spin matrix element per coupling channel (hbar units) that
# makes the general contraction reproduce gamma_anisotropic for the built-in
# transition preset: (1/4)^2 per channel.
PRESET_SPIN_WEIGHT = 1.0 / 16.0

# Warn when the atom height is no longer tiny against the transition
# wavelength (the rate formulas are quasi-static).
_QUASISTATIC_FRACTION = 0.01


class SpinOrientation(Enum):
    RANDOM = "random"              # sum of parallel and perpendicular channels
    PARALLEL = "parallel"          # spin parallel to the surface (in-plane noise)
    PERPENDICULAR = "perpendicular"  # spin perpendicular (out-of-plane noise)


@dataclass(frozen=True)
class RateResult:
    gamma_field: float             # rate before thermal occupation (1/s)
    n_th: float                    # mean thermal photon number
    gamma_total: float             # gamma_field * (n_th + 1) (1/s)
    tau: float                     # 1/gamma_total (s); inf for a lossless stack
    diagnostics: QuadratureDiagnostics


def _check_geometry(stack: LayerStack, z: float, transition: TransitionSpec):
    if z <= 0:
        raise DomainError("atom height z must be positive")
    wavelength = CONSTANTS.c / transition.frequency
    if z > _QUASISTATIC_FRACTION * wavelength:
        warnings.warn(
            f"z = {z:g} m is not small against the transition wavelength "
            f"{wavelength:g} m; the quasi-static rate formulas degrade",
            stacklevel=3)


def _result(gamma_field: float, transition: TransitionSpec, T: float,
            diag: QuadratureDiagnostics) -> RateResult:
    n = thermal_photon_number(transition.frequency, T)
    gamma_total = gamma_field * (n + 1.0)
    tau = 1.0 / gamma_total if gamma_total > 0 else math.inf
    return RateResult(gamma_field, n, gamma_total, tau, diag)


def gamma_isotropic(stack: LayerStack, z: float,
                    transition: TransitionSpec = RB87_CLOCK_TRANSITION,
                    T: float | None = None,
                    settings: QuadratureSettings = DEFAULT_SETTINGS) -> RateResult:
    """Spin-flip rate above a stack of isotropic layers."""
    if stack.is_anisotropic:
        raise DomainError("stack contains a uniaxial layer; use gamma_anisotropic")
    _check_geometry(stack, z, transition)
    if T is None:
        T = stack.temperature
    stack = stack.with_temperature(T)
    omega = transition.omega

    def integrand(eta):
        r = te_reflection(stack, eta, omega)
        return eta**2 * np.exp(-2.0 * eta * z) / 2.0 * r.imag / (2.0 * math.pi) ** 2

    value, diag = integrate_semi_infinite(integrand, z, settings)
    return _result(rate_prefactor() * value, transition, T, diag)


def _family_responses(stack: LayerStack, eta, omega: float):
    """Passive-sign film responses (M, N) of the TE-like and TM-like families."""
    b_m, b_n = scattering_coefficients(stack, eta, omega)
    return -b_m, -b_n


def rate_integrand_anisotropic(stack: LayerStack, eta, z: float, omega: float):
    """Integrand of the anisotropic-route rate (before the global prefactor):
    e^{-2 eta z}/(8 pi) * Im[3 eta^2 M + k1^2 N]."""
    m, n = _family_responses(stack, eta, omega)
    k1 = omega / CONSTANTS.c
    eta = np.asarray(eta, dtype=float)
    return np.exp(-2.0 * eta * z) / (8.0 * math.pi) * (3.0 * eta**2 * m + k1**2 * n).imag


def gamma_anisotropic(stack: LayerStack, z: float,
                      transition: TransitionSpec = RB87_CLOCK_TRANSITION,
                      T: float | None = None,
                      settings: QuadratureSettings = DEFAULT_SETTINGS) -> RateResult:
    """Spin-flip rate via the scattering-coefficient route (uniaxial film
    allowed; isotropic stacks are accepted and reproduce gamma_isotropic up
    to PATH_CALIBRATION_RATIO)."""
    _check_geometry(stack, z, transition)
    if T is None:
        T = stack.temperature
    stack = stack.with_temperature(T)
    omega = transition.omega

    def integrand(eta):
        return rate_integrand_anisotropic(stack, eta, z, omega)

    value, diag = integrate_semi_infinite(integrand, z, settings)
    return _result(rate_prefactor() * value, transition, T, diag)


def double_curl_integrand(stack: LayerStack, eta, z: float, omega: float):
    """Full (retarded) integrand of the doubly curled scattering Green
    tensor contraction, without near-field approximation:

        i e^{2 i h z} / (4 pi) * [ M (eta^3/h - h eta/2) + N eta k^2/(2 h) ],

    h the vacuum z-wavenumber.  Its imaginary part is the rate integrand; for
    eta >> k it reduces to rate_integrand_anisotropic with an O((k/eta)^2)
    error.  Exposed for testing and as the full-retardation option."""
    if z <= 0:
        raise DomainError("z must be positive")
    eta_arr = np.asarray(eta, dtype=float)
    k = omega / CONSTANTS.c
    h = layer_wavevectors(eta_arr, omega, permittivity(stack.layers[0].material, omega, stack.temperature)).h1
    if np.any(h == 0):
        raise GrazingSingularityError(
            "eta equals the free-space wavenumber; integrable grazing point")
    m, n = _family_responses(stack, eta_arr, omega)
    bracket = m * (eta_arr**3 / h - h * eta_arr / 2.0) + n * eta_arr * k**2 / (2.0 * h)
    return 1j * np.exp(2j * h * z) / (4.0 * math.pi) * bracket


def _orientation_weights(transition: TransitionSpec, orientation: SpinOrientation):
    """(parallel, perpendicular) channel weights |<f|S|i>|^2 in hbar units."""
    if transition.coupling_mode == "preset":
        w_par = w_perp = PRESET_SPIN_WEIGHT
    else:
        mx, my, mz = transition.matrix_elements
        w_par = abs(mx) ** 2 + abs(my) ** 2
        w_perp = abs(mz) ** 2
    if orientation is SpinOrientation.PARALLEL:
        return w_par, 0.0
    if orientation is SpinOrientation.PERPENDICULAR:
        return 0.0, w_perp
    return w_par, w_perp


def gamma_general(stack: LayerStack, z: float,
                  transition: TransitionSpec = RB87_CLOCK_TRANSITION,
                  T: float | None = None,
                  orientation: SpinOrientation = SpinOrientation.RANDOM,
                  settings: QuadratureSettings = DEFAULT_SETTINGS) -> RateResult:
    """General contraction of the spin matrix elements with the in-plane
    (parallel, doubly degenerate) and out-of-plane (perpendicular) components
    of the curl-curl noise tensor:

        Gamma = mu0 2 (muB gS)^2/hbar * [w_par * Im C_rr + w_perp * Im C_zz]

    with near-field components

        Im C_rr = integral e^{-2 eta z}/(8 pi) Im[eta^2 M + k1^2 N] d eta
        Im C_zz = integral e^{-2 eta z}/(8 pi) Im[2 eta^2 M]        d eta.

    With the preset weights and RANDOM orientation (the channel sum) this is
    identical to gamma_anisotropic.
    """
    _check_geometry(stack, z, transition)
    if T is None:
        T = stack.temperature
    stack = stack.with_temperature(T)
    omega = transition.omega
    k1 = omega / CONSTANTS.c
    w_par, w_perp = _orientation_weights(transition, orientation)

    def integrand(eta):
        m, n = _family_responses(stack, eta, omega)
        eta = np.asarray(eta, dtype=float)
        envelope = np.exp(-2.0 * eta * z) / (8.0 * math.pi)
        c_rr = (eta**2 * m + k1**2 * n).imag
        c_zz = (2.0 * eta**2 * m).imag
        return envelope * (w_par * c_rr + w_perp * c_zz)

    if w_par == 0.0 and w_perp == 0.0:
        # Zero matrix elements: no coupling, no integral to run.
        diag = QuadratureDiagnostics(0, 0.0, 0.0, 0, 0)
        return _result(0.0, transition, T, diag)

    value, diag = integrate_semi_infinite(integrand, z, settings)
    pref = CONSTANTS.mu0 * 2.0 * (CONSTANTS.muB * CONSTANTS.gS) ** 2 / CONSTANTS.hbar
    return _result(pref * value, transition, T, diag)


def spin_flip_rate(stack: LayerStack, z: float,
                   transition: TransitionSpec = RB87_CLOCK_TRANSITION,
                   T: float | None = None,
                   settings: QuadratureSettings = DEFAULT_SETTINGS) -> RateResult:
    """Rate via the route appropriate to the stack: the scattering route if
    any layer is uniaxial, the isotropic route otherwise."""
    if stack.is_anisotropic:
        return gamma_anisotropic(stack, z, transition, T, settings)
    return gamma_isotropic(stack, z, transition, T, settings)


def isotropic_path_ratio(stack: LayerStack, z: float,
                         transition: TransitionSpec = RB87_CLOCK_TRANSITION,
                         T: float | None = None,
                         settings: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """Measured gamma_anisotropic / gamma_isotropic on an isotropic stack
    (the route calibration constant; expected PATH_CALIBRATION_RATIO)."""
    gd = gamma_anisotropic(stack, z, transition, T, settings).gamma_field
    gs = gamma_isotropic(stack, z, transition, T, settings).gamma_field
    return gd / gs
