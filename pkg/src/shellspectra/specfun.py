"""Closed-form half-integer spherical Bessel functions and the shell
eigencondition functions built from them.

All functions here are scalar, pure and double precision.  The small-argument
ascending series for the order-3/2 function avoids the cancellation in
sin(t)/t - cos(t).
"""

from __future__ import annotations

import math
import warnings
from enum import Enum

# Below this argument the order-3/2 closed form loses ~2*t^2 digits to
# cancellation; the 10-term series agrees with it to 1e-12 at the seam.
SERIES_SWITCH = 0.1
_SERIES_TERMS = 10


class EigenconditionKind(Enum):
    LAPLACE_CROSS = "laplace_cross"
    STOKES_CROSS = "stokes_cross"
    STOKES_TRIG = "stokes_trig"


def _check_positive(t: float) -> None:
    if t <= 0.0:
        raise ValueError(f"argument must be positive, got {t}")


def bessel_half(t: float) -> float:
    """J_{1/2}(t) = sqrt(2/(t*pi)) * sin(t)."""
    _check_positive(t)
    return math.sqrt(2.0 / (t * math.pi)) * math.sin(t)


def bessel_neg_half(t: float) -> float:
    """J_{-1/2}(t) = sqrt(2/(t*pi)) * cos(t)."""
    _check_positive(t)
    return math.sqrt(2.0 / (t * math.pi)) * math.cos(t)


def _sin_over_t_minus_cos_series(t: float) -> float:
    # sin(t)/t - cos(t) = sum_{n>=1} (-1)^(n+1) * 2n * t^(2n) / (2n+1)!
    total = 0.0
    sign = 1.0
    for n in range(1, _SERIES_TERMS + 1):
        total += sign * 2.0 * n * t ** (2 * n) / math.factorial(2 * n + 1)
        sign = -sign
    return total


def bessel_three_half(t: float) -> float:
    """J_{3/2}(t) = sqrt(2/(t*pi)) * (sin(t)/t - cos(t)), series below the switch."""
    _check_positive(t)
    pref = math.sqrt(2.0 / (t * math.pi))
    if t < SERIES_SWITCH:
        core = _sin_over_t_minus_cos_series(t)
    else:
        core = math.sin(t) / t - math.cos(t)
    return pref * core


def bessel_neg_three_half(t: float) -> float:
    """J_{-3/2}(t) = -sqrt(2/(t*pi)) * (sin(t) + cos(t)/t)."""
    _check_positive(t)
    return -math.sqrt(2.0 / (t * math.pi)) * (math.sin(t) + math.cos(t) / t)


def laplace_cross(kappa: float, r_inner: float, r_outer: float) -> float:
    """Cross product J_{1/2}(k*ro) J_{-1/2}(k*ri) - J_{1/2}(k*ri) J_{-1/2}(k*ro).

    Antisymmetric under swapping the radii.  Undefined for kappa*r_inner = 0.
    """
    if kappa <= 0.0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if kappa * r_inner <= 0.0:
        raise ValueError("cross form undefined for kappa * r_inner = 0")
    a = kappa * r_outer
    b = kappa * r_inner
    return bessel_half(a) * bessel_neg_half(b) - bessel_half(b) * bessel_neg_half(a)


def laplace_closed(kappa: float, r_inner: float, r_outer: float) -> float:
    """Equal closed form (2/(pi*k)) (ri*ro)^(-1/2) sin(k*(ro - ri))."""
    if kappa <= 0.0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if r_inner <= 0.0:
        raise ValueError("closed form undefined for r_inner = 0")
    return (2.0 / (math.pi * kappa)) * (r_inner * r_outer) ** -0.5 * math.sin(
        kappa * (r_outer - r_inner)
    )


def stokes_cross(kappa: float, r_inner: float, r_outer: float) -> float:
    """Cross product J_{3/2}(k*ro) J_{-3/2}(k*ri) - J_{3/2}(k*ri) J_{-3/2}(k*ro)."""
    if kappa <= 0.0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if kappa * r_inner <= 0.0:
        raise ValueError("cross form undefined for kappa * r_inner = 0")
    if kappa * r_inner < SERIES_SWITCH:
        warnings.warn(
            "stokes_cross loses precision for kappa * r_inner below "
            f"{SERIES_SWITCH}; prefer the trig form",
            RuntimeWarning,
            stacklevel=2,
        )
    a = kappa * r_outer
    b = kappa * r_inner
    return bessel_three_half(a) * bessel_neg_three_half(b) - bessel_three_half(
        b
    ) * bessel_neg_three_half(a)


def stokes_trig(kappa: float, r_inner: float, r_outer: float) -> float:
    """Trig form of the Stokes eigencondition without its positive prefactor.

    -(1 + 1/(k^2 ri ro)) sin(k d) + d/(k ri ro) cos(k d) with d = ro - ri.
    Exact algebraic rewriting of stokes_cross divided by stokes_prefactor;
    finite for all kappa, r_inner > 0.
    """
    if kappa <= 0.0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if r_inner <= 0.0:
        raise ValueError("trig form undefined for r_inner = 0")
    d = r_outer - r_inner
    b = r_inner * r_outer
    return -(1.0 + 1.0 / (kappa * kappa * b)) * math.sin(kappa * d) + d / (
        kappa * b
    ) * math.cos(kappa * d)


def stokes_prefactor(kappa: float, r_inner: float, r_outer: float) -> float:
    """Positive prefactor relating the trig and cross Stokes forms."""
    return 2.0 / (math.pi * kappa * math.sqrt(r_inner * r_outer))


def laplace_eigencondition(kappa, geom, form: str = "closed") -> float:
    """Laplace eigencondition on the gap-normalized shell of ``geom``.

    ``form`` selects 'closed' (default, stable for small gaps) or 'cross'.
    Roots in kappa are the square roots of the Laplace eigenvalues.
    """
    if form == "closed":
        return laplace_closed(kappa, geom.r_inner, geom.r_outer)
    if form == "cross":
        return laplace_cross(kappa, geom.r_inner, geom.r_outer)
    raise ValueError(f"unknown form {form!r}")


def stokes_eigencondition(kappa, geom, form: str = "trig") -> float:
    """Stokes eigencondition on the shell of ``geom``.

    The canonical branch is 'trig' (finite for all arguments); 'cross'
    evaluates the Bessel cross product directly.
    """
    if form == "trig":
        return stokes_trig(kappa, geom.r_inner, geom.r_outer)
    if form == "cross":
        return stokes_cross(kappa, geom.r_inner, geom.r_outer)
    raise ValueError(f"unknown form {form!r}")


def evaluate(kind: EigenconditionKind, kappa: float, geom) -> float:
    if kind is EigenconditionKind.LAPLACE_CROSS:
        return laplace_eigencondition(kappa, geom, form="cross")
    if kind is EigenconditionKind.STOKES_CROSS:
        return stokes_eigencondition(kappa, geom, form="cross")
    return stokes_eigencondition(kappa, geom, form="trig")
