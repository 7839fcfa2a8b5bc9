"""Radial factors of the first Laplace and Stokes eigenfunctions, their
L2 normalization over the shell, and the degree-1 angular vector modes.

The radial shapes are evaluated in boundary-anchored trigonometric form,
which is an exact rewriting of the half-integer Bessel combinations and stays
finite where the Bessel-ratio representation has a vanishing denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import specfun
from .geometry import ShellGeometry
from .quadrature import composite_gauss, gauss_legendre
from .spectra import (EigenResult, Frame, OperatorKind, geometry_in_frame,
                      laplace_first, stokes_first)

ANGULAR_FACTOR_SCALAR = 4.0 * math.pi
ANGULAR_FACTOR_MODE = 8.0 * math.pi / 3.0


class NormalizationSingular(ArithmeticError):
    """Bessel-ratio denominator vanishes; use the anchored trig form."""


@dataclass(frozen=True)
class RadialProfile:
    geom: ShellGeometry
    operator: OperatorKind
    frame: Frame
    r: np.ndarray
    values: np.ndarray
    norm_constant: float
    shape: Callable[[np.ndarray], np.ndarray]

    def evaluate(self, r):
        """Normalized profile at arbitrary radii inside the shell."""
        return self.norm_constant * self.shape(np.asarray(r, dtype=float))


@dataclass(frozen=True)
class AngularMode:
    alpha: int
    components: Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]
    angular_l2: float


def _sin_over_t_minus_cos(t: np.ndarray) -> np.ndarray:
    # Series branch mirrors specfun's small-argument switch, vectorized.
    t = np.asarray(t, dtype=float)
    small = t < specfun.SERIES_SWITCH
    ts = np.where(small, t, 1.0)
    series = np.zeros_like(ts)
    sign = 1.0
    for n in range(1, 11):
        series += sign * 2.0 * n * ts ** (2 * n) / math.factorial(2 * n + 1)
        sign = -sign
    with np.errstate(invalid="ignore", divide="ignore"):
        direct = np.sin(t) / np.where(t == 0.0, 1.0, t) - np.cos(t)
    return np.where(small, series, direct)


def _laplace_shape(r_inner: float, kappa: float) -> Callable:
    def shape(r):
        r = np.asarray(r, dtype=float)
        return np.sin(kappa * (r - r_inner)) / r
    return shape


def _stokes_shape_anchored(r_inner: float, kappa: float) -> Callable:
    def shape(r):
        r = np.asarray(r, dtype=float)
        s = r - r_inner
        b = kappa * kappa * r * r_inner
        h = -(1.0 + 1.0 / b) * np.sin(kappa * s) + (kappa * s / b) * np.cos(kappa * s)
        return h / r
    return shape


def _stokes_shape_ball(kappa: float) -> Callable:
    def shape(r):
        r = np.asarray(r, dtype=float)
        t = kappa * r
        # r^{-1/2} J_{3/2}(kappa r) up to a constant; -> 0 linearly at r = 0
        core = _sin_over_t_minus_cos(t)
        return np.where(r == 0.0, 0.0, core / np.where(r == 0.0, 1.0, r))
    return shape


def laplace_shape_bessel(geom: ShellGeometry, frame: Frame = Frame.A_FRAME) -> Callable:
    """Bessel-ratio representation of the Laplace radial factor (for
    cross-checks); raises NormalizationSingular near its degenerate radii."""
    framed = geometry_in_frame(geom, frame)
    kappa = laplace_first(geom, frame).kappa
    denom = specfun.bessel_neg_half(kappa * framed.r_inner)
    if abs(denom) < 1e-12:
        raise NormalizationSingular(
            f"J_(-1/2)({kappa * framed.r_inner}) ~ 0; use the sine form")
    ratio = specfun.bessel_half(kappa * framed.r_inner) / denom

    def shape(r):
        r = np.asarray(r, dtype=float)
        pref = np.sqrt(2.0 / (math.pi * kappa)) / r
        return pref * (np.sin(kappa * r) - ratio * np.cos(kappa * r))

    return shape


def stokes_shape_bessel(geom: ShellGeometry, frame: Frame = Frame.A_FRAME) -> Callable:
    """Bessel-ratio representation of the Stokes radial factor (for
    cross-checks); raises NormalizationSingular near its degenerate radii."""
    framed = geometry_in_frame(geom, frame)
    kappa = stokes_first(geom, frame).kappa
    denom = specfun.bessel_neg_three_half(kappa * framed.r_inner)
    if abs(denom) < 1e-12:
        raise NormalizationSingular(
            f"J_(-3/2)({kappa * framed.r_inner}) ~ 0; use the anchored form")
    ratio = specfun.bessel_three_half(kappa * framed.r_inner) / denom

    def shape(r):
        r = np.asarray(r, dtype=float)
        j32 = np.array([specfun.bessel_three_half(t) for t in np.atleast_1d(kappa * r)])
        jm32 = np.array([specfun.bessel_neg_three_half(t) for t in np.atleast_1d(kappa * r)])
        out = (j32 - ratio * jm32) / np.sqrt(np.atleast_1d(r))
        return out.reshape(np.shape(r))

    return shape


def _normalized(geom: ShellGeometry, operator: OperatorKind, frame: Frame,
                shape: Callable, r_inner: float, r_outer: float,
                n_samples: int, angular_factor: float) -> RadialProfile:
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2")
    mid = 0.5 * (r_inner + r_outer)
    if shape(np.array([mid]))[0] < 0:
        base = shape
        def shape(r, _base=base):  # noqa: E306 - sign fix, midpoint positive
            return -_base(r)
    x, w = composite_gauss(r_inner, r_outer)
    weighted = angular_factor * float(np.sum(w * shape(x) ** 2 * x * x))
    norm_constant = 1.0 / math.sqrt(weighted)
    r = np.linspace(r_inner, r_outer, n_samples)
    return RadialProfile(geom=geom, operator=operator, frame=frame, r=r,
                         values=norm_constant * shape(r),
                         norm_constant=norm_constant, shape=shape)


def laplace_profile(geom: ShellGeometry, n_samples: int,
                    frame: Frame = Frame.A_FRAME) -> RadialProfile:
    """Normalized first Laplace radial eigenfunction sin(kappa (r - ri)) / r."""
    framed = geometry_in_frame(geom, frame)
    kappa = laplace_first(geom, frame).kappa
    return _normalized(geom, OperatorKind.LAPLACE, frame,
                       _laplace_shape(framed.r_inner, kappa),
                       framed.r_inner, framed.r_outer, n_samples,
                       ANGULAR_FACTOR_SCALAR)


def stokes_profile(geom: ShellGeometry, n_samples: int,
                   frame: Frame = Frame.A_FRAME) -> RadialProfile:
    """Normalized first Stokes radial factor.

    For A > 0 this is the boundary-anchored trig form; at A = 0 the
    punctured-ball profile r^{-1/2} J_{3/2}(kappa0 r) on (0, 1].
    """
    result = stokes_first(geom, frame)
    framed = geometry_in_frame(geom, frame)
    if geom.A == 0:
        shape = _stokes_shape_ball(result.kappa)
        return _normalized(geom, OperatorKind.STOKES, frame, shape,
                           0.0, 1.0, n_samples, ANGULAR_FACTOR_MODE)
    shape = _stokes_shape_anchored(framed.r_inner, result.kappa)
    return _normalized(geom, OperatorKind.STOKES, frame, shape,
                       framed.r_inner, framed.r_outer, n_samples,
                       ANGULAR_FACTOR_MODE)


def small_gap_profile(geom: ShellGeometry, operator: OperatorKind,
                      n_samples: int) -> RadialProfile:
    """Normalized sin(pi s) flat-layer approximation, s = r - A/2 (A frame)."""
    framed = geometry_in_frame(geom, Frame.A_FRAME)
    shape = _laplace_shape(framed.r_inner, math.pi)

    def flat(r, _ri=framed.r_inner):
        return np.sin(math.pi * (np.asarray(r, dtype=float) - _ri))

    factor = (ANGULAR_FACTOR_SCALAR if operator is OperatorKind.LAPLACE
              else ANGULAR_FACTOR_MODE)
    return _normalized(geom, operator, Frame.A_FRAME, flat,
                       framed.r_inner, framed.r_outer, n_samples, factor)


def small_gap_deviation(geom: ShellGeometry, operator: OperatorKind,
                        n_samples: int = 512) -> float:
    """Sup-norm gap between the exact profile and the flat-layer one.

    Shapes are compared as r * profile (removing the 1/(R+s) geometric factor
    of the exact radial form) after each is scaled to unit sup norm.
    """
    if operator is OperatorKind.LAPLACE:
        exact = laplace_profile(geom, n_samples)
    else:
        exact = stokes_profile(geom, n_samples)
    approx = small_gap_profile(geom, operator, n_samples)
    r = exact.r
    g_exact = r * exact.values
    g_flat = approx.values
    g_exact = g_exact / np.max(np.abs(g_exact))
    g_flat = g_flat / np.max(np.abs(g_flat))
    return float(np.max(np.abs(g_exact - g_flat)))


def angular_mode(alpha: int) -> AngularMode:
    """Degree-1 angular vector mode in the (e_theta, e_phi) basis."""
    if alpha == 0:
        def components(theta, phi):
            return np.zeros_like(np.asarray(phi, float)), np.sin(theta)
    elif alpha == -1:
        def components(theta, phi):
            return np.cos(phi), -np.sin(phi) * np.cos(theta)
    elif alpha == 1:
        def components(theta, phi):
            return np.sin(phi), np.cos(phi) * np.cos(theta)
    else:
        raise ValueError(f"alpha must be one of -1, 0, 1; got {alpha}")
    l2 = _angular_inner(components, components)
    return AngularMode(alpha=alpha, components=components, angular_l2=l2)


def _angular_inner(comp_a: Callable, comp_b: Callable, n: int = 64) -> float:
    theta, w_t = gauss_legendre(0.0, math.pi, n)
    phi, w_p = gauss_legendre(0.0, 2.0 * math.pi, n)
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    at, ap = comp_a(tt, pp)
    bt, bp = comp_b(tt, pp)
    integrand = (at * bt + ap * bp) * np.sin(tt)
    return float(np.einsum("i,j,ij->", w_t, w_p, integrand))


def angular_inner_product(a: AngularMode, b: AngularMode) -> float:
    """Surface L2 inner product of two angular modes (quadrature)."""
    return _angular_inner(a.components, b.components)
