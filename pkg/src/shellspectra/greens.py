"""Image-series Green's function of the negative Laplacian on the unit ball
and on the shell sigma <= |x| <= 1, its angular reduction to a radial kernel,
and a Nystrom power-iteration estimate of the inverse-operator norm.

Each series term has the form 1/sqrt(a^2 + b^2 - 2ab cos(angle)); integrating
such a term over the sphere gives 4*pi/max(a, b), which reduces the kernel to
closed form in the two radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import gauss_legendre


class TruncationInsufficient(RuntimeError):
    """The last retained image term still exceeds the tail tolerance."""


class NonConvergence(RuntimeError):
    """Power iteration failed to settle within the iteration budget."""


@dataclass(frozen=True)
class GreensParams:
    sigma: float
    truncation_K: int | None = None
    radial_nodes: int = 128
    tail_tol: float = 1e-10

    def __post_init__(self) -> None:
        if not (0 <= self.sigma < 1):
            raise ValueError(f"sigma must lie in [0, 1), got {self.sigma}")
        if self.radial_nodes < 1 or self.tail_tol <= 0:
            raise ValueError("radial_nodes and tail_tol must be positive")

    def resolved_truncation(self) -> int:
        """Series order: the K-th term scales like sigma^K."""
        if self.truncation_K is not None:
            return self.truncation_K
        if self.sigma == 0:
            return 0
        if self.sigma < 1e-3:
            return 3
        return math.ceil(math.log(self.tail_tol) / math.log(self.sigma)) + 2


def _reduce(x, y) -> tuple[float, float, float]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    if nx == 0.0 or ny == 0.0:
        return nx, ny, 0.0
    c = float(np.dot(x, y) / (nx * ny))
    return nx, ny, max(-1.0, min(1.0, c))


def _inv_dist(a: float, b: float, c: float) -> float:
    d2 = a * a + b * b - 2.0 * a * b * c
    if d2 <= 0.0:
        raise ValueError("coincident points: Green's function is singular")
    return 1.0 / math.sqrt(d2)


def greens_ball(x, y) -> float:
    """Dirichlet Green's function of -Laplace on the unit ball."""
    nx, ny, c = _reduce(x, y)
    return (1.0 / (4.0 * math.pi)) * (_inv_dist(nx, ny, c)
                                      - _inv_dist(nx * ny, 1.0, c))


def greens_shell(x, y, params: GreensParams) -> float:
    """Ball kernel plus the truncated geometric image series for the shell."""
    nx, ny, c = _reduce(x, y)
    value = (1.0 / (4.0 * math.pi)) * (_inv_dist(nx, ny, c)
                                       - _inv_dist(nx * ny, 1.0, c))
    sigma = params.sigma
    if sigma == 0.0:
        return value
    K = params.resolved_truncation()
    term = 0.0
    for k in range(1, K + 1):
        s2 = sigma ** (2 * k)
        term = (sigma ** k / (4.0 * math.pi)) * (
            _inv_dist(ny, s2 * nx, c)
            + _inv_dist(s2 * ny, nx, c)
            - _inv_dist(nx * ny, s2, c)
            - _inv_dist(s2 * nx * ny, 1.0, c)
        )
        value += term
    if K > 0 and abs(term) > params.tail_tol:
        raise TruncationInsufficient(
            f"last image term {term:.3e} exceeds tail_tol {params.tail_tol:.3e}")
    return value


def angular_term_integral(a: float, b: float) -> float:
    """Closed-form sphere integral of 1/sqrt(a^2 + b^2 - 2ab cos(angle))."""
    return 4.0 * math.pi / max(a, b)


def angular_term_integral_quadrature(a: float, b: float, n: int = 256) -> float:
    """Same integral by Gauss-Legendre in cos(angle), for verification."""
    c, w = gauss_legendre(-1.0, 1.0, n)
    return float(2.0 * math.pi * np.sum(w / np.sqrt(a * a + b * b - 2 * a * b * c)))


def radial_kernel(r, rho, params: GreensParams):
    """Sphere integral of the shell Green's function over the angle.

    Accepts scalars or broadcastable arrays; symmetric in (r, rho).
    """
    r = np.asarray(r, dtype=float)
    rho = np.asarray(rho, dtype=float)
    value = 1.0 / np.maximum(r, rho) - 1.0 / np.maximum(r * rho, 1.0)
    sigma = params.sigma
    if sigma == 0.0:
        return value if value.shape else float(value)
    for k in range(1, params.resolved_truncation() + 1):
        s2 = sigma ** (2 * k)
        value = value + sigma ** k * (
            1.0 / np.maximum(rho, s2 * r)
            + 1.0 / np.maximum(s2 * rho, r)
            - 1.0 / np.maximum(r * rho, s2)
            - 1.0 / np.maximum(s2 * r * rho, 1.0)
        )
    return value if value.shape else float(value)


def _kernel_matrix(params: GreensParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    nodes, weights = gauss_legendre(params.sigma, 1.0, params.radial_nodes)
    K = radial_kernel(nodes[:, None], nodes[None, :], params)
    return nodes, weights, K


def inverse_norm_mode(params: GreensParams,
                      max_iterations: int = 10_000,
                      quotient_tol: float = 1e-12):
    """Largest eigenvalue of the radial inverse operator and its eigenvector.

    Discretizes (Tg)(r) = int K(r, rho) g(rho) rho^2 drho on a Gauss-Legendre
    grid with the r^2 dr weight symmetrized in, then runs power iteration on
    the symmetric matrix.  Returns (estimate, radii, radial profile values).
    """
    if params.radial_nodes < 64:
        raise ValueError("radial_nodes must be >= 64")
    nodes, weights, K = _kernel_matrix(params)
    d = np.sqrt(weights) * nodes
    M = d[:, None] * K * d[None, :]
    v = np.ones(params.radial_nodes)
    v /= np.linalg.norm(v)
    quotient = float(v @ (M @ v))
    for _ in range(max_iterations):
        w = M @ v
        v = w / np.linalg.norm(w)
        new_quotient = float(v @ (M @ v))
        if abs(new_quotient - quotient) <= quotient_tol:
            if v.sum() < 0:
                v = -v
            return new_quotient, nodes, v / d
        quotient = new_quotient
    raise NonConvergence(
        f"Rayleigh quotient not settled to {quotient_tol} in {max_iterations} steps")


def inverse_norm_estimate(params: GreensParams) -> float:
    """Norm of the inverse Laplacian on the shell, restricted to radial
    functions (which carries the global norm); equals (1 - sigma)^2 / pi^2."""
    if params.sigma > 0.9:
        raise ValueError("sigma must be <= 0.9 for the norm estimate")
    estimate, _, _ = inverse_norm_mode(params)
    return estimate
