"""Independent finite-difference eigensolver for the radial reductions.

The substitution v = r*u turns u'' + (2/r)u' - l(l+1)u/r^2 + lambda*u = 0 into
the symmetric problem -v'' + l(l+1) v / r^2 = lambda v with Dirichlet ends,
discretized by centered differences; the smallest eigenvalue of the resulting
tridiagonal matrix is extracted by Sturm-sequence bisection.  This route never
touches the transcendental eigenconditions, so it is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import ShellGeometry


class NonConvergence(RuntimeError):
    pass


class IllConditioned(RuntimeError):
    pass


@dataclass(frozen=True)
class RadialProblem:
    geom: ShellGeometry
    l: int
    n_grid: int

    def __post_init__(self) -> None:
        if self.l not in (0, 1):
            raise ValueError(f"l must be 0 or 1, got {self.l}")
        if self.n_grid < 64:
            raise ValueError(f"n_grid must be >= 64, got {self.n_grid}")


def _tridiagonal(problem: RadialProblem) -> tuple[np.ndarray, float]:
    geom = problem.geom
    if geom.r_inner <= 0:
        raise ValueError("finite-difference oracle needs r_inner > 0")
    n = problem.n_grid
    if n > 1_000_000:
        raise IllConditioned(f"n_grid {n} too large for stable bisection")
    h = geom.gap / (n + 1)
    r = geom.r_inner + h * np.arange(1, n + 1)
    diag = 2.0 / h ** 2 + problem.l * (problem.l + 1) / r ** 2
    off = -1.0 / h ** 2
    return diag, off


def _count_below(diag: np.ndarray, off: float, x: float) -> int:
    """Eigenvalues of the symmetric tridiagonal matrix strictly below x
    (Sturm sequence via the LDL^T pivots)."""
    count = 0
    off2 = off * off
    tiny = 1e-30
    q = diag[0] - x
    if q < 0.0:
        count += 1
    for d in diag[1:]:
        if abs(q) < tiny:
            q = -tiny if q < 0.0 else tiny
        q = d - x - off2 / q
        if q < 0.0:
            count += 1
    return count


def _smallest_eigenvalue(diag: np.ndarray, off: float,
                         rel_tol: float = 1e-13,
                         max_iterations: int = 200) -> float:
    lo = 0.0  # the operator is positive definite
    hi = float(np.max(diag)) + 2.0 * abs(off)
    if _count_below(diag, off, hi) < 1:
        raise NonConvergence("upper Gershgorin bound excludes all eigenvalues")
    for _ in range(max_iterations):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rel_tol * max(1.0, abs(mid)):
            return mid
        if _count_below(diag, off, mid) >= 1:
            hi = mid
        else:
            lo = mid
    raise NonConvergence("Sturm bisection stalled")


def radial_eigenvalue(problem: RadialProblem) -> float:
    """Smallest radial eigenvalue of the shell problem for mode l."""
    diag, off = _tridiagonal(problem)
    return _smallest_eigenvalue(diag, off)


def rayleigh_quotient(r: np.ndarray, u: np.ndarray, l: int) -> float:
    """Energy-over-mass ratio int (u'^2 + l(l+1)u^2/r^2) r^2 dr / int u^2 r^2 dr
    with trapezoidal integration and centered-difference derivatives."""
    r = np.asarray(r, dtype=float)
    u = np.asarray(u, dtype=float)
    du = np.gradient(u, r)
    energy = np.trapezoid((du ** 2 + l * (l + 1) * u ** 2 / r ** 2) * r ** 2, r)
    mass = np.trapezoid(u ** 2 * r ** 2, r)
    return float(energy / mass)
