"""First Laplace and Stokes eigenvalues and Poincare constants on 3D
spherical shells, with independent finite-difference and Green's-function
cross-checks."""

from .geometry import InvalidGeometry, ShellGeometry
from .spectra import (BoundSet, EigenResult, Frame, Method, OperatorKind,
                      ball_stokes_root, bounds_for, laplace_first,
                      small_gap_reference, stokes_first)

__all__ = [
    "BoundSet",
    "EigenResult",
    "Frame",
    "InvalidGeometry",
    "Method",
    "OperatorKind",
    "ShellGeometry",
    "ball_stokes_root",
    "bounds_for",
    "laplace_first",
    "small_gap_reference",
    "stokes_first",
]
