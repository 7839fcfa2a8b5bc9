"""Spherical-shell geometry, parameterized interchangeably by the inverse
relative gap width A, the radius ratio sigma, or explicit radii.

Canonical normalizations: the A frame fixes the gap width to 1 (radii A/2 and
1 + A/2); the sigma frame fixes the outer radius to 1 (radii sigma and 1).
A = 0 encodes the punctured-ball limit.
"""

from __future__ import annotations

from dataclasses import dataclass


class InvalidGeometry(ValueError):
    pass


@dataclass(frozen=True)
class ShellGeometry:
    A: float
    sigma: float
    r_inner: float
    r_outer: float

    def __post_init__(self) -> None:
        if self.A < 0 or not (0 <= self.sigma < 1):
            raise InvalidGeometry(
                f"require A >= 0 and sigma in [0, 1): A={self.A}, sigma={self.sigma}")
        if self.r_inner < 0 or self.r_outer <= self.r_inner:
            raise InvalidGeometry(
                f"require 0 <= r_inner < r_outer: ({self.r_inner}, {self.r_outer})")

    @property
    def gap(self) -> float:
        return self.r_outer - self.r_inner

    @classmethod
    def from_gap_ratio(cls, A: float) -> "ShellGeometry":
        """Shell with gap width 1: radii A/2 and 1 + A/2."""
        if A < 0:
            raise InvalidGeometry(f"A must be nonnegative, got {A}")
        return cls(A=A, sigma=A / (A + 2.0), r_inner=A / 2.0, r_outer=1.0 + A / 2.0)

    @classmethod
    def from_radius_ratio(cls, sigma: float) -> "ShellGeometry":
        """Shell with outer radius 1: radii sigma and 1."""
        if not (0 <= sigma < 1):
            raise InvalidGeometry(f"sigma must lie in [0, 1), got {sigma}")
        return cls(A=2.0 * sigma / (1.0 - sigma), sigma=sigma,
                   r_inner=sigma, r_outer=1.0)

    @classmethod
    def from_radii(cls, r_inner: float, r_outer: float) -> "ShellGeometry":
        if r_inner < 0 or r_outer <= r_inner:
            raise InvalidGeometry(
                f"require 0 <= r_inner < r_outer, got ({r_inner}, {r_outer})")
        if r_inner == 0:
            return cls(A=0.0, sigma=0.0, r_inner=0.0, r_outer=r_outer)
        return cls(A=2.0 * r_inner / (r_outer - r_inner),
                   sigma=r_inner / r_outer, r_inner=r_inner, r_outer=r_outer)
