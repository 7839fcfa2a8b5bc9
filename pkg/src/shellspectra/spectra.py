"""First eigenvalues and Poincare constants of the Laplace and Stokes
operators on spherical shells, plus the analytic upper bounds.

kappa denotes the smallest positive root of the relevant eigencondition; the
eigenvalue is kappa^2 and the Poincare constant its inverse square root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import specfun
from .geometry import ShellGeometry
from .rootfind import RootSearchConfig, smallest_positive_root


class OperatorKind(Enum):
    LAPLACE = "laplace"
    STOKES = "stokes"


class Frame(Enum):
    A_FRAME = "A"
    SIGMA_FRAME = "sigma"


class Method(Enum):
    CLOSED_FORM = "closed_form"
    ROOT_FIND = "root_find"
    ORACLE = "oracle"


@dataclass(frozen=True)
class EigenResult:
    operator: OperatorKind
    frame: Frame
    kappa: float
    eigenvalue: float
    multiplicity: int
    poincare: float
    method: Method

    @classmethod
    def from_kappa(cls, operator: OperatorKind, frame: Frame, kappa: float,
                   method: Method) -> "EigenResult":
        return cls(
            operator=operator,
            frame=frame,
            kappa=kappa,
            eigenvalue=kappa * kappa,
            multiplicity=1 if operator is OperatorKind.LAPLACE else 3,
            poincare=1.0 / kappa,
            method=method,
        )


@dataclass(frozen=True)
class BoundSet:
    """Analytic upper bounds on the scalar Poincare constant at gap ratio A."""

    A: float
    diam_half: float
    diam_over_pi_sqrt2: float
    nazarov: float
    best: float


def geometry_in_frame(geom: ShellGeometry, frame: Frame) -> ShellGeometry:
    """The same shell in the canonical normalization of the requested frame."""
    if frame is Frame.A_FRAME:
        return ShellGeometry.from_gap_ratio(geom.A)
    return ShellGeometry.from_radius_ratio(geom.sigma)


@lru_cache(maxsize=1)
def ball_stokes_root() -> float:
    """First positive solution of tan(x) = x, the first zero of J_{3/2}."""
    return smallest_positive_root(lambda x: math.sin(x) - x * math.cos(x))


def small_gap_reference() -> float:
    """The 1D unit-interval eigenvalue pi^2 that both A -> infinity limits recover."""
    return math.pi ** 2


def laplace_first(geom: ShellGeometry, frame: Frame = Frame.A_FRAME,
                  verify: bool = False,
                  cfg: RootSearchConfig | None = None) -> EigenResult:
    """First Laplace eigenvalue: kappa = pi in the A frame for every A.

    With ``verify=True`` the root is recomputed from the closed eigencondition
    in the requested frame instead of returned in closed form.
    """
    scale = 1.0 if frame is Frame.A_FRAME else 1.0 / (1.0 - geom.sigma)
    if not verify:
        return EigenResult.from_kappa(OperatorKind.LAPLACE, frame,
                                      math.pi * scale, Method.CLOSED_FORM)
    if geom.A == 0:
        raise ValueError("root-find verification needs A > 0")
    framed = geometry_in_frame(geom, frame)
    if cfg is None:
        cfg = RootSearchConfig().scaled(scale)
    kappa = smallest_positive_root(
        lambda k: specfun.laplace_eigencondition(k, framed), cfg)
    return EigenResult.from_kappa(OperatorKind.LAPLACE, frame, kappa,
                                  Method.ROOT_FIND)


def stokes_first(geom: ShellGeometry, frame: Frame = Frame.A_FRAME,
                 cfg: RootSearchConfig | None = None) -> EigenResult:
    """First (triple) Stokes eigenvalue from the trig eigencondition.

    A = 0 takes the punctured-ball closed path (first zero of J_{3/2}) rather
    than evaluating the A-parameterized eigencondition, which is singular
    there.
    """
    if geom.A == 0:
        return EigenResult.from_kappa(OperatorKind.STOKES, frame,
                                      ball_stokes_root(), Method.CLOSED_FORM)
    scale = 1.0 if frame is Frame.A_FRAME else 1.0 / (1.0 - geom.sigma)
    framed = geometry_in_frame(geom, frame)
    if cfg is None:
        cfg = RootSearchConfig().scaled(scale)
    kappa = smallest_positive_root(
        lambda k: specfun.stokes_eigencondition(k, framed), cfg)
    return EigenResult.from_kappa(OperatorKind.STOKES, frame, kappa,
                                  Method.ROOT_FIND)


def bounds_for(geom: ShellGeometry) -> BoundSet:
    """Diameter, improved-diameter and radius-ratio bounds; ``best`` is their
    admissible minimum.  The radius-ratio bound is vacuous (infinite) at A = 0.
    """
    A = geom.A
    diam_half = (A + 2.0) / 2.0
    diam_over_pi_sqrt2 = (math.sqrt(2.0) / math.pi) * (1.0 + A / 2.0)
    nazarov = (1.0 / math.pi) * (1.0 + 2.0 / A) if A > 0 else math.inf
    return BoundSet(
        A=A,
        diam_half=diam_half,
        diam_over_pi_sqrt2=diam_over_pi_sqrt2,
        nazarov=nazarov,
        best=min(diam_over_pi_sqrt2, nazarov),
    )
