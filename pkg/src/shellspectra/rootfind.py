"""Bracketed search for the smallest positive root of a scalar function.

An upward scan locates the first sign change, bisection refines it, and a
finer re-scan of the skipped interval guards against a missed earlier root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable


class NoSignChange(RuntimeError):
    """The scan range contains no sign change."""


class Unconverged(RuntimeError):
    """Bisection budget exhausted before reaching the tolerance."""


class MissedRoot(RuntimeError):
    """The finer re-scan found a sign change before the reported root."""


@dataclass(frozen=True)
class RootSearchConfig:
    scan_start: float = 0.05
    scan_step: float = 0.05
    scan_max: float = 60.0
    abs_tol: float = 1e-13
    max_bisections: int = 200

    def __post_init__(self) -> None:
        if not (0 < self.scan_start < self.scan_max):
            raise ValueError("require 0 < scan_start < scan_max")
        if self.scan_step <= 0 or self.abs_tol <= 0:
            raise ValueError("scan_step and abs_tol must be positive")
        if self.max_bisections < 1:
            raise ValueError("max_bisections must be >= 1")

    def scaled(self, factor: float) -> "RootSearchConfig":
        """Config with the scan window stretched by ``factor`` (tolerance kept)."""
        return RootSearchConfig(
            scan_start=self.scan_start * factor,
            scan_step=self.scan_step * factor,
            scan_max=self.scan_max * factor,
            abs_tol=self.abs_tol,
            max_bisections=self.max_bisections,
        )


def _bisect(f: Callable[[float], float], a: float, b: float, fa: float,
            fb: float, cfg: RootSearchConfig) -> float:
    for _ in range(cfg.max_bisections):
        if b - a <= cfg.abs_tol:
            return 0.5 * (a + b)
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m
        if math.copysign(1.0, fm) == math.copysign(1.0, fa):
            a, fa = m, fm
        else:
            b, fb = m, fm
    raise Unconverged(f"bisection did not reach {cfg.abs_tol} in "
                      f"{cfg.max_bisections} steps")


def _rescan(f: Callable[[float], float], lo: float, hi: float,
            step: float) -> None:
    # Fail loudly if a sign change exists strictly before the found bracket.
    x_prev = lo
    f_prev = f(x_prev)
    x = lo + step
    while x < hi:
        fx = f(x)
        if fx == 0.0 or math.copysign(1.0, fx) != math.copysign(1.0, f_prev):
            raise MissedRoot(
                f"sign change near {x} precedes the root bracket at {hi}")
        x_prev, f_prev = x, fx
        x += step


def smallest_positive_root(f: Callable[[float], float],
                           cfg: RootSearchConfig | None = None) -> float:
    """Smallest positive root of ``f``, located by scan + bisection.

    Scans upward from ``scan_start`` in steps of ``scan_step`` and refines the
    first sign-change bracket by bisection to width ``abs_tol``.  Raises
    NoSignChange if the scan range holds none, MissedRoot if the quarter-step
    re-scan of the skipped interval turns up an earlier sign change.
    """
    if cfg is None:
        cfg = RootSearchConfig()
    x_prev = cfg.scan_start
    f_prev = f(x_prev)
    if f_prev == 0.0:
        return x_prev
    x = x_prev + cfg.scan_step
    while x <= cfg.scan_max + 0.5 * cfg.scan_step:
        fx = f(x)
        if fx == 0.0:
            _rescan(f, cfg.scan_start, x, cfg.scan_step / 4.0)
            return x
        if math.copysign(1.0, fx) != math.copysign(1.0, f_prev):
            root = _bisect(f, x_prev, x, f_prev, fx, cfg)
            _rescan(f, cfg.scan_start, x_prev, cfg.scan_step / 4.0)
            return root
        x_prev, f_prev = x, fx
        x += cfg.scan_step
    raise NoSignChange(
        f"no sign change in [{cfg.scan_start}, {cfg.scan_max}]")
