"""Composite Gauss-Legendre quadrature helpers shared by the profile
normalization and the kernel integrals."""

from __future__ import annotations

import math

import numpy as np

NODES_PER_PANEL = 16
PANELS_PER_UNIT = 4  # 64 nodes per unit length


def gauss_legendre(a: float, b: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the n-point rule on [a, b]."""
    x, w = np.polynomial.legendre.leggauss(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return mid + half * x, half * w


def composite_gauss(a: float, b: float,
                    nodes_per_panel: int = NODES_PER_PANEL,
                    panels: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Composite rule with 64 nodes per unit length by default."""
    if panels is None:
        panels = max(PANELS_PER_UNIT, math.ceil(PANELS_PER_UNIT * (b - a)))
    edges = np.linspace(a, b, panels + 1)
    xs, ws = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        x, w = gauss_legendre(lo, hi, nodes_per_panel)
        xs.append(x)
        ws.append(w)
    return np.concatenate(xs), np.concatenate(ws)
