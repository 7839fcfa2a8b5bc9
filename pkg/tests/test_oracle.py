import math

import numpy as np
import pytest

from shellspectra.eigenfun import laplace_profile, stokes_profile
from shellspectra.geometry import ShellGeometry
from shellspectra.oracle import (IllConditioned, RadialProblem,
                                 radial_eigenvalue, rayleigh_quotient)
from shellspectra.spectra import laplace_first, stokes_first


class TestRadialEigenvalue:
    def test_spherically_symmetric_mode_is_pi_squared(self):
        geom = ShellGeometry.from_gap_ratio(2.0)
        lam = radial_eigenvalue(RadialProblem(geom, l=0, n_grid=2000))
        assert lam == pytest.approx(math.pi ** 2, rel=1e-6)

    def test_degree_one_mode_matches_root_find(self):
        geom = ShellGeometry.from_gap_ratio(2.0)
        lam = radial_eigenvalue(RadialProblem(geom, l=1, n_grid=4000))
        kappa = stokes_first(geom).kappa
        assert lam == pytest.approx(kappa ** 2, rel=1e-5)

    def test_degree_one_small_gap_close_to_pi_squared(self):
        geom = ShellGeometry.from_gap_ratio(200.0)
        lam = radial_eigenvalue(RadialProblem(geom, l=1, n_grid=2000))
        assert abs(lam - math.pi ** 2) / math.pi ** 2 < 2e-4

    def test_second_order_convergence(self):
        geom = ShellGeometry.from_gap_ratio(1.0)
        exact = stokes_first(geom).kappa ** 2
        err_coarse = abs(radial_eigenvalue(RadialProblem(geom, 1, 500)) - exact)
        err_fine = abs(radial_eigenvalue(RadialProblem(geom, 1, 1000)) - exact)
        ratio = err_coarse / err_fine
        assert 3.2 < ratio < 4.8

    def test_discrete_value_below_continuum(self):
        # Dirichlet finite differences approach the eigenvalue from below
        geom = ShellGeometry.from_gap_ratio(3.0)
        exact = stokes_first(geom).kappa ** 2
        for n in (256, 512, 1024):
            assert radial_eigenvalue(RadialProblem(geom, 1, n)) < exact

    def test_degree_one_dominates_degree_zero(self):
        geom = ShellGeometry.from_gap_ratio(0.7)
        lam0 = radial_eigenvalue(RadialProblem(geom, 0, 1000))
        lam1 = radial_eigenvalue(RadialProblem(geom, 1, 1000))
        assert lam1 > lam0


class TestRayleighQuotient:
    def test_laplace_profile_reproduces_pi_squared(self):
        geom = ShellGeometry.from_gap_ratio(2.0)
        p = laplace_profile(geom, 4001)
        assert rayleigh_quotient(p.r, p.values, 0) == pytest.approx(
            math.pi ** 2, rel=1e-5)

    def test_stokes_profile_reproduces_eigenvalue(self):
        geom = ShellGeometry.from_gap_ratio(1.0)
        p = stokes_profile(geom, 4001)
        exact = stokes_first(geom).eigenvalue
        assert rayleigh_quotient(p.r, p.values, 1) == pytest.approx(exact, rel=1e-5)

    def test_trial_function_dominates_eigenvalue(self):
        geom = ShellGeometry.from_gap_ratio(10.0)
        r = np.linspace(geom.r_inner, geom.r_outer, 3001)
        trial = np.sin(math.pi * (r - geom.r_inner))
        exact = stokes_first(geom).eigenvalue
        assert rayleigh_quotient(r, trial, 1) >= exact


class TestValidation:
    def test_invalid_l(self):
        geom = ShellGeometry.from_gap_ratio(1.0)
        with pytest.raises(ValueError):
            RadialProblem(geom, l=2, n_grid=100)

    def test_grid_too_small(self):
        geom = ShellGeometry.from_gap_ratio(1.0)
        with pytest.raises(ValueError):
            RadialProblem(geom, l=0, n_grid=10)

    def test_grid_too_large(self):
        geom = ShellGeometry.from_gap_ratio(1.0)
        with pytest.raises(IllConditioned):
            radial_eigenvalue(RadialProblem(geom, l=0, n_grid=2_000_000))

    def test_punctured_ball_rejected(self):
        geom = ShellGeometry.from_gap_ratio(0.0)
        with pytest.raises(ValueError):
            radial_eigenvalue(RadialProblem(geom, l=1, n_grid=100))


def test_laplace_and_oracle_agree_on_varied_geometries():
    for A in (0.1, 1.0, 10.0):
        geom = ShellGeometry.from_gap_ratio(A)
        lam = radial_eigenvalue(RadialProblem(geom, l=0, n_grid=2000))
        assert lam == pytest.approx(laplace_first(geom).eigenvalue, rel=1e-6)
