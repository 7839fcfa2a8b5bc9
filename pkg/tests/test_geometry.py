import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shellspectra.geometry import InvalidGeometry, ShellGeometry


def test_from_gap_ratio_example():
    geom = ShellGeometry.from_gap_ratio(2.0)
    assert geom.sigma == pytest.approx(0.5)
    assert geom.r_inner == pytest.approx(1.0)
    assert geom.r_outer == pytest.approx(2.0)


def test_from_radius_ratio_example():
    geom = ShellGeometry.from_radius_ratio(1.0 / 3.0)
    assert geom.A == pytest.approx(1.0, rel=1e-14)
    assert geom.r_outer == 1.0


def test_from_radii_example():
    geom = ShellGeometry.from_radii(3.0, 4.0)
    assert geom.A == pytest.approx(6.0, rel=1e-14)
    assert geom.sigma == pytest.approx(0.75, rel=1e-14)


def test_punctured_ball_limit():
    geom = ShellGeometry.from_gap_ratio(0.0)
    assert geom.sigma == 0.0
    assert geom.r_inner == 0.0
    assert geom.gap == 1.0


@pytest.mark.parametrize("build", [
    lambda: ShellGeometry.from_radius_ratio(1.0),
    lambda: ShellGeometry.from_radius_ratio(-0.1),
    lambda: ShellGeometry.from_gap_ratio(-1.0),
    lambda: ShellGeometry.from_radii(4.0, 3.0),
    lambda: ShellGeometry.from_radii(-1.0, 3.0),
])
def test_invalid_inputs(build):
    with pytest.raises(InvalidGeometry):
        build()


@given(st.floats(min_value=1e-6, max_value=1e6))
@settings(max_examples=200)
def test_fields_mutually_consistent(A):
    geom = ShellGeometry.from_gap_ratio(A)
    assert 2 * geom.r_inner / (geom.r_outer - geom.r_inner) == pytest.approx(
        geom.A, rel=1e-14)
    assert geom.r_inner / geom.r_outer == pytest.approx(geom.sigma, rel=1e-14)
    assert geom.sigma == pytest.approx(A / (A + 2.0), rel=1e-14)


@given(st.floats(min_value=0.0, max_value=0.999))
@settings(max_examples=200)
def test_sigma_round_trip(sigma):
    geom = ShellGeometry.from_radius_ratio(sigma)
    back = ShellGeometry.from_gap_ratio(geom.A)
    assert back.sigma == pytest.approx(sigma, abs=1e-13)
