import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trapmodes import (
    ConsistencyError,
    DipoleStrengths,
    ValidationError,
    analytic_dipoles,
    area,
    make_circle,
    make_ellipse,
    make_fourier,
    normal_and_tangent,
    read_fourier_file,
)

from goldens import EGG, GOLD


def test_circle_area_and_diameter():
    for r in (0.3, 1.0, 2.5):
        C = make_circle(r)
        assert area(C) == pytest.approx(math.pi * r * r, rel=1e-13)
        assert C.diameter() == pytest.approx(2.0 * math.sqrt(2.0) * r, rel=1e-3)


def test_ellipse_area_tilt_invariant():
    S0 = area(make_ellipse(1.5, 0.7, 0.0))
    for th in (0.0, 0.3, 1.2, -0.8):
        assert area(make_ellipse(1.5, 0.7, th)) == pytest.approx(S0, rel=1e-13)
    assert S0 == pytest.approx(math.pi * 1.5 * 0.7, rel=1e-13)


def test_egg_area_golden(egg):
    assert area(egg) == pytest.approx(GOLD["area_egg"], rel=1e-13)


def test_clockwise_input_is_reversed():
    # same circle traversed clockwise: sin_y coefficient negated
    C = make_fourier([1.0], [0.0], [0.0], [-1.0])
    assert C.reversed_input
    assert area(C) == pytest.approx(math.pi, rel=1e-13)
    # the reversed parameterization coincides with the stock circle
    t = np.array([0.0, 0.25 * math.pi, 2.0])
    for got, want in zip(C.point(t), make_circle(1.0).point(t)):
        assert np.allclose(got, want, atol=1e-15)


def test_rejects_degenerate_and_self_intersecting():
    with pytest.raises(ValidationError):
        make_fourier([0.0], [0.0], [0.0], [0.0])  # a point
    with pytest.raises(ValidationError):
        make_fourier([1.0], [0.0], [0.0], [0.0])  # a segment, zero area
    with pytest.raises(ValidationError):
        # figure-eight: y at double frequency
        make_fourier([1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 1.0])
    with pytest.raises(ValidationError):
        make_fourier([1.0], [0.0], [0.0], [1.0], n_samples=4)
    with pytest.raises(ValidationError):
        make_fourier([1.0, math.nan], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0])
    with pytest.raises(ValidationError):
        make_fourier([1.0], [0.0, 0.0], [0.0], [1.0])  # ragged lengths
    with pytest.raises(ValidationError):
        make_circle(-1.0)
    with pytest.raises(ValidationError):
        make_ellipse(1.0, 0.0)


def test_normal_is_inward_for_circle(unit_circle):
    t = np.linspace(0.0, 2.0 * math.pi, 7, endpoint=False)
    m, n_hat = normal_and_tangent(unit_circle, t)
    x, y = unit_circle.point(t)
    # inward normal of the unit circle is -(x, y)
    assert np.allclose(m[:, 0], -x, atol=1e-14)
    assert np.allclose(m[:, 1], -y, atol=1e-14)
    assert np.allclose(np.hypot(n_hat[:, 0], n_hat[:, 1]), 1.0, atol=1e-14)
    # n_hat is m normalized, so it is orthogonal to the velocity
    xd, yd = unit_circle.velocity(t)
    assert np.allclose(n_hat[:, 0] * xd + n_hat[:, 1] * yd, 0.0, atol=1e-14)


def test_read_fourier_file_roundtrip(tmp_path, egg):
    p = tmp_path / "egg.txt"
    lines = ["# cos_x sin_x cos_y sin_y"]
    for j in range(len(EGG["cos_x"])):
        lines.append(" ".join(str(EGG[key][j])
                              for key in ("cos_x", "sin_x", "cos_y", "sin_y")))
    p.write_text("\n".join(lines) + "\n")
    C = read_fourier_file(p)
    t = np.linspace(0.0, 2.0 * math.pi, 13)
    for got, want in zip(C.point(t), egg.point(t)):
        assert np.allclose(got, want, rtol=0, atol=0)


def test_read_fourier_file_errors(tmp_path):
    with pytest.raises(ValidationError):
        read_fourier_file(tmp_path / "missing.txt")
    bad = tmp_path / "bad.txt"
    bad.write_text("1.0 0.0 0.0\n")  # three columns
    with pytest.raises(ValidationError):
        read_fourier_file(bad)


def test_analytic_circle_golden():
    d = analytic_dipoles("circle", r=2.0)
    assert (d.mu, d.kappa, d.nu) == (4.0, 4.0, 0.0)
    assert d.S == pytest.approx(4.0 * math.pi, rel=1e-15)


def test_analytic_ellipse_closed_forms():
    # axis-aligned: mu = a0(a0+b0)/2, kappa = b0(a0+b0)/2; the flat-plate
    # limit b0 -> 0 then gives mu = a0^2/2 and kappa = 0 (edgewise flow)
    d0 = analytic_dipoles("ellipse", a0=2.0, b0=1.0, theta0=0.0)
    assert d0.mu == pytest.approx(0.5 * 2.0 * 3.0, rel=1e-15)
    assert d0.kappa == pytest.approx(0.5 * 1.0 * 3.0, rel=1e-15)
    assert d0.nu == 0.0
    assert d0.S == pytest.approx(2.0 * math.pi, rel=1e-15)
    # tilted by pi/4: nu = (a0^2 - b0^2) sin cos / 2 = 3/4
    d1 = analytic_dipoles("ellipse", a0=2.0, b0=1.0, theta0=math.pi / 4.0)
    assert d1.nu == pytest.approx(0.75, rel=1e-14)
    # mu + kappa is tilt-invariant
    assert d1.mu + d1.kappa == pytest.approx(d0.mu + d0.kappa, rel=1e-14)
    with pytest.raises(ValidationError):
        analytic_dipoles("triangle")


@given(c=st.floats(0.2, 4.0))
@settings(max_examples=40, deadline=None)
def test_area_scales_quadratically(c):
    base = area(make_ellipse(1.2, 0.8, 0.3))
    scaled = area(make_ellipse(1.2 * c, 0.8 * c, 0.3))
    assert scaled == pytest.approx(c * c * base, rel=1e-11)


@given(th=st.floats(-1.5, 1.5))
@settings(max_examples=40, deadline=None)
def test_ellipse_reflection_negates_nu(th):
    d_plus = analytic_dipoles("ellipse", a0=1.7, b0=0.6, theta0=th)
    d_minus = analytic_dipoles("ellipse", a0=1.7, b0=0.6, theta0=-th)
    assert d_plus.nu == pytest.approx(-d_minus.nu, abs=1e-14)
    assert d_plus.mu == pytest.approx(d_minus.mu, rel=1e-14)


def test_dipole_strengths_validation():
    with pytest.raises(ConsistencyError):
        DipoleStrengths(mu=1.0, kappa=1.0, nu=0.0, S=-1.0)
    with pytest.raises(ConsistencyError):
        DipoleStrengths(mu=-1.0, kappa=1.0, nu=0.0, S=1.0)
    with pytest.raises(ConsistencyError):
        # delta = S/(2 pi mu) must stay below 1
        DipoleStrengths(mu=0.1, kappa=0.1, nu=0.0, S=3.0)
    d = DipoleStrengths(mu=1.0, kappa=1.0, nu=0.0, S=math.pi)
    assert d.delta == pytest.approx(0.5, rel=1e-15)
