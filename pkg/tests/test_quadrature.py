import itertools
import math

import pytest

from galue.errors import NaNDetected, NonConvergence
from galue.identities import (lavoie_trottier_closed, lavoie_trottier_weight, oberhettinger_closed,
                              oberhettinger_integrand)
from galue.quadrature import QuadResult, integrate_half_line, integrate_unit_interval

from oracles import lt_quad_mp, ober_quad_mp


def test_unit_interval_examples():
    r = integrate_unit_interval(lambda x: x ** -0.5, 1e-10)
    assert isinstance(r, QuadResult)
    assert r.value == pytest.approx(2.0, rel=1e-10)
    assert r.evaluations > 0 and r.abs_error_estimate >= 0
    r = integrate_unit_interval(lambda x: (1 - x) * (1 - x / 3), 1e-12)
    assert r.value == pytest.approx(4 / 9, rel=1e-12)


def test_unit_interval_lavoie_trottier_integrand():
    # closed form (2/3) Gamma(0.5) Gamma(1.5) / Gamma(2) = pi/3; mpmath quad agrees
    expected = math.pi / 3
    assert float(lt_quad_mp(0.5, 1.5)) == pytest.approx(expected, rel=1e-15)
    r = integrate_unit_interval(lavoie_trottier_weight(0.5, 1.5), 1e-12)
    assert r.value == pytest.approx(expected, rel=1e-12)


def test_half_line_examples():
    r = integrate_half_line(lambda x: math.exp(-x), 1e-10)
    assert r.value == pytest.approx(1.0, rel=1e-10)
    assert float(ober_quad_mp(1, 3, 1)) == pytest.approx(0.125, rel=1e-15)
    assert float(ober_quad_mp(1, 3, 2)) == pytest.approx(0.03125, rel=1e-15)
    assert integrate_half_line(oberhettinger_integrand(1, 3, 1), 1e-10).value == pytest.approx(0.125, rel=1e-10)
    assert integrate_half_line(oberhettinger_integrand(1, 3, 2), 1e-10).value == pytest.approx(0.03125, rel=1e-10)


def test_strong_endpoint_singularities():
    assert integrate_unit_interval(lambda x: x ** -0.9, 1e-8).value == pytest.approx(10.0, rel=1e-8)
    assert integrate_half_line(lambda x: x ** -0.5 / (1 + x), 1e-10).value == pytest.approx(math.pi, rel=1e-10)


def test_nan_detected():
    with pytest.raises(NaNDetected):
        integrate_unit_interval(lambda x: math.nan, 1e-8)
    with pytest.raises(NaNDetected):
        integrate_half_line(lambda x: math.inf if x > 1 else 1.0, 1e-8)


def test_nonconvergence_carries_last_result():
    noisy = lambda x: (x * 1e8) % 1.0
    with pytest.raises(NonConvergence) as info:
        integrate_unit_interval(noisy, 1e-12)
    assert isinstance(info.value.result, QuadResult)
    assert info.value.result.abs_error_estimate > 1e-12 * abs(info.value.result.value)


def test_bad_tolerance():
    with pytest.raises(ValueError):
        integrate_unit_interval(lambda x: 1.0, 0.0)


@pytest.mark.parametrize("c", [2.0, -3.0, 0.5])
def test_linearity(c):
    f = lavoie_trottier_weight(0.5, 1.0)
    g = oberhettinger_integrand(1.5, 3.0, 0.5)
    base_u = integrate_unit_interval(f, 1e-12).value
    base_h = integrate_half_line(g, 1e-12).value
    assert integrate_unit_interval(lambda x: c * f(x), 1e-12).value == pytest.approx(c * base_u, rel=1e-13)
    assert integrate_half_line(lambda x: c * g(x), 1e-12).value == pytest.approx(c * base_h, rel=1e-13)


def test_halving_tol_never_increases_error():
    problems = [(integrate_half_line, oberhettinger_integrand(mu, lam, a), oberhettinger_closed(mu, lam, a).value())
                for mu, lam, a in itertools.product((0.5, 1.5), (2, 4.5), (0.5, 2))]
    problems += [(integrate_unit_interval, lavoie_trottier_weight(al, be), lavoie_trottier_closed(al, be).value())
                 for al, be in itertools.product((0.5, 2.5), (0.5, 2.5))]
    for integrate, f, exact in problems:
        # differences below a few ulps of the exact value are round-off, not error
        floor = 4 * math.ulp(exact)
        tol = 1e-3
        err = abs(integrate(f, tol).value - exact)
        while tol > 1e-13:
            tol /= 2
            new = abs(integrate(f, tol).value - exact)
            assert new <= max(err, floor)
            err = new


def test_oberhettinger_grid_27_points():
    for mu, lam, a in itertools.product((0.5, 1.0, 1.5), (2.0, 3.0, 4.5), (0.5, 1.0, 2.0)):
        r = integrate_half_line(oberhettinger_integrand(mu, lam, a), 1e-10)
        assert r.value == pytest.approx(oberhettinger_closed(mu, lam, a).value(), rel=1e-8)


def test_lavoie_trottier_grid_9_points():
    for al, be in itertools.product((0.5, 1.0, 2.5), repeat=2):
        r = integrate_unit_interval(lavoie_trottier_weight(al, be), 1e-12)
        assert r.value == pytest.approx(lavoie_trottier_closed(al, be).value(), rel=1e-10)
