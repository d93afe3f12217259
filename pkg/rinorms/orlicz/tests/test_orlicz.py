# -*- coding: utf-8 -*-


import math

import numpy as np
from numpy.testing import assert_allclose
import pytest

from rinorms.distributions import (Gaussian, Exponential, TwoPoint,
                                   Uniform, ScaledAbsBase)
from rinorms.norms import (Lp, Orlicz, LpSeq, OrliczSeq, TopM, Linf,
                           PFunctional, p_eval, seq_eval, theta_luxemburg)
from rinorms.orlicz import (OrliczFunction, power, exp_gauss, theta_top_m,
                            make_theta, orlicz_from_name, tilde,
                            make_lambda, lambda_function, lambda_norm,
                            theta_for, gaussian_lambda_equiv,
                            gaussian_lambda_closed, exp_gauss_seq_norm,
                            gauss_rhs_closed)
from rinorms.rearrange import QuantileFunction, disjunctify, tabulate


def normal_sf(x):
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def test_named_functions():
    assert power(2)(3.0) == 9.0
    assert power(2).label == "power:2"
    assert theta_top_m(1)(1.0) == 0.0
    assert theta_top_m(1)(2.0) == 1.0
    assert theta_top_m(2)(1.0) == 0.5
    assert theta_top_m(4)(0.25) == 0.0
    assert exp_gauss()(0.0) == 0.0
    assert exp_gauss()(1.0) == 1.0
    assert_allclose(exp_gauss(1)(1.0), np.exp(-1.0))

    for f in (power(1), power(2.5), theta_top_m(3), exp_gauss(),
              exp_gauss(2)):
        assert f.validate() is f

    with pytest.raises(ValueError, match="claimed convex"):
        OrliczFunction(np.sqrt, "sqrt", True).validate()

    with pytest.raises(ValueError, match="vanish"):
        OrliczFunction(lambda x: x + 1.0, "shifted", False).validate()


def test_orlicz_from_name():
    assert orlicz_from_name("power:2") == power(2)
    assert orlicz_from_name("theta_top_m:4") == theta_top_m(4)
    assert orlicz_from_name("exp_gauss") == exp_gauss()

    theta = orlicz_from_name("spliced:power:2,power:1")
    assert theta(0.5) == 0.5
    assert theta(2.0) == 4.0

    with pytest.raises(ValueError, match="Unknown"):
        orlicz_from_name("cosh")

    with pytest.raises(ValueError, match="Φ\\(1\\)=Ψ\\(1\\)=1 required"):
        orlicz_from_name("spliced:power:2,theta_top_m:2")


def test_make_theta():
    theta = make_theta(power(1), power(1))
    x = np.linspace(0.0, 5.0, 11)
    assert_allclose(theta(x), x)

    theta = make_theta(power(2), power(1))
    assert theta(0.5) == 0.5
    assert theta(2.0) == 4.0
    assert theta(1.0) == 1.0
    assert not theta.is_convex_claimed

    with pytest.raises(ValueError, match="required"):
        make_theta(theta_top_m(2), power(1))


def test_tilde():
    x = np.array([0.0, 0.5, 1.0, 2.0, 7.0])

    assert_allclose(tilde(power(1))(x), x, rtol=1e-8)
    assert_allclose(tilde(power(2))(x), x**2 / 2.0, rtol=1e-8)

    theta = make_theta(power(3), power(1.5))
    grid = np.linspace(0.01, 10.0, 50)
    t = tilde(theta)

    assert t.is_convex_claimed
    assert np.all(t(grid) <= theta(grid) * (1 + 1e-8))
    assert np.all(theta(grid) <= t(2.0 * grid) * (1 + 1e-8))

    # sqrt(x)/x decreases
    with pytest.raises(ValueError, match="non-decreasing"):
        tilde(OrliczFunction(np.sqrt, "sqrt", False))


def test_make_lambda_examples():
    assert make_lambda(theta_top_m(1), Gaussian(1.0), 0.0) == 0.0

    expected = math.sqrt(2.0 / math.pi) * (
        math.exp(-0.5) - math.sqrt(2.0 * math.pi) * normal_sf(1.0))
    value = make_lambda(theta_top_m(1), Gaussian(1.0), 1.0)
    assert_allclose(value, expected, rtol=1e-6)
    assert_allclose(value, 0.16663, atol=1e-5)

    for m in (1, 2, 4):
        for x in (0.1, 0.5, 1.0, 3.0):
            assert_allclose(make_lambda(theta_top_m(m), TwoPoint(1.0, 1.0),
                                        x),
                            max(x - 1.0 / m, 0.0), atol=1e-14)

    with pytest.raises(ValueError):
        make_lambda(theta_top_m(1), Gaussian(1.0), -1.0)


def test_make_lambda_atoms():
    # E Theta(x xi) = p Theta(x v)
    xi = TwoPoint(2.0, 0.3)
    assert_allclose(make_lambda(power(2), xi, 1.5), 0.3 * 9.0, rtol=1e-10)


@pytest.mark.parametrize("xi, second_moment", [
    (Gaussian(1.0), 1.0),
    (Gaussian(3.0), 9.0),
    (Exponential(1.0), 2.0),
    (Exponential(0.5), 8.0),
    (Uniform(2.0), 4.0 / 3.0),
])
def test_make_lambda_head_is_negligible(xi, second_moment):
    # Theta = x^2 gives x^2 E xi^2
    for x in (0.01, 1.0, 50.0):
        assert_allclose(make_lambda(power(2), xi, x),
                        x**2 * second_moment, rtol=1e-6)


def test_make_lambda_monotone():
    xi = ScaledAbsBase(0.5, Gaussian(1.0))
    theta = make_theta(power(2), power(1))
    x = np.linspace(0.0, 6.0, 25)
    values = np.array([make_lambda(theta, xi, v) for v in x])

    assert values[0] == 0.0
    assert np.all(np.diff(values) >= 0)
    ratio = values[1:] / x[1:]
    assert np.all(np.diff(ratio) >= -1e-6 * ratio[1:])


def test_gaussian_lambda_closed_form():
    assert_allclose(gaussian_lambda_closed(1, 1.0), 0.16663, atol=1e-5)
    assert gaussian_lambda_closed(3, 0.0) == 0.0

    for m in (1, 2, 8):
        for x in np.geomspace(0.5 / m, 100.0, 12):
            assert_allclose(make_lambda(theta_top_m(m), Gaussian(1.0), x),
                            gaussian_lambda_closed(m, x), rtol=1e-5)


def test_gaussian_lambda_equiv():
    assert_allclose(gaussian_lambda_equiv(1, 1.0), np.exp(-1.0))
    assert_allclose(gaussian_lambda_equiv(1, 100.0) / 100.0, 0.9999,
                    atol=1e-8)

    with pytest.raises(ValueError):
        gaussian_lambda_equiv(1, 0.0)

    # c1 E(x) <= Lambda(x) <= c2 E(c3 x)
    c1, c2, c3 = 0.1, 1.0, np.sqrt(2.0)

    for m in (1, 2, 8):
        x = np.geomspace(1e-2 / m, 1e2, 200)
        lam = gaussian_lambda_closed(m, x)

        assert np.all(c1 * gaussian_lambda_equiv(m, x) <= lam)
        assert np.all(lam <= c2 * gaussian_lambda_equiv(m, c3 * x))


def test_lambda_function_matches_adaptive():
    for theta, xi in [(theta_top_m(4), Gaussian(1.0)),
                      (make_theta(power(2), power(1)), Uniform(2.0)),
                      (power(2), TwoPoint(1.0, 0.25))]:
        lam = lambda_function(theta, xi)
        x = np.array([0.0, 0.3, 1.0, 2.5])
        expected = [make_lambda(theta, xi, v) for v in x]
        assert_allclose(lam(x), expected, rtol=2e-3, atol=1e-12)


def test_lambda_norm_deterministic_xi():
    # xi = 1 makes Lambda = Theta
    theta = theta_for(Lp(2), LpSeq(1))
    lam = lambda_function(theta, TwoPoint(1.0, 1.0))
    a = np.array([3.0, 1.0, 0.5, 0.25])
    f = QuantileFunction(np.arange(5.0), a)

    assert_allclose(lambda_norm(a, lam), theta_luxemburg(theta, f),
                    rtol=1e-8)
    assert lambda_norm([], lam) == 0.0


def test_lambda_norm_equals_theta_norm_of_y():
    # int Theta(Y/l) = sum_i E Theta(a_i xi_i / l)
    theta = theta_top_m(2)
    a = np.array([1.0, 0.7, 0.3, 0.1])
    Y = tabulate(disjunctify([ScaledAbsBase(v, Uniform(1.0)) for v in a]))
    lam = lambda_function(theta, Uniform(1.0))

    assert_allclose(lambda_norm(a, lam), theta_luxemburg(theta, Y),
                    rtol=1e-3)


def test_theta_top_m_window():
    rng = np.random.RandomState(9)

    for m in (1, 2, 4, 8):
        psi = theta_top_m(m)

        for _ in range(50):
            x = rng.exponential(size=rng.randint(1, 40))
            ratio = seq_eval(OrliczSeq(psi), x) / seq_eval(TopM(m), x)
            assert 0.5 * (1 - 1e-9) <= ratio <= 1.0 + 1e-9


ORLICZ_PAIRS = [(M, N) for M in (Lp(1), Lp(2), Orlicz(power(2)))
               for N in (LpSeq(1), LpSeq(2), OrliczSeq(power(3)))]


@pytest.mark.parametrize("M, N", ORLICZ_PAIRS)
def test_splice_constants(M, N):
    theta = theta_for(M, N)
    rng = np.random.RandomState(17)

    for _ in range(1000):
        n = rng.randint(1, 65)
        pieces = rng.randint(1, 20)
        inner = np.sort(rng.uniform(0.0, n, size=pieces - 1))
        t = np.unique(np.concatenate([[0.0], inner, [float(n)]]))
        v = np.sort(rng.exponential(size=t.shape[0] - 1) *
                    10.0**rng.uniform(-3, 3))[::-1]
        f = QuantileFunction(t, v)

        p = p_eval(PFunctional(M, N, n), f)
        lux = theta_luxemburg(theta, f)

        assert p <= 4.0 * lux * (1 + 1e-9)
        assert lux <= 3.0 * p * (1 + 1e-9)


def test_theta_for_requires_orlicz_norms():
    with pytest.raises(ValueError, match="not both Orlicz"):
        theta_for(Lp(1), TopM(2))

    with pytest.raises(ValueError, match="not both Orlicz"):
        theta_for(Lp(1), Linf())


def test_exp_gauss_seq_norm():
    i = np.arange(1, 65)
    b = 1.0 / np.sqrt(1.0 + np.log(i))
    lux, sup = exp_gauss_seq_norm(b)

    assert_allclose(sup, 1.0)
    assert lux <= 2.0

    lux, sup = exp_gauss_seq_norm([1.0, 0.0, 0.0])
    assert sup == 1.0
    assert_allclose(lux, 1.0, rtol=1e-9)

    rng = np.random.RandomState(23)

    for _ in range(100):
        b = np.sort(rng.exponential(size=rng.randint(1, 200)))[::-1]
        _, sup = exp_gauss_seq_norm(b)
        lux, _ = exp_gauss_seq_norm(b / sup)
        assert lux <= 2.0

        lux, _ = exp_gauss_seq_norm(b)
        _, sup = exp_gauss_seq_norm(b / lux)
        assert sup <= 1.0 + 1e-12


def test_gauss_rhs_closed():
    assert gauss_rhs_closed([1.0, 0.0, 0.0, 0.0], 1) == 2.0
    assert gauss_rhs_closed([1.0] * 4, 4) == 8.0
    assert_allclose(gauss_rhs_closed([1.0] * 16, 1),
                    1.0 + np.sqrt(1.0 + np.log(16.0)))
    assert_allclose(gauss_rhs_closed([1.0] * 16, 1), 2.94226, atol=1e-4)

    with pytest.raises(ValueError):
        gauss_rhs_closed([1.0, 1.0], 3)

    with pytest.raises(ValueError):
        gauss_rhs_closed([1.0, 1.0], 0)
