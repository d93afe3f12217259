# -*- coding: utf-8 -*-

"""Tests for the analytic distribution models"""

import math

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
import pytest

from rinorms.distributions import (Distribution, Gaussian, Exponential,
                                   Uniform, TwoPoint, ScaledAbsBase,
                                   survival, quantile, sample, normalized,
                                   draw_matrix, rng_stream,
                                   from_literal, to_literal)


def normal_cdf(x):
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def bisect(f, lo, hi, tol=1e-14):
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


ALL_KINDS = [Gaussian(1.0), Gaussian(2.5), Exponential(1.0),
             Exponential(0.3), Uniform(1.0), Uniform(4.0),
             TwoPoint(3.0, 0.2), TwoPoint(1.0, 1.0),
             ScaledAbsBase(0.7, Gaussian(1.0)),
             ScaledAbsBase(-2.0, Uniform(1.0))]

CONTINUOUS_KINDS = [Gaussian(1.0), Exponential(2.0), Uniform(3.0),
                    ScaledAbsBase(0.5, Exponential(1.0))]


def test_survival_examples():
    assert survival(Gaussian(1.0), 0.0) == 1.0
    assert_allclose(survival(Exponential(1.0), 1.0), math.exp(-1.0),
                    rtol=1e-15)
    assert survival(ScaledAbsBase(2.0, Uniform(1.0)), 1.0) == 0.5


def test_quantile_examples():
    assert_allclose(quantile(Uniform(1.0), 0.25), 0.75, rtol=1e-15)

    # Independent bisection on 2 (1 - Phi(t)) = 0.5
    expected = bisect(lambda t: 2.0 * (1.0 - normal_cdf(t)) - 0.5,
                      0.0, 10.0)
    assert_allclose(quantile(Gaussian(1.0), 0.5), expected, atol=1e-12)
    assert_allclose(expected, 0.674490, atol=1e-6)

    assert quantile(TwoPoint(3.0, 0.2), 0.1) == 3.0
    assert quantile(TwoPoint(3.0, 0.2), 0.3) == 0.0

    with pytest.raises(ValueError):
        quantile(Uniform(1.0), 0.0)


def test_generic_numeric_quantile():
    """ Bisection fallback agrees with the closed forms """
    u = np.linspace(1e-6, 1.0 - 1e-6, 101)

    for dist in CONTINUOUS_KINDS:
        numeric = Distribution.quantile(dist, u)
        assert_allclose(numeric, dist.quantile(u), atol=1e-11)


@pytest.mark.parametrize("dist", ALL_KINDS)
def test_galois_connection(dist):
    u = np.linspace(0.0, 1.0, 1002)[1:-1]
    assert np.all(dist.survival(dist.quantile(u)) <= u + 1e-12)

    t = np.linspace(0.0, 10.0, 1000)
    s = dist.survival(t)
    positive = s > 0
    assert np.all(dist.quantile(s[positive]) <= t[positive] + 1e-12)


@pytest.mark.parametrize("dist", ALL_KINDS)
def test_survival_shape(dist):
    t = np.linspace(0.0, 50.0, 2001)
    s = dist.survival(t)

    assert np.all(np.diff(s) <= 0)
    assert np.all((s >= 0) & (s <= 1))
    assert dist.survival(-1.0) == 1.0
    assert dist.survival(1e6) < 1e-12
    assert np.all(dist.survival_left(t) >= s)


@pytest.mark.parametrize("dist", CONTINUOUS_KINDS)
def test_kolmogorov_smirnov(dist):
    draws = np.sort(sample(dist, rng_stream(42), 100000))
    n = draws.shape[0]

    # Empirical cdf of |X| against 1 - S on both sides of each jump
    cdf = 1.0 - dist.survival(draws)
    upper = np.arange(1, n + 1) / n - cdf
    lower = cdf - np.arange(0, n) / n

    assert max(upper.max(), lower.max()) < 0.01


def test_sample_examples():
    assert_array_equal(sample(TwoPoint(1.0, 1.0), rng_stream(1), 4),
                       np.ones(4))

    draws = sample(Uniform(1.0), rng_stream(7), 100000)
    assert abs(draws.mean() - 0.5) < 3.0 / math.sqrt(12 * 100000)

    zero = ScaledAbsBase(0.0, Gaussian(1.0))
    assert_array_equal(sample(zero, rng_stream(3), 3), np.zeros(3))

    with pytest.raises(ValueError):
        sample(Uniform(1.0), rng_stream(3), 0)


def test_sample_reproducible():
    d = Gaussian(1.0)
    assert_array_equal(sample(d, rng_stream(5, 1), 100),
                       sample(d, rng_stream(5, 1), 100))
    assert not np.array_equal(sample(d, rng_stream(5, 1), 100),
                              sample(d, rng_stream(5, 2), 100))


def test_scaled_survival_exact():
    base = Gaussian(1.3)
    t = np.linspace(0.0, 10.0, 257)

    for a in (0.1, 1.0, 3.7):
        assert_array_equal(ScaledAbsBase(a, base).survival(t),
                           base.survival(t / a))


def test_means_and_normalization():
    assert_allclose(Gaussian(2.0).mean(), 2.0 * math.sqrt(2.0 / math.pi))
    assert Exponential(4.0).mean() == 0.25
    assert Uniform(3.0).mean() == 1.5
    assert TwoPoint(2.0, 0.25).mean() == 0.5

    for dist in ALL_KINDS:
        assert_allclose(normalized(dist).mean(), 1.0, rtol=1e-15)

    with pytest.raises(ValueError):
        normalized(ScaledAbsBase(0.0, Uniform(1.0)))


def test_atoms_and_breaks():
    assert TwoPoint(3.0, 0.2).atoms() == (3.0, 0.0)
    assert TwoPoint(3.0, 1.0).atoms() == (3.0,)
    assert TwoPoint(3.0, 0.2).quantile_breaks() == (0.2,)
    assert ScaledAbsBase(2.0, TwoPoint(3.0, 0.2)).atoms() == (6.0, 0.0)
    assert ScaledAbsBase(0.0, Gaussian(1.0)).atoms() == (0.0,)
    assert Gaussian(1.0).atoms() == ()


def test_equality_respects_kind():
    assert Gaussian(1.0) != Exponential(1.0)
    assert Gaussian(1.0) == Gaussian(1.0)
    assert len({Gaussian(1.0), Exponential(1.0), Gaussian(1.0)}) == 2


def test_invalid_parameters():
    with pytest.raises(ValueError):
        Gaussian(0.0)

    with pytest.raises(ValueError):
        TwoPoint(1.0, 0.0)

    with pytest.raises(TypeError):
        ScaledAbsBase(1.0, 3.0)


def test_draw_matrix():
    dists = [Uniform(1.0), TwoPoint(2.0, 1.0), Exponential(1.0)]
    draws = draw_matrix(dists, rng_stream(11), 5)

    assert draws.shape == (5, 3)
    assert_array_equal(draws[:, 1], 2.0)

    # One uniform per entry, row major
    u = 1.0 - rng_stream(11).random((5, 3))
    assert_array_equal(draws[:, 0], 1.0 - u[:, 0])
    assert_allclose(draws[:, 2], -np.log(u[:, 2]))

    with pytest.raises(ValueError):
        draw_matrix([], rng_stream(1), 5)


def test_literals():
    literal = {"kind": "scaled", "a": 0.7,
               "base": {"kind": "gaussian", "sigma": 1.0}}

    dist = from_literal(literal)
    assert dist == ScaledAbsBase(0.7, Gaussian(1.0))
    assert to_literal(dist) == literal

    assert from_literal({"kind": "two_point", "v": 1.0, "p": 0.5}) == \
        TwoPoint(1.0, 0.5)
    assert from_literal({"kind": "exponential", "rate": 1.0}) == \
        Exponential(1.0)
    assert from_literal({"kind": "uniform", "b": 1.0}) == Uniform(1.0)

    with pytest.raises(ValueError, match="Unknown distribution kind"):
        from_literal({"kind": "cauchy"})

    with pytest.raises(ValueError, match="no 'kind'"):
        from_literal({"sigma": 1.0})
