# -*- coding: utf-8 -*-


import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
import pytest

from rinorms.distributions import Uniform
from rinorms.norms import (Lp, Lorentz, Orlicz, LpSeq, Linf, TopM,
                           OrliczSeq, PFunctional, ri_eval, seq_eval,
                           seq_eval_rows, p_eval, p_prime_eval,
                           abel_expand, dilate_domain, from_literal,
                           to_literal, as_orlicz, theta_luxemburg)
from rinorms.orlicz import power, theta_top_m, exp_gauss
from rinorms.rearrange import QuantileFunction, disjunctify, tabulate

RI_SPECS = [Lp(1), Lp(2), Lp(3.5), Lorentz(2, 1), Lorentz(3, 2),
            Lorentz(2, 2), Orlicz(power(2)), Orlicz("power:3")]
SEQ_SPECS = [LpSeq(1), LpSeq(2), LpSeq(3.5), Linf(), TopM(1), TopM(3),
             OrliczSeq(power(3))]


def random_step(rng, length, pieces=8, scale=1.0):
    inner = np.sort(rng.uniform(0.0, length, size=pieces - 1))
    breakpoints = np.unique(np.concatenate([[0.0], inner, [length]]))
    values = scale * rng.exponential(size=breakpoints.shape[0] - 1)
    values = np.sort(values)[::-1]
    return QuantileFunction(breakpoints, values)


def two_uniforms():
    return tabulate(disjunctify([Uniform(1.0), Uniform(1.0)]))


def test_ri_eval_examples():
    f = QuantileFunction([0.0, 0.5, 1.0], [2.0, 1.0])
    assert_allclose(ri_eval(Lp(2), f), np.sqrt(2.5), rtol=1e-14)
    assert_allclose(ri_eval(Lp(2), f), 1.581139, atol=1e-6)

    c = QuantileFunction([0.0, 1.0], [3.0])
    assert_allclose(ri_eval(Orlicz(power(2)), c), 3.0, rtol=1e-9)


@pytest.mark.parametrize("M", RI_SPECS + [Orlicz(exp_gauss())])
def test_ri_normalization(M):
    one = QuantileFunction([0.0, 1.0], [1.0])
    assert_allclose(ri_eval(M, one), 1.0, rtol=1e-9)
    assert ri_eval(M, QuantileFunction([0.0, 1.0], [0.0])) == 0.0


def test_ri_affine_pieces():
    # f(t) = 1 - t/2
    f = QuantileFunction([0.0, 1.0], [1.0], [0.5])

    assert_allclose(ri_eval(Lp(1), f), 0.75, rtol=1e-14)
    assert_allclose(ri_eval(Lp(2.5), f),
                    ((1.0 - 0.5**3.5) / 1.75)**(1.0 / 2.5), rtol=1e-12)
    # (1/2) int t^{-1/2} (1 - t/2) dt
    assert_allclose(ri_eval(Lorentz(2, 1), f), 5.0 / 6.0, rtol=1e-12)
    assert_allclose(ri_eval(Orlicz(power(2)), f), ri_eval(Lp(2), f),
                    rtol=1e-9)


def test_ri_step_identities():
    rng = np.random.RandomState(42)

    for _ in range(20):
        f = random_step(rng, 1.0)
        t, v = f.breakpoints, f.left
        lorentz = np.sum(v * (np.sqrt(t[1:]) - np.sqrt(t[:-1])))

        assert_allclose(ri_eval(Lorentz(2, 1), f), lorentz, rtol=1e-12)
        assert_allclose(ri_eval(Lorentz(2, 2), f), ri_eval(Lp(2), f),
                        rtol=1e-12)
        assert_allclose(ri_eval(Orlicz(power(3)), f), ri_eval(Lp(3), f),
                        rtol=1e-9)


def test_ri_infinite_head():
    f = QuantileFunction([0.0, 0.5, 1.0], [np.inf, 1.0], [2.0, 1.0])

    with pytest.warns(UserWarning, match="diverges"):
        assert ri_eval(Lp(1), f) == np.inf


@pytest.mark.parametrize("M", RI_SPECS)
def test_ri_norm_axioms(M):
    rng = np.random.RandomState(5)

    for _ in range(10):
        f, g = random_step(rng, 1.0), random_step(rng, 1.0)
        nf, ng = ri_eval(M, f), ri_eval(M, g)
        assert_allclose(ri_eval(M, f.scale(2.5)), 2.5 * nf, rtol=1e-9)

        # f + g on the merged breakpoints is non-increasing
        t = np.union1d(f.breakpoints, g.breakpoints)
        fg = QuantileFunction(t, f(t[:-1]) + g(t[:-1]))
        assert ri_eval(M, fg) <= (nf + ng) * (1 + 1e-9)

        # Monotonicity, f <= f + g
        assert nf <= ri_eval(M, fg) * (1 + 1e-9)


def test_seq_eval_examples():
    assert seq_eval(TopM(2), [3.0, 1.0, 2.0]) == 5.0
    assert_allclose(seq_eval(OrliczSeq(theta_top_m(2)), [1.0, 1.0]), 1.0,
                    rtol=1e-9)
    assert seq_eval(Linf(), [-3.0, 2.0]) == 3.0
    assert seq_eval(LpSeq(2), []) == 0.0
    assert seq_eval(TopM(5), [1.0, 2.0]) == 3.0

    y = disjunctify([Uniform(1.0), Uniform(1.0)]).at_integers()
    assert_allclose(seq_eval(LpSeq(1), y), 0.5, atol=1e-9)


@pytest.mark.parametrize("N", SEQ_SPECS)
def test_seq_normalization(N):
    assert_allclose(seq_eval(N, [1.0, 0.0, 0.0]), 1.0, rtol=1e-9)
    assert seq_eval(N, [0.0, 0.0]) == 0.0


def test_top_m_identities():
    rng = np.random.RandomState(0)
    xs = rng.normal(size=(100, 17))

    assert_array_equal(seq_eval_rows(TopM(1), xs), seq_eval_rows(Linf(), xs))
    assert_array_equal(seq_eval_rows(TopM(17), xs),
                       seq_eval_rows(LpSeq(1), xs))


@pytest.mark.parametrize("N", SEQ_SPECS)
def test_seq_norm_axioms(N):
    rng = np.random.RandomState(3)
    x = rng.normal(size=(50, 12))
    y = rng.normal(size=(50, 12))

    nx, ny = seq_eval_rows(N, x), seq_eval_rows(N, y)
    assert_allclose(seq_eval_rows(N, -3.0 * x), 3.0 * nx, rtol=1e-9)
    assert np.all(seq_eval_rows(N, x + y) <= (nx + ny) * (1 + 1e-9))

    # Symmetry under permutation and sign changes
    perm = rng.permutation(12)
    assert_allclose(seq_eval_rows(N, -x[:, perm]), nx, rtol=1e-9)

    # Monotonicity in the magnitudes
    assert np.all(seq_eval_rows(N, 0.5 * np.abs(x)) <= nx)


def test_abel_expand():
    assert abel_expand(LpSeq(2), [3.0, 2.0, 1.0], [1.0, 1.0, 0.0]) == \
        (5.0, 5.0)
    assert abel_expand(Linf(), [2.0, -7.0, 1.0], [0.0, 1.0, 0.0]) == \
        (7.0, 7.0)
    assert abel_expand(TopM(2), [1.0] * 3, [1.0] * 3) == (3.0, 3.0)

    rng = np.random.RandomState(1)

    for _ in range(1000):
        n = rng.randint(1, 129)
        direct, expanded = abel_expand(LpSeq(1), rng.uniform(size=n),
                                       rng.uniform(size=n))
        assert_allclose(direct, expanded, rtol=1e-12)

    with pytest.raises(ValueError, match="differ in length"):
        abel_expand(LpSeq(1), [1.0, 2.0], [1.0])


def test_p_eval_examples():
    P = PFunctional(Lp(1), TopM(1), 2)
    assert_allclose(p_eval(P, two_uniforms()), 1.25, atol=1e-8)

    zero = QuantileFunction([0.0, 2.0], [0.0])
    assert p_eval(PFunctional(Lp(2), LpSeq(2), 2), zero) == 0.0

    one = QuantileFunction([0.0, 2.0], [1.0])
    assert_allclose(p_eval(PFunctional(Lp(1), Linf()), one), 2.0)


def test_p_prime_eval_examples():
    one = QuantileFunction([0.0, 2.0], [1.0])
    assert_allclose(p_prime_eval(PFunctional(Lp(1), Linf()), one), 2.0)

    P = PFunctional(Lp(1), TopM(2), 2)
    assert_allclose(p_prime_eval(P, two_uniforms()), 1.75, atol=1e-8)


def test_dilate_domain():
    f = QuantileFunction([0.0, 1.0], [1.0])

    assert dilate_domain(f, 1.0) == f
    assert dilate_domain(f, 100.0) == QuantileFunction([0.0, 100.0], [1.0])

    with pytest.raises(ValueError):
        dilate_domain(f, 0.0)

    with pytest.raises(ValueError):
        dilate_domain(f, -1.0)

    Y = two_uniforms()
    small = p_eval(PFunctional(Lp(1), TopM(2), 2), Y)
    large = p_eval(PFunctional(Lp(1), TopM(2), 200), dilate_domain(Y, 100.0))
    assert large <= 200.0 * small


PAIRS = [(M, N) for M in (Lp(1), Lp(2), Orlicz(power(2)))
         for N in (LpSeq(1), TopM(3), OrliczSeq(power(3)))]


@pytest.mark.parametrize("M, N", PAIRS)
def test_dilation_and_normed_variant(M, N):
    rng = np.random.RandomState(11)

    for _ in range(1000):
        n = rng.randint(1, 65)
        f = random_step(rng, float(n), pieces=rng.randint(1, 20),
                        scale=10.0**rng.uniform(-3, 3))
        P = PFunctional(M, N, n)
        p = p_eval(P, f)

        dilated = p_eval(PFunctional(M, N, 100 * n), dilate_domain(f, 100.0))
        assert dilated <= 200.0 * p * (1 + 1e-9)

        p_prime = p_prime_eval(P, f)
        assert p <= p_prime * (1 + 1e-9)
        assert p_prime <= 2.0 * p * (1 + 1e-9)


def test_theta_luxemburg():
    # Theta = x is the L1 norm over the whole domain
    f = QuantileFunction([0.0, 1.0, 3.0], [2.0, 1.0])
    assert_allclose(theta_luxemburg(power(1), f), 4.0, rtol=1e-9)
    assert_allclose(theta_luxemburg(power(2), f), np.sqrt(6.0), rtol=1e-9)


def test_literals():
    assert from_literal({"ri": "lp", "p": 1}) == Lp(1)
    assert from_literal({"ri": "lorentz", "p": 2, "q": 1}) == Lorentz(2, 1)
    assert from_literal({"ri": "orlicz", "phi": "power", "p": 3}) == \
        Orlicz(from_literal({"ri": "orlicz", "phi": "power:3"}).phi)
    assert from_literal({"seq": "top_m", "m": 4}) == TopM(4)
    assert from_literal({"seq": "linf"}) == Linf()
    assert from_literal({"seq": "lp", "p": 2}) == LpSeq(2)

    psi = from_literal({"seq": "orlicz", "psi": "exp_gauss", "m": 2}).psi
    assert psi.label == "exp_gauss:2"

    for spec in (Lp(2), Lorentz(2, 1), TopM(3), Linf(), LpSeq(1)):
        assert from_literal(to_literal(spec)) == spec

    assert Lp(1) != LpSeq(1)
    assert TopM(1) != LpSeq(1)

    with pytest.raises(ValueError):
        from_literal({"seq": "top_m", "m": 0})

    with pytest.raises(ValueError):
        from_literal({"ri": "weird"})


def test_as_orlicz():
    assert as_orlicz(Lp(2))(3.0) == 9.0
    assert as_orlicz(LpSeq(1))(3.0) == 3.0
    assert as_orlicz(TopM(2)) is None
    assert as_orlicz(Lorentz(2, 1)) is None
    assert as_orlicz(Linf()) is None
