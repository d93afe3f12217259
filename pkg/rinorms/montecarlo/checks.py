# -*- coding: utf-8 -*-


from collections import Counter
import logging

import numpy as np

from rinorms.constants import (TAIL_PROBABILITY, TAIL_RESOLUTION,
                               TAIL_THRESHOLD)
from rinorms.distributions import draw_matrix, rng_stream
from rinorms.distributions import to_literal as dist_literal
from rinorms.montecarlo.estimate import (_check_dists, _check_specs,
                                         batch_map, fold_batches,
                                         maximal_sums, sample_norms)
from rinorms.montecarlo.report import InsufficientSamplesError, Report
from rinorms.norms import (Lp, PFunctional, TopM, p_eval, ri_eval,
                           seq_eval)
from rinorms.norms import to_literal as spec_literal
from rinorms.norms.kernels import exceedance_counts
from rinorms.rearrange import (at_integers, disjunctify,
                               empirical_quantile, integral,
                               restrict_unit, tabulate)

log = logging.getLogger(__name__)

# Slack on the analytic inequalities
_SANDWICH_ATOL = 1e-12


def describe_dists(dists):
    """ Compact literal of a family, repeated members counted """
    return [dict(dist_literal(d), count=c)
            for d, c in Counter(dists).items()]


def report_inputs(dists, cfg=None, **kwargs):
    """ JSON-ready description of the inputs of a check """
    inputs = {"n": len(dists), "dists": describe_dists(dists)}

    for k, v in kwargs.items():
        inputs[k] = spec_literal(v) if hasattr(v, "as_orlicz") else v

    if cfg is not None:
        inputs["mc"] = cfg._asdict()

    return inputs


def max_sandwich_check(dists, t_grid):
    """
    Checks :math:`\\frac{1}{2}\\min(1, \\sum_i S_i(t)) \\le
    1 - \\prod_i (1 - S_i(t)) \\le \\min(1, \\sum_i S_i(t))`
    analytically on every point of ``t_grid``.

    Parameters
    ----------
    dists : list of :class:`~rinorms.distributions.Distribution`
        Laws of :math:`|X_i|`
    t_grid : :class:`numpy.ndarray`
        Non-empty grid of thresholds

    Returns
    -------
    :class:`~rinorms.montecarlo.report.Report`
        ``lhs`` holds :math:`P(\\max_i |X_i| > t)` and ``rhs`` the
        upper bound on the grid. ``details`` lists the lower bound
        and both margins.
    """
    dists = _check_dists(dists)
    t = np.atleast_1d(np.asarray(t_grid, dtype=np.float64))

    if t.size == 0:
        raise ValueError("t_grid is empty")

    total = np.zeros_like(t)
    log_none = np.zeros_like(t)

    for d, c in Counter(dists).items():
        s = np.broadcast_to(d.survival(t), t.shape)
        total += c * s

        # Certain exceedance contributes -inf
        with np.errstate(divide="ignore"):
            log_none += c * np.log1p(-s)

    value = -np.expm1(log_none)
    upper = np.minimum(1.0, total)
    lower = 0.5 * upper

    lower_margin = value - lower
    upper_margin = upper - value
    violations = int(np.sum((lower_margin < -_SANDWICH_ATOL) |
                            (upper_margin < -_SANDWICH_ATOL)))

    safe = np.where(upper > 0, upper, 1.0)
    ratio = np.where(upper > 0, value / safe, 1.0)

    return Report("max_sandwich", report_inputs(dists),
                  value, upper, ratio, 0.0, violations == 0,
                  {"t": t, "lower": lower,
                   "lower_margin": lower_margin,
                   "upper_margin": upper_margin,
                   "violations": violations})


def selector_batch(dists, m, samples, seed, batch):
    """
    Mean of :math:`\\max_i I_i |X_i|` over one batch, with
    selectors :math:`I_i` drawn after the magnitudes
    """
    stream = rng_stream(seed, batch)
    xs = draw_matrix(dists, stream, samples)
    selected = stream.random(xs.shape) < 1.0 / m

    return float(np.mean(np.where(selected, xs, 0.0).max(axis=1)))


def selector_experiment(dists, m, cfg, mapper=batch_map):
    """
    Estimates :math:`E\\|(I_i X_i)\\|_\\infty` with independent
    selectors :math:`P(I_i = 1) = 1/m` and compares it with
    :math:`\\frac{1}{m}(\\int_0^1 Y + \\|(Y(i))\\|_{k_m})`.

    The middle term :math:`\\frac{1}{m}\\int_0^m Y` of the
    comparison chain is recorded in ``details``.
    """
    dists = _check_dists(dists)

    if int(m) != m or m < 1:
        raise ValueError("m %s must be an integer >= 1" % m)

    m = int(m)
    D = disjunctify(dists)

    estimate = fold_batches(mapper(selector_batch, cfg.batches, dists, m,
                                   cfg.samples_per_batch, cfg.seed))

    rhs = (integral(D, 0.0, 1.0) +
           seq_eval(TopM(m), at_integers(D))) / m
    middle = integral(D, 0.0, float(min(m, D.n))) / m

    return Report("selector", report_inputs(dists, cfg, m=m),
                  estimate.value, rhs, estimate.value / rhs,
                  estimate.stderr, None,
                  {"middle": middle,
                   "middle_ratio": estimate.value / middle})


def tail_level(p):
    """ :math:`e^{-p}/4` """
    return np.exp(-p) / 4.0


def hj_batch(dists, N, p, alpha, samples, seed, batch):
    """ :math:`(\\|U\\|_p, U^\\#(\\alpha))` of one batch """
    xs = draw_matrix(dists, rng_stream(seed, batch), samples)
    U = maximal_sums(N, xs).U
    order = np.sort(U)[::-1][int(np.ceil(alpha * samples)) - 1]

    return ri_eval(Lp(p), empirical_quantile(U)), float(order)


def hj_moment_check(dists, N, p, cfg, mapper=batch_map):
    """
    Compares :math:`\\|U\\|_p` with :math:`U^\\#(e^{-p}/4) + \\|V\\|_p`,
    where :math:`U` is the maximal partial sum of the disjoint
    vectors :math:`X_i e_i` and :math:`V = Y|_{[0,1]}`.

    The order statistic :math:`U^\\#(\\alpha)` is the
    :math:`\\lceil \\alpha s \\rceil`-th largest of the :math:`s`
    samples of a batch.

    Raises
    ------
    InsufficientSamplesError
        If a batch holds fewer than :math:`10/\\alpha` samples.
    """
    dists = _check_dists(dists)
    _check_specs(N)

    if not p >= 1:
        raise ValueError("p %s must be >= 1" % p)

    alpha = tail_level(p)
    required = int(np.ceil(TAIL_RESOLUTION / alpha))

    if cfg.samples_per_batch < required:
        raise InsufficientSamplesError("insufficient tail resolution: "
                                       "%d samples per batch, %d required "
                                       "at p=%g"
                                       % (cfg.samples_per_batch,
                                          required, p))

    results = mapper(hj_batch, cfg.batches, dists, N, float(p), alpha,
                     cfg.samples_per_batch, cfg.seed)
    moment = fold_batches([r[0] for r in results])
    order = fold_batches([r[1] for r in results])
    v_norm = ri_eval(Lp(p), restrict_unit(disjunctify(dists)))
    rhs = order.value + v_norm

    return Report("hj_moments", report_inputs(dists, cfg, N=N, p=p),
                  moment.value, rhs, moment.value / rhs,
                  moment.stderr, None,
                  {"alpha": alpha,
                   "tail_quantile": order.value,
                   "tail_quantile_stderr": order.stderr,
                   "V_norm": v_norm})


def ri_moment_batch(dists, N, M, samples, seed, batch):
    """ :math:`(\\|U\\|_M, \\|U\\|_1)` of one batch """
    w = sample_norms(dists, N, samples, seed, batch)
    return ri_eval(M, empirical_quantile(w)), float(np.mean(w))


def ri_moment_check(dists, N, M, cfg, mapper=batch_map):
    """
    Ratio :math:`\\|U\\|_M / (\\|U\\|_1 + \\|V\\|_M)` for disjoint
    vectors, where :math:`U = \\|(X_i)\\|_N`. The equivalence
    constant depends on ``M``, so only the ratio is recorded.
    """
    dists = _check_dists(dists)
    _check_specs(N, M)

    results = mapper(ri_moment_batch, cfg.batches, dists, N, M,
                     cfg.samples_per_batch, cfg.seed)
    norm_m = fold_batches([r[0] for r in results])
    norm_1 = fold_batches([r[1] for r in results])
    v_norm = ri_eval(M, restrict_unit(disjunctify(dists)))
    rhs = norm_1.value + v_norm

    return Report("ri_moments", report_inputs(dists, cfg, N=N, M=M),
                  norm_m.value, rhs, norm_m.value / rhs,
                  norm_m.stderr, None,
                  {"U_1": norm_1.value,
                   "U_1_stderr": norm_1.stderr,
                   "V_norm": v_norm})


def exceedance_batch(dists, N, thresholds, samples, seed, batch):
    """ Counts of :math:`W` above each threshold in one batch """
    w = sample_norms(dists, N, samples, seed, batch)
    return exceedance_counts(w, thresholds)


def tail_bound_check(dists, N, M, cfg, mapper=batch_map,
                     min_samples=10**4):
    """
    Empirical :math:`P(\\|(X_i)\\|_N > 200 \\|Y\\|_P)`, which
    must not exceed :math:`1/(4e)` beyond three binomial
    standard errors taken at that level.

    Exceedances of :math:`\\|Y\\|_P` and :math:`10 \\|Y\\|_P`
    are recorded in ``details``.
    """
    dists = _check_dists(dists)
    _check_specs(N, M)

    if cfg.total_samples < min_samples:
        raise InsufficientSamplesError("insufficient tail resolution: "
                                       "%d samples, %d required"
                                       % (cfg.total_samples, min_samples))

    D = disjunctify(dists)
    p_norm = p_eval(PFunctional(M, N, D.n), tabulate(D))
    multiples = np.array([1.0, 10.0, TAIL_THRESHOLD])
    thresholds = p_norm * multiples

    counts = mapper(exceedance_batch, cfg.batches, dists, N, thresholds,
                    cfg.samples_per_batch, cfg.seed)
    counts = np.sum(np.stack(counts), axis=0)
    frequency = counts / float(cfg.total_samples)

    stderr = np.sqrt(TAIL_PROBABILITY * (1.0 - TAIL_PROBABILITY) /
                     cfg.total_samples)
    observed = float(frequency[-1])
    passed = bool(observed <= TAIL_PROBABILITY + 3.0 * stderr)

    log.debug("Tail exceedances %s of thresholds %s", counts, thresholds)

    return Report("tail_bound", report_inputs(dists, cfg, N=N, M=M),
                  observed, TAIL_PROBABILITY,
                  observed / TAIL_PROBABILITY,
                  stderr, passed,
                  {"P_norm": p_norm,
                   "multiples": multiples,
                   "exceedance": frequency})
