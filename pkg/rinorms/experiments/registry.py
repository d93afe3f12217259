# -*- coding: utf-8 -*-


from collections import OrderedDict, namedtuple
import logging

import numpy as np

from rinorms.distributions import Gaussian, ScaledAbsBase, normalized
from rinorms.distributions import from_literal as dist_from_literal
from rinorms.experiments.config import ConfigError
from rinorms.montecarlo import (Report, estimate_lhs, hj_moment_check,
                                rhs_eval, ri_moment_check,
                                selector_experiment, tail_bound_check)
from rinorms.montecarlo.checks import report_inputs
from rinorms.norms import Linf, Lp, LpSeq, TopM
from rinorms.orlicz import (gauss_rhs_closed, lambda_function, lambda_norm,
                            theta_for, theta_top_m)

log = logging.getLogger(__name__)


class UnknownExperimentError(KeyError):
    """ Raised when an experiment name is not registered """

    def __str__(self):
        return self.args[0] if self.args else ""


Experiment = namedtuple("Experiment", "name fn columns extras description")


def within(ratios, window):
    """ True when every ratio is finite and inside ``window`` """
    lo, hi = window
    ratios = np.asarray(ratios, dtype=np.float64)

    return bool(np.all(np.isfinite(ratios)) and
                np.all((lo <= ratios) & (ratios <= hi)))


def _xi(config):
    try:
        return dist_from_literal(config.options["xi"])
    except (ValueError, TypeError) as e:
        raise ConfigError("Invalid xi: %s" % e)


def _scaled(a, base):
    return [ScaledAbsBase(c, base) for c in a]


def _equivalence(name, config, point, windows, mapper):
    dists = config.dists_at(point)
    N = config.N_at(point)

    lhs = estimate_lhs(dists, N, config.M, config.mc, mapper=mapper)
    rhs = rhs_eval(dists, N, config.M)
    ratio = lhs.value / rhs

    return Report(name, report_inputs(dists, config.mc, N=N, M=config.M),
                  lhs.value, rhs, ratio, lhs.stderr,
                  within(ratio, windows.ranges[name]))


def main_equivalence(config, point, windows, mapper):
    """
    Monte Carlo :math:`\\|\\|(X_i)\\|_N\\|_M` against
    :math:`\\|Y|_{[0,1]}\\|_M + \\|(Y(i))\\|_N`
    """
    return _equivalence("main_equivalence", config, point, windows, mapper)


def rosenthal(config, point, windows, mapper):
    """ The main equivalence for lp(1) or lp(2) and Lp """
    N = config.N_at(point)

    if not (isinstance(N, LpSeq) and N.p in (1.0, 2.0)):
        raise ConfigError("rosenthal requires N = lp(1) or lp(2), got %s"
                          % (N,))

    if not isinstance(config.M, Lp):
        raise ConfigError("rosenthal requires M = Lp(p), got %s"
                          % (config.M,))

    return _equivalence("rosenthal", config, point, windows, mapper)


def gauss_km(config, point, windows, mapper):
    """
    Expected sum of the ``m`` largest :math:`|a_i \\gamma_i|` against
    the Luxemburg norm of :math:`(a_i)` under :math:`\\Lambda` and the
    closed form. The family only supplies the coefficients.
    """
    a = config.coefficients_at(point)
    n, m = len(a), config.m_at(point)

    if m > n:
        log.info("Skipping m=%d > n=%d", m, n)
        return None

    dists = _scaled(a, Gaussian(1.0))
    N, M = TopM(m), Lp(1)

    lhs = estimate_lhs(dists, N, M, config.mc, mapper=mapper)
    closed = gauss_rhs_closed(a, m)
    lam = lambda_norm(a, lambda_function(theta_top_m(m), Gaussian(1.0)))

    ratios = [lhs.value / closed, lhs.value / lam, lam / closed]

    return Report("gauss_km",
                  report_inputs(dists, config.mc, m=m, N=N, M=M),
                  lhs.value, closed, ratios[0], lhs.stderr,
                  within(ratios, windows.ranges["gauss_km"]),
                  {"lambda_norm": lam, "lambda_ratio": ratios[1],
                   "lambda_closed_ratio": ratios[2]})


def orlicz_lambda(config, point, windows, mapper):
    """
    Monte Carlo :math:`\\|\\|(a_i \\xi_i)\\|_N\\|_M` against the
    Luxemburg norm of :math:`(a_i)` under
    :math:`\\Lambda(x) = E\\,\\Theta(x|\\xi|)`
    """
    xi = _xi(config)
    a = config.coefficients_at(point)
    N, M = config.N_at(point), config.M

    if isinstance(N, TopM) and M == Lp(1):
        theta = theta_top_m(N.m)
    else:
        try:
            theta = theta_for(M, N)
        except ValueError as e:
            raise ConfigError(str(e))

    dists = _scaled(a, xi)
    lhs = estimate_lhs(dists, N, M, config.mc, mapper=mapper)
    rhs = lambda_norm(a, lambda_function(theta, xi))
    ratio = lhs.value / rhs

    return Report("orlicz_lambda",
                  report_inputs(dists, config.mc, N=N, M=M),
                  lhs.value, rhs, ratio, lhs.stderr,
                  within(ratio, windows.ranges["orlicz_lambda"]),
                  {"theta_norm": lambda_norm(a, theta),
                   "theta": theta.label})


def selector(config, point, windows, mapper):
    """ Selector expectation against its disjoint counterpart """
    report = selector_experiment(config.dists_at(point), config.m_at(point),
                                 config.mc, mapper=mapper)

    return report._replace(passed=within(report.ratio,
                                         windows.ranges["selector"]))


def hj_moments(config, point, windows, mapper):
    """ :math:`\\|U\\|_p` against :math:`U^\\#(e^{-p}/4) + \\|V\\|_p` """
    report = hj_moment_check(config.dists_at(point), config.N_at(point),
                             config.p_at(point), config.mc, mapper=mapper)

    return report._replace(passed=within(report.ratio,
                                         windows.ranges["hj_moments"]))


def tail_bound(config, point, windows, mapper):
    """ Exceedance of 200 times the P-norm, at most 1/(4e) """
    return tail_bound_check(config.dists_at(point), config.N_at(point),
                            config.M, config.mc, mapper=mapper)


def remark_iid(config, point, windows, mapper):
    """
    :math:`\\|\\|(a_i \\xi_i)\\|_{k_m}\\|_1` for identically
    distributed :math:`\\xi_i` with :math:`E|\\xi_i| = 1`, against
    :math:`\\sum_{i \\le m} a^*_i + m \\|\\|(a^*_{mi} \\xi_i)\\|_\\infty\\|_1`
    """
    try:
        xi = normalized(_xi(config))
    except ValueError as e:
        raise ConfigError(str(e))

    a = np.sort(np.abs(config.coefficients_at(point)))[::-1]
    n, m = a.size, config.m_at(point)

    if m > n:
        log.info("Skipping m=%d > n=%d", m, n)
        return None

    dists = _scaled(a, xi)
    lhs = estimate_lhs(dists, TopM(m), Lp(1), config.mc, mapper=mapper)

    head = float(np.sum(a[:m]))
    tail = estimate_lhs(_scaled(a[m - 1::m], xi), Linf(), Lp(1),
                        config.mc, mapper=mapper)
    rhs = head + m * tail.value
    ratio = lhs.value / rhs

    return Report("remark_iid",
                  report_inputs(dists, config.mc, m=m),
                  lhs.value, rhs, ratio, lhs.stderr,
                  within(ratio, windows.ranges["remark_iid"]),
                  {"head": head, "tail": tail.value,
                   "tail_stderr": tail.stderr})


def ri_moments(config, point, windows, mapper):
    """ :math:`\\|U\\|_M` against :math:`\\|U\\|_1 + \\|V\\|_M` """
    report = ri_moment_check(config.dists_at(point), config.N_at(point),
                             config.M, config.mc, mapper=mapper)

    return report._replace(passed=within(report.ratio,
                                         windows.ranges["ri_moments"]))


_NORMS = ("n", "N", "M")

EXPERIMENTS = OrderedDict((e.name, e) for e in [
    Experiment("main_equivalence", main_equivalence, _NORMS, (),
               "Moment of the sequence norm against the disjoint sum"),
    Experiment("rosenthal", rosenthal, _NORMS, (),
               "Rosenthal's inequality, N = lp(1) or lp(2), M = Lp"),
    Experiment("gauss_km", gauss_km, ("n", "m"),
               ("lambda_norm", "lambda_ratio", "lambda_closed_ratio"),
               "Top-m sums of weighted Gaussians, three ways"),
    Experiment("orlicz_lambda", orlicz_lambda, _NORMS, ("theta_norm",),
               "Weighted i.i.d. variables against the Lambda norm"),
    Experiment("selector", selector, ("n", "m"),
               ("middle", "middle_ratio"),
               "Randomly selected maximum against the disjoint sum"),
    Experiment("hj_moments", hj_moments, ("n", "N", "p"),
               ("tail_quantile", "V_norm"),
               "p-th moment of maximal sums against tail and V"),
    Experiment("tail_bound", tail_bound, _NORMS, ("P_norm",),
               "Tail of the sequence norm beyond 200 P-norms"),
    Experiment("remark_iid", remark_iid, ("n", "m"), ("head", "tail"),
               "Top-m sums of weighted identically distributed variables"),
    Experiment("ri_moments", ri_moments, _NORMS, ("U_1", "V_norm"),
               "M-norm of maximal sums against L1 and V"),
])


def get_experiment(name):
    try:
        return EXPERIMENTS[name]
    except KeyError:
        raise UnknownExperimentError("Unknown experiment '%s'. "
                                     "Registered experiments are %s"
                                     % (name, list(EXPERIMENTS)))
