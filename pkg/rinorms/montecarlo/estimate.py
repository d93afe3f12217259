# -*- coding: utf-8 -*-


from collections import namedtuple
import logging

import numpy as np

from rinorms.distributions import Distribution, draw_matrix, rng_stream
from rinorms.norms import (Linf, RiNormSpec, SeqNormSpec,
                           ri_eval, seq_eval, seq_eval_rows)
from rinorms.norms.kernels import prefix_maxima
from rinorms.rearrange import (at_integers, disjunctify,
                               empirical_quantile, restrict_unit)
from rinorms.util.docs import DocstringTemplate

log = logging.getLogger(__name__)


class McConfig(namedtuple("McConfig", "samples_per_batch batches seed")):
    """
    Monte Carlo configuration. Batch ``b`` draws from
    :code:`rng_stream(seed, b)`, so identical configurations
    produce identical results.
    """
    __slots__ = ()

    def __new__(cls, samples_per_batch, batches, seed):
        if (int(samples_per_batch) != samples_per_batch or
                samples_per_batch < 1):
            raise ValueError("samples_per_batch %s must be an integer >= 1"
                             % samples_per_batch)

        if int(batches) != batches or batches < 2:
            raise ValueError("batches %s must be an integer >= 2" % batches)

        if int(seed) != seed or not 0 <= seed < 2**64:
            raise ValueError("seed %s must be a 64-bit unsigned integer"
                             % seed)

        return super(McConfig, cls).__new__(cls, int(samples_per_batch),
                                            int(batches), int(seed))

    @property
    def total_samples(self):
        return self.samples_per_batch * self.batches


class Estimate(namedtuple("Estimate", "value stderr batches")):
    """ Mean of the batch values and its standard error """
    __slots__ = ()


MaxSumSample = namedtuple("MaxSumSample", "U W")
MaxSumSample.__doc__ = """
Per-sample maximal partial sums :math:`U = \\max_k \\|\\sum_{i \\le k}
X_i e_i\\|_N` and full norms :math:`W = \\|(X_i)\\|_N`.
"""


def _check_dists(dists):
    if len(dists) == 0:
        raise ValueError("At least one distribution is required")

    for d in dists:
        if not isinstance(d, Distribution):
            raise TypeError("%s is not a Distribution" % (d,))

    return list(dists)


def _check_specs(N, M=None):
    if not isinstance(N, SeqNormSpec):
        raise TypeError("%s is not a sequence norm spec" % (N,))

    if M is not None and not isinstance(M, RiNormSpec):
        raise TypeError("%s is not an r.i. norm spec" % (M,))


def fold_batches(values):
    """
    Fold batch values, in batch index order, into an :class:`Estimate`
    """
    values = np.asarray(values, dtype=np.float64)
    value = float(np.mean(values))

    if np.all(np.isfinite(values)):
        stderr = float(np.std(values, ddof=1) / np.sqrt(values.shape[0]))
    else:
        stderr = np.inf

    return Estimate(value, stderr, values.shape[0])


BATCH_MAP_DOCSTRING = DocstringTemplate("""
Evaluates :code:`fn(*args, b)` for every batch index
:code:`b` in :code:`range(batches)`, $(execution).

Parameters
----------
fn : callable
    Batch function. Its last argument is the batch index,
    from which it derives its random stream.
batches : int
    Number of batches
*args : tuple
    Leading arguments of ``fn``

Returns
-------
list
    Batch results ordered by batch index
""")


def batch_map(fn, batches, *args):
    results = []

    for b in range(batches):
        results.append(fn(*args, b))
        log.debug("Batch %d/%d done", b + 1, batches)

    return results


batch_map.__doc__ = BATCH_MAP_DOCSTRING.substitute(execution="serially")


def sample_norms(dists, N, samples, seed, batch):
    """ Sequence norms :math:`W` of one batch of draws """
    xs = draw_matrix(dists, rng_stream(seed, batch), samples)
    return seq_eval_rows(N, xs)


def lhs_batch(dists, N, M, samples, seed, batch):
    """ :math:`\\|W\\|_M` of the empirical law of one batch """
    w = sample_norms(dists, N, samples, seed, batch)
    return ri_eval(M, empirical_quantile(w))


ESTIMATE_LHS_DOCSTRING = DocstringTemplate("""
Monte Carlo estimate of :math:`\\|\\|(X_i)\\|_N\\|_M`.

Every batch draws ``cfg.samples_per_batch`` realisations of
:math:`(|X_1|, \\ldots, |X_n|)`, computes the sequence norm
:math:`W` of each, and applies ``M`` to the empirical quantile
function of :math:`W`. Batches are evaluated $(execution) and
folded in batch index order.

Parameters
----------
dists : list of :class:`~rinorms.distributions.Distribution`
    Laws of :math:`|X_i|`
N : :class:`~rinorms.norms.SeqNormSpec`
    Sequence norm
M : :class:`~rinorms.norms.RiNormSpec`
    Rearrangement invariant norm
cfg : :class:`McConfig`
    Sample sizes and seed
$(extra_params)
Returns
-------
:class:`Estimate`
    Mean and standard error of the batch values
""")


def estimate_lhs(dists, N, M, cfg, mapper=batch_map):
    dists = _check_dists(dists)
    _check_specs(N, M)

    values = mapper(lhs_batch, cfg.batches, dists, N, M,
                    cfg.samples_per_batch, cfg.seed)

    return fold_batches(values)


estimate_lhs.__doc__ = ESTIMATE_LHS_DOCSTRING.substitute(
                            execution="serially by default",
                            extra_params="mapper : callable, optional\n"
                                         "    Batch evaluator with the "
                                         "signature of :func:`batch_map`\n")


def rhs_eval(dists, N, M):
    """
    :math:`\\|Y|_{[0,1]}\\|_M + \\|(Y(i))_{i=1}^n\\|_N`
    of the disjunctification :math:`Y` of ``dists``
    """
    dists = _check_dists(dists)
    _check_specs(N, M)

    D = disjunctify(dists)

    return ri_eval(M, restrict_unit(D)) + seq_eval(N, at_integers(D))


def maximal_sums(N, xs):
    """
    Maximal partial sums of the disjoint vectors
    :math:`Z_i = X_i e_i` for every row of ``xs``.

    The prefix :math:`\\sum_{i \\le k} Z_i` is the vector
    :math:`(X_1, \\ldots, X_k, 0, \\ldots, 0)`, so :math:`U` is the
    running maximum of the prefix norms. As the norms are monotone
    :math:`U` coincides with :math:`W`, up to the rounding of the
    Luxemburg bisection for Orlicz sequence norms.

    Parameters
    ----------
    N : :class:`~rinorms.norms.SeqNormSpec`
        Sequence norm
    xs : :class:`numpy.ndarray`
        Draws of shape :code:`(rows, n)`

    Returns
    -------
    :class:`MaxSumSample`
    """
    _check_specs(N)
    xs = np.abs(np.asarray(xs, dtype=np.float64))

    if xs.ndim != 2 or xs.shape[1] == 0:
        raise ValueError("xs must have shape (rows, n) with n >= 1")

    if isinstance(N, Linf):
        running = prefix_maxima(xs)
        return MaxSumSample(running[:, -1].copy(), xs.max(axis=1))

    U = np.zeros(xs.shape[0])

    for k in range(1, xs.shape[1] + 1):
        U = np.maximum(U, seq_eval_rows(N, xs[:, :k]))

    return MaxSumSample(U, seq_eval_rows(N, xs))
