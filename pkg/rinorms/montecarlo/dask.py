# -*- coding: utf-8 -*-


from functools import partial
import logging

try:
    import dask
except ImportError as e:
    opt_import_error = e
else:
    opt_import_error = None

from rinorms.montecarlo.estimate import (BATCH_MAP_DOCSTRING,
                                         ESTIMATE_LHS_DOCSTRING,
                                         _check_dists, _check_specs,
                                         fold_batches, lhs_batch)
from rinorms.util.requirements import requires_optional

log = logging.getLogger(__name__)


@requires_optional('dask', opt_import_error)
def batch_map(fn, batches, *args, scheduler=None):
    # Arguments travel inside the partial, untouched by dask
    task = dask.delayed(partial(fn, *args))
    tasks = [task(b) for b in range(batches)]
    log.debug("Computing %d batches with dask", batches)

    return list(dask.compute(*tasks, scheduler=scheduler))


@requires_optional('dask', opt_import_error)
def estimate_lhs(dists, N, M, cfg, scheduler=None):
    """ Dask wrapper of the estimate_lhs function """
    dists = _check_dists(dists)
    _check_specs(N, M)

    values = batch_map(lhs_batch, cfg.batches, dists, N, M,
                       cfg.samples_per_batch, cfg.seed,
                       scheduler=scheduler)

    return fold_batches(values)


try:
    batch_map.__doc__ = BATCH_MAP_DOCSTRING.substitute(
                            execution="as one :func:`dask.delayed` "
                                      "task per batch")
except AttributeError:
    pass

try:
    estimate_lhs.__doc__ = ESTIMATE_LHS_DOCSTRING.substitute(
                            execution="as :func:`dask.delayed` tasks",
                            extra_params="scheduler : str, optional\n"
                                         "    dask scheduler, "
                                         "the dask default if None\n")
except AttributeError:
    pass
