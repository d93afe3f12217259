# flake8: noqa

from rinorms.montecarlo.estimate import (McConfig,
                                         Estimate,
                                         MaxSumSample,
                                         batch_map,
                                         fold_batches,
                                         estimate_lhs,
                                         rhs_eval,
                                         maximal_sums)
from rinorms.montecarlo.report import (Report,
                                       InsufficientSamplesError)
from rinorms.montecarlo.checks import (max_sandwich_check,
                                       selector_experiment,
                                       hj_moment_check,
                                       ri_moment_check,
                                       tail_bound_check,
                                       tail_level)
