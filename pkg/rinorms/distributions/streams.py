# -*- coding: utf-8 -*-


import numpy as np


def rng_stream(seed, *key):
    """
    Deterministic random stream for ``seed`` and a spawn ``key``,
    for example :code:`rng_stream(seed, batch_index)`.

    Streams with distinct keys are statistically independent,
    so parallel workers never share a stream.

    Returns
    -------
    :class:`numpy.random.Generator`
    """
    seq = np.random.SeedSequence(entropy=int(seed) % 2**64,
                                 spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.PCG64(seq))
