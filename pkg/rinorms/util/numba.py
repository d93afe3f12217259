# -*- coding: utf-8 -*-


from decorator import decorate

from rinorms.util.docs import on_rtd

# Compilation options of every sample-matrix kernel
KERNEL_OPTIONS = {"nogil": True, "cache": True}


def _passthrough(*args, **kwargs):
    def decorator(fn):
        return decorate(fn, lambda f, *a, **kw: f(*a, **kw))

    return decorator


if on_rtd():
    njit = _passthrough
else:
    from numba import njit  # noqa


def kernel(fn):
    """ Compiles ``fn`` with :func:`numba.njit` and :data:`KERNEL_OPTIONS` """
    return njit(**KERNEL_OPTIONS)(fn)
