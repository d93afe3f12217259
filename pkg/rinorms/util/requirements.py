# -*- coding: utf-8 -*-


import importlib

from decorator import decorate

from rinorms.util.docs import on_rtd
from rinorms.util.testing import in_pytest, force_missing_pkg_exception


class MissingPackageException(Exception):
    """ Raised when calling a function whose optional packages are absent """
    pass


def _classify(requirements):
    missing, imported, import_errors = [], [], []
    force = False

    for requirement in requirements:
        if requirement is None:
            continue
        elif requirement is force_missing_pkg_exception:
            force = True
        elif isinstance(requirement, ImportError):
            import_errors.append(requirement)
        elif isinstance(requirement, str):
            try:
                importlib.import_module(requirement)
            except ImportError:
                missing.append(requirement)
            else:
                imported.append(requirement)
        else:
            raise TypeError("requirements must be None, package names "
                            "or ImportErrors. Received %r" % (requirement,))

    return missing, imported, import_errors, force


def _rtd_stub(fn):
    return decorate(fn, lambda f, *args, **kwargs: None)


def requires_optional(*requirements):
    """
    Guards a function on optional packages.

    The function is returned unchanged when every package
    imports. Otherwise calling it raises a
    :class:`MissingPackageException`, or skips the
    test when running inside pytest.

    .. code-block:: python

        try:
            import dask
        except ImportError as e:
            opt_import_error = e
        else:
            opt_import_error = None

        @requires_optional('dask', opt_import_error)
        def batch_map(fn, batches, *args, scheduler=None):
            ...

    Parameters
    ----------
    requirements : iterable of str, None or ImportError
        Package names, and the ImportErrors (or None)
        captured while importing them at module level.

    Raises
    ------
    ImportError
        If every named package imports but an
        ImportError was supplied anyway.
    """
    if on_rtd():
        return _rtd_stub

    missing, imported, import_errors, force = _classify(requirements)

    if len(missing) == 0 and len(import_errors) > 0:
        raise ImportError("Successfully imported %s but the following "
                          "ImportErrors were supplied:\n%s"
                          % (imported,
                             "\n".join(str(e) for e in import_errors)))

    def decorator(fn):
        if len(missing) == 0:
            return fn

        msg = ("%s requires installation of the following packages: %s."
               % (fn.__name__, tuple(missing)))

        if len(import_errors) > 0:
            msg += "\n" + "\n".join(str(e) for e in import_errors)

        def unavailable(f, *args, **kwargs):
            if not force and in_pytest():
                import pytest
                pytest.skip(msg)

            raise MissingPackageException(msg)

        return decorate(fn, unavailable)

    return decorator
