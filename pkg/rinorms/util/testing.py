# -*- coding: utf-8 -*-


import threading

_lock = threading.Lock()
_state = {"pytest": False}

# Passed to requires_optional to raise even inside pytest
force_missing_pkg_exception = object()


def in_pytest():
    """ True while a pytest session has marked itself """
    with _lock:
        return _state["pytest"]


def mark_in_pytest(in_pytest=True):
    if not isinstance(in_pytest, bool):
        raise TypeError("in_pytest %r is not a bool" % (in_pytest,))

    with _lock:
        _state["pytest"] = in_pytest
