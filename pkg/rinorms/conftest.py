# -*- coding: utf-8 -*-


from rinorms.util.testing import mark_in_pytest


def pytest_configure(config):
    config.addinivalue_line("markers",
                            "slow: long running Monte Carlo checks")
    mark_in_pytest(True)


def pytest_unconfigure(config):
    mark_in_pytest(False)
