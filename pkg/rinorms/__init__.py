# -*- coding: utf-8 -*-

"""Top-level package for rinorms."""


# NOTE(rinorms)
# Imports at this level should be avoided as setup.py
# accesses the ``rinorms.install`` modules before the
# compiled dependencies are guaranteed to be present.

__author__ = """rinorms developers"""
__email__ = 'rinorms@users.noreply.github.com'
__version__ = '0.1.0'
