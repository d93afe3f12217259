# -*- coding: utf-8 -*-


from os.path import join as pjoin

from appdirs import user_data_dir

from rinorms import __version__

# Experiment runs land here unless an output directory is configured
runs_dir = pjoin(user_data_dir("rinorms", "rinorms", __version__), "runs")


def experiment_dir(name):
    """ Default output directory of experiment ``name`` """
    return pjoin(runs_dir, name)
