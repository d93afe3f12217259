# flake8: noqa

from rinorms.experiments.config import (ConfigError,
                                        ExperimentConfig,
                                        Windows,
                                        coefficients,
                                        build_family,
                                        expand_dists,
                                        make_config,
                                        load_config,
                                        load_windows)
from rinorms.experiments.registry import (EXPERIMENTS,
                                          Experiment,
                                          UnknownExperimentError,
                                          get_experiment)
from rinorms.experiments.main import run, main
