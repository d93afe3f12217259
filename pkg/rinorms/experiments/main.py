#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Runs a configured experiment and writes ``results.csv``
and ``summary.json`` into the output directory.
"""

import argparse
import logging
import os
from os.path import join as pjoin
import sys

import numpy as np

from rinorms import __version__
from rinorms.experiments.config import (ConfigError, load_config,
                                        load_windows, parse_overrides)
from rinorms.experiments.output import write_results, write_summary
from rinorms.experiments.registry import (EXPERIMENTS,
                                          UnknownExperimentError,
                                          get_experiment)
from rinorms.montecarlo import InsufficientSamplesError, batch_map
from rinorms.util.requirements import MissingPackageException

log = logging.getLogger(__name__)

# Experiments whose ratio must be stable across an n sweep
CV_EXPERIMENTS = ("main_equivalence", "rosenthal")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def create_parser():
    p = argparse.ArgumentParser(prog="rinorms-experiment",
                                description=__doc__)
    p.add_argument("--config", type=str,
                   help="Experiment configuration file")
    p.add_argument("--seed", type=int,
                   help="Overrides the configured seed")
    p.add_argument("--samples", type=int,
                   help="Overrides the samples per batch")
    p.add_argument("--out", type=str,
                   help="Output directory")
    p.add_argument("--experiment", type=str,
                   help="Overrides the configured experiment")
    p.add_argument("--list", action="store_true",
                   help="List the registered experiments and exit")
    p.add_argument("--set", type=str, default="", dest="overrides",
                   help="Configuration overrides, "
                        "for example \"m=4; sweep={'n': [8, 16]}\"")
    p.add_argument("--log-level", type=str, default="INFO",
                   choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return p


def ratio_stability(config, reports, cv_max):
    """
    Coefficient of variation of the ratios across the n sweep,
    for every combination of the remaining sweep keys
    """
    groups = {}

    for point, report in reports:
        key = tuple(sorted((k, v) for k, v in point.items() if k != "n"))
        groups.setdefault(key, []).append(report.ratio)

    stability = []

    for key, ratios in groups.items():
        if len(ratios) < 2:
            continue

        ratios = np.asarray(ratios, dtype=np.float64)
        cv = float(np.std(ratios) / np.mean(ratios))
        passed = bool(np.isfinite(cv) and cv < cv_max)

        if not passed:
            log.error("Ratio coefficient of variation %.3g at %s "
                      "exceeds %g", cv, dict(key), cv_max)

        stability.append({"group": dict(key), "cv": cv, "pass": passed})

    return stability


def run(config, windows=None, out=None):
    """
    Executes the configured experiment over its sweep.

    Returns
    -------
    tuple
        :code:`(exit_code, artifacts)` where ``artifacts``
        maps ``results`` and ``summary`` to written files.
    """
    experiment = get_experiment(config.experiment)
    windows = load_windows() if windows is None else windows

    if config.options["parallel"]:
        from rinorms.montecarlo.dask import batch_map as mapper
    else:
        mapper = batch_map

    if out is None:
        out = config.out

    if out is None:
        from rinorms.util.appdirs import experiment_dir
        out = experiment_dir(experiment.name)

    os.makedirs(out, exist_ok=True)

    reports = []
    failure = None

    for i, point in enumerate(config.points()):
        log.info("%s: point %d %s", experiment.name, i, point)

        try:
            report = experiment.fn(config, point, windows, mapper)
        except (ConfigError, InsufficientSamplesError):
            raise
        except (ArithmeticError, ValueError) as e:
            log.error("%s: row %d %s failed: %s",
                      experiment.name, i, point, e)
            failure = {"row": i, "point": point, "error": str(e)}
            break

        if report is None:
            continue

        log.debug("%s: %s", experiment.name, report.to_json())

        if report.passed is False:
            log.error("%s: row %d %s failed with ratio %r",
                      experiment.name, i, point, report.ratio)

        reports.append((point, report))

    stability = []

    swept = len(config.sweep.get("n", [])) > 1

    if experiment.name in CV_EXPERIMENTS and swept:
        stability = ratio_stability(config, reports, windows.cv_max)

    passed = (failure is None and
              all(r.passed is not False for _, r in reports) and
              all(s["pass"] for s in stability))

    artifacts = {"results": pjoin(out, "results.csv"),
                 "summary": pjoin(out, "summary.json")}

    write_results(artifacts["results"], experiment,
                  [r for _, r in reports])
    write_summary(artifacts["summary"], {
        "experiment": experiment.name,
        "version": __version__,
        "seed": config.mc.seed,
        "samples_per_batch": config.mc.samples_per_batch,
        "batches": config.mc.batches,
        "windows_version": windows.version,
        "window": windows.ranges.get(experiment.name),
        "inputs": config.literal,
        "rows": [{"point": point, "pass": r.passed, "report": r.to_dict()}
                 for point, r in reports],
        "stability": stability,
        "failure": failure,
        "pass": passed,
    })

    return (EXIT_OK if passed else EXIT_FAILED), artifacts


def main(argv=None):
    args = create_parser().parse_args(argv)

    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(asctime)s %(name)s "
                               "%(levelname)s: %(message)s")

    if args.list:
        for name, experiment in EXPERIMENTS.items():
            print("%-18s %s" % (name, experiment.description))

        return EXIT_OK

    if not args.config:
        log.error("--config is required")
        return EXIT_CONFIG

    try:
        overrides = parse_overrides(args.overrides)

        for key, value in (("seed", args.seed),
                           ("samples", args.samples),
                           ("experiment", args.experiment)):
            if value is not None:
                overrides[key] = value

        config = load_config(args.config, overrides)
        code, artifacts = run(config, out=args.out)
    except (ConfigError, UnknownExperimentError,
            InsufficientSamplesError, MissingPackageException) as e:
        log.error("%s", e)
        return EXIT_CONFIG

    log.info("Results in %s", artifacts["results"])

    return code


if __name__ == "__main__":
    sys.exit(main())
