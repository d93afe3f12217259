# -*- coding: utf-8 -*-


import csv
import json
import logging

import numpy as np

from rinorms.montecarlo.report import jsonable

log = logging.getLogger(__name__)

RESULT_COLUMNS = ("lhs", "rhs", "ratio", "stderr", "pass")


def format_cell(value):
    """
    CSV cell of ``value``. Floats keep 17 significant
    digits, so that cells read back bit-identical.
    """
    if value is None:
        return ""
    elif isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    elif isinstance(value, (int, np.integer)):
        return "%d" % value
    elif isinstance(value, (float, np.floating)):
        return "%.17g" % value
    elif isinstance(value, dict):
        return ";".join("%s=%s" % (k, format_cell(v))
                        for k, v in sorted(value.items()))

    return str(value)


def header(experiment):
    """ Fixed CSV header of an experiment """
    return (list(experiment.columns) + list(RESULT_COLUMNS) +
            list(experiment.extras))


def result_row(experiment, report):
    """ CSV cells of one report, ordered as :func:`header` """
    values = report.to_dict()
    inputs = values["inputs"]
    details = values["details"]

    return ([format_cell(inputs.get(c)) for c in experiment.columns] +
            [format_cell(values[c]) for c in RESULT_COLUMNS] +
            [format_cell(details.get(c)) for c in experiment.extras])


def write_results(filename, experiment, reports):
    """ Write ``results.csv``: one row per report """
    with open(filename, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header(experiment))

        for report in reports:
            writer.writerow(result_row(experiment, report))

    log.info("Wrote %d rows to %s", len(reports), filename)


def write_summary(filename, summary):
    """ Write ``summary.json`` """
    with open(filename, "w") as f:
        json.dump(jsonable(summary), f, indent=2, sort_keys=True)
        f.write("\n")

    log.info("Wrote summary to %s", filename)
