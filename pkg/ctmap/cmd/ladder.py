# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click
import numpy as np

from ctmap.cmd.assemble import load_instance
from ctmap.config import serialize_config
from ctmap.const import REPORT_HEADER_QUANTITY
from ctmap.error import InvalidSpecification
from ctmap.hyperbolic.audit import AUDIT_RETRACTION
from ctmap.ladder import build_ladder
from ctmap.ladder import ladder_constants
from ctmap.ladder import retraction_report
from ctmap.logger import logger
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig
from ctmap.util import split_list

LADDER_FILENAME = "ladder.yaml"


@click.command('ladder', short_help='Build a ladder and audit its retraction.')
@click.option(
    '--lambda', '-l', 'ends',
    help='Ends a,b of the base geodesic in the root space '
         '[default: 0 and the first vertex farthest from it].',
    metavar="A,B"
)
@click.option(
    '--C', '-c', 'C',
    help='Neighbourhood constant [default: calibrated C1 + C2].',
    type=int
)
@click.option(
    '--D', '-d', 'D',
    help='Width threshold [default: calibrated D].',
    type=int
)
@click.argument('spec', metavar="SPEC")
@click.pass_context
def cmd_ladder(ctx, spec, ends=None, C=None, D=None):
    """
    Propagate a geodesic of the root space through the tree-of-spaces file
    SPEC and measure the retraction onto the resulting ladder.  The ladder
    itself is written to ladder.yaml.
    """
    config = RunConfig.from_context(ctx.obj, 'ladder', [spec], {
        'lambda': split_list(ends),
        'C': C,
        'D': D,
    })
    sys.exit(run(config, ctx.obj))


def default_ends(space):
    row = space.distances_from(0)
    return 0, int(np.argmax(row))


def resolve_constants(ctx, tos, C=None, D=None):
    """Explicit constants win; the rest come from calibration."""
    if C is not None and D is not None:
        return C, D

    settings = ctx.settings
    constants = ladder_constants(
        tos,
        cap=settings.calibrate_cap,
        samples=settings.calibrate_samples,
        max_d=settings.calibrate_max_d,
    )
    logger.info("Calibrated C1=%d C2=%d D=%d", constants.C1, constants.C2, constants.D)
    return (constants.C if C is None else C), (constants.D if D is None else D)


@pipeline('ladder')
def ctmap_ladder(ctx, config):
    tos, total = load_instance(ctx, config)
    space = tos.space(tos.root)

    ends = config.options.get('lambda') or default_ends(space)
    if len(ends) != 2:
        raise InvalidSpecification("--lambda takes two vertex ids, got %s" % list(ends))

    C, D = resolve_constants(ctx, tos, config.options.get('C'), config.options.get('D'))
    ladder = build_ladder(tos, total, space.geodesic(*ends), C, D)
    report = retraction_report(
        tos, total, ladder, mode=config.mode,
        cap=config.cap or ctx.settings.exhaustive_cap)

    rows = [
        ["support", len(ladder.support), "-".join(str(v) for v in sorted(ladder.support))],
        ["C", C, ""],
        ["D", D, ""],
    ]
    rows += report.rows()

    return Report(
        REPORT_HEADER_QUANTITY, rows, passed=report.fixes_ladder,
        details={
            'audit': AUDIT_RETRACTION,
            'ladder_digest': ladder.digest,
        },
        extra_files={LADDER_FILENAME: serialize_config(ladder.dump())},
    )
