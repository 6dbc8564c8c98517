# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import sys

import click

from ctmap.const import REPORT_HEADER_DISTORTION
from ctmap.group import distortion_profile
from ctmap.group import make_subgroup
from ctmap.group import parse_model
from ctmap.run import pipeline
from ctmap.run import Report
from ctmap.run import run
from ctmap.run import RunConfig
from ctmap.util import split_list


@click.command('distortion', short_help='Subgroup distortion profile.')
@click.option(
    '--subgroup', '-s', 'subgroup',
    help='fiber, whole or factor:k.',
    default='fiber',
    show_default=True
)
@click.option(
    '--radii', '-r', 'radii',
    help='Comma-separated ball radii.',
    default='2,4,6',
    show_default=True
)
@click.argument('model', metavar="MODEL")
@click.pass_context
def cmd_distortion(ctx, model, subgroup='fiber', radii='2,4,6'):
    """
    Intrinsic diameter of a subgroup within balls of the ambient group
    MODEL, divided by the radius.  MODEL is free:N or fbc:N:<rules>.
    """
    config = RunConfig.from_context(ctx.obj, 'distortion', [model], {
        'subgroup': subgroup,
        'radii': split_list(radii),
    })
    sys.exit(run(config, ctx.obj))


@pipeline('distortion')
def ctmap_distortion(ctx, config):
    model = parse_model(config.inputs[0])
    subgroup = make_subgroup(model, config.options.get('subgroup', 'fiber'))
    table = distortion_profile(model, subgroup, config.options.get('radii') or [2, 4, 6])

    return Report(
        REPORT_HEADER_DISTORTION,
        table.csv_rows(),
        details={
            'ratios': [str(r) for r in table.ratios],
            'superlinear': table.superlinear,
        },
    )
